#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cayley {

/// Arbitrary-precision signed integer used for coefficient entries and
/// exponents (diagonal entries reach 2^(n-1) and the CLI accepts user n).
using BigInt = boost::multiprecision::cpp_int;

}  // namespace cayley
