#pragma once

#include <string>
#include <vector>

#include "cayley/bigint.hpp"
#include "cayley/errors.hpp"

namespace cayley {

/// The integer exponent matrix a_ij, 1-based indices, stored densely.
///
/// Base cases: a_11 = -1, a_21 = 1, a_1j = 0 (j > 1), a_i1 = 0 (i > 2);
/// recursion for i,j > 1:
///   a_ij = sum_{l<i} a_{l,j-1} - sum_{l<i} a_{l,j} + a_{i-1,j-1}.
/// Entries grow like 2^(n-1), hence BigInt throughout.
class CoeffMatrix {
public:
    /// Fills the n_max x n_max block by the recursion above.
    static CoeffMatrix build_recursive(int n_max);

    int n_max() const { return n_; }

    /// a_ij for 1 <= i,j <= n_max.
    const BigInt& at(int i, int j) const;
    BigInt& at(int i, int j);  // for fault-injection in tests

private:
    explicit CoeffMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n) {}
    int n_;
    std::vector<BigInt> e_;
};

/// Closed form
///   a_ij = (-1)^(i-j-1) 2^(2j-i)   C(j-1, i-j-1)
///        - (-1)^(i-j)   2^(2j-i-1) C(j-1, i-j),
/// where a term whose binomial coefficient is out of range [0 <= m <= l]
/// is exactly 0 *before* the power of two is formed (whenever the binomial
/// is nonzero the power is nonnegative). Defined for all i,j >= 1; agrees
/// with the recursion everywhere, including the base rows.
BigInt closed_form(int i, int j);

/// C(l, m); 0 outside 0 <= m <= l.
BigInt binomial(long long l, long long m);

/// Per-row verdicts for the four row identities.
struct RowCheck {
    int row = 0;
    bool pass = true;
    std::string first_failure;  // "sum" | "diagonal" | "upper-zero" | "odd-entry"
};

/// For each row n checks: sum_j a_nj = -1; a_nn = -2^(n-1); a_nl = 0 for
/// l > n; exactly one odd entry, at column ceil(n/2).
std::vector<RowCheck> check_row_identities(const CoeffMatrix& m);

/// sum_{j=m..n} a_nj + sum_{j=m..n} a_jm == sum_{j=m+1..n+1} a_{n+1,j}.
/// Requires 1 <= m <= n <= n_max-1; throws IndexOutOfRange otherwise.
bool check_sum_identity(const CoeffMatrix& mat, int m, int n);

}  // namespace cayley
