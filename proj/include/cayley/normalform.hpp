#pragma once

#include <map>
#include <string>
#include <vector>

#include "cayley/coeffs.hpp"
#include "cayley/fingroup.hpp"
#include "cayley/words.hpp"

namespace cayley {

/// Unique representation x^i1 f1 x^-i1 ... x^ij fj x^-ij * x^t with
/// strictly increasing levels and every fi != identity. Valid only over
/// groups of nilpotency class at most two; every operation that rewrites
/// factors checks this and throws ClassTooHigh otherwise.
struct NormalForm {
    std::map<long long, int> levels;  // level -> nonidentity element
    long long t = 0;

    bool is_identity() const { return levels.empty() && t == 0; }
    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// Central factors created when x^n g x^-n moves past h:
/// (l, [g^-1, h^(a_nl)]) for l = 1..n, identity entries omitted.
/// Requires n >= 1 and m.n_max() >= n (CoeffRangeExceeded otherwise).
std::vector<ConjugateFactor> correction(long long n, int g_elem, int h_elem,
                                        const FiniteGroup& g, const CoeffMatrix& m);

NormalForm normalize(const GenWord& w, const FiniteGroup& g);
NormalForm nf_multiply(const NormalForm& a, const NormalForm& b, const FiniteGroup& g);
NormalForm nf_inverse(const NormalForm& a, const FiniteGroup& g);

/// Structural comparison; sound because the representation is unique.
bool nf_equal(const NormalForm& a, const NormalForm& b);

/// x^i g x^-i ... x^t expansion; normalize(to_word(a)) == a.
GenWord to_word(const NormalForm& a);

/// `[level:label][level:label]... x^t`; identity renders as `1`.
std::string display(const NormalForm& a, const FiniteGroup& g);

}  // namespace cayley
