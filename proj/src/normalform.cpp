#include "cayley/normalform.hpp"

#include <algorithm>

namespace cayley {

namespace {

void require_class_two(const FiniteGroup& g) {
    if (!g.is_class_at_most_two()) {
        const auto& w = g.class_witness();
        std::string msg = "group '" + g.name() + "' has nilpotency class > 2";
        if (w)
            msg += " (witness [[" + g.label(w->g) + "," + g.label(w->h) + "]," + g.label(w->z) +
                   "] != identity)";
        throw ClassTooHigh(msg);
    }
}

/// Sorted insertion with correction emission. `sorted` holds the factors
/// collected so far (ascending levels); the arriving factor multiplies on
/// the right. Moving it left past a higher-level factor (L, h) rewrites
///   (L, h)(i, f)  ->  (i, f)(L, h) * prod_{l=1..L-i} (i+l, [h^-1, f^(a_(L-i)l)])
/// and the emitted factors are central (G has class <= 2), so they merge
/// into their levels by plain multiplication without further corrections.
void insert_factor(std::map<long long, int>& sorted, ConjugateFactor arriving,
                   const FiniteGroup& g, const CoeffMatrix& coeffs) {
    if (arriving.elem == 0) return;
    std::vector<ConjugateFactor> central;
    for (auto it = sorted.upper_bound(arriving.level); it != sorted.end(); ++it) {
        const long long gap = it->first - arriving.level;
        for (const ConjugateFactor& c :
             correction(gap, it->second, arriving.elem, g, coeffs)) {
            central.push_back({c.level + arriving.level, c.elem});
        }
    }
    auto merge = [&](long long level, int elem) {
        auto [it, fresh] = sorted.try_emplace(level, elem);
        if (!fresh) {
            it->second = g.mul(it->second, elem);
            if (it->second == 0) sorted.erase(it);
        }
    };
    merge(arriving.level, arriving.elem);
    for (const ConjugateFactor& c : central) merge(c.level, c.elem);
}

long long max_gap(const std::vector<ConjugateFactor>& factors) {
    if (factors.empty()) return 0;
    long long lo = factors.front().level, hi = lo;
    for (const ConjugateFactor& f : factors) {
        lo = std::min(lo, f.level);
        hi = std::max(hi, f.level);
    }
    return hi - lo;
}

// the matrix costs O(gap^2) entries of up to 2^gap, so keep it desk-scale
constexpr long long kMaxLevelGap = 512;

NormalForm sort_factors(const std::vector<ConjugateFactor>& factors, long long t,
                        const FiniteGroup& g) {
    require_class_two(g);
    const long long gap = max_gap(factors);
    if (gap > kMaxLevelGap)
        throw CoeffRangeExceeded("level gap " + std::to_string(gap) +
                                 " exceeds the supported range of " +
                                 std::to_string(kMaxLevelGap));
    const CoeffMatrix coeffs =
        CoeffMatrix::build_recursive(static_cast<int>(std::max<long long>(gap, 1)));
    NormalForm nf;
    nf.t = t;
    for (const ConjugateFactor& f : factors) insert_factor(nf.levels, f, g, coeffs);
    return nf;
}

}  // namespace

std::vector<ConjugateFactor> correction(long long n, int g_elem, int h_elem,
                                        const FiniteGroup& g, const CoeffMatrix& m) {
    require_class_two(g);
    if (n < 1) throw IndexOutOfRange("correction requires n >= 1");
    if (n > m.n_max())
        throw CoeffRangeExceeded("correction at gap " + std::to_string(n) +
                                 " exceeds coefficient matrix of size " +
                                 std::to_string(m.n_max()));
    std::vector<ConjugateFactor> out;
    const int ginv = g.inv(g_elem);
    for (long long l = 1; l <= n; ++l) {
        const int h_pow = g.power(h_elem, m.at(static_cast<int>(n), static_cast<int>(l)));
        const int c = g.commutator(ginv, h_pow);
        if (c != 0) out.push_back({l, c});
    }
    return out;
}

NormalForm normalize(const GenWord& w, const FiniteGroup& g) {
    const ConjugateSequence c = to_conjugates(w, g);
    return sort_factors(c.factors, c.t, g);
}

NormalForm nf_multiply(const NormalForm& a, const NormalForm& b, const FiniteGroup& g) {
    // (na x^ta)(nb x^tb) = na * (x^ta nb x^-ta) * x^(ta+tb)
    std::vector<ConjugateFactor> factors;
    factors.reserve(a.levels.size() + b.levels.size());
    for (const auto& [level, elem] : a.levels) factors.push_back({level, elem});
    for (const auto& [level, elem] : b.levels) factors.push_back({level + a.t, elem});
    return sort_factors(factors, a.t + b.t, g);
}

NormalForm nf_inverse(const NormalForm& a, const FiniteGroup& g) {
    // (n x^t)^-1 = x^-t n^-1; reversed inverted factors, shifted by -t
    std::vector<ConjugateFactor> factors;
    factors.reserve(a.levels.size());
    for (auto it = a.levels.rbegin(); it != a.levels.rend(); ++it)
        factors.push_back({it->first - a.t, g.inv(it->second)});
    return sort_factors(factors, -a.t, g);
}

bool nf_equal(const NormalForm& a, const NormalForm& b) { return a == b; }

GenWord to_word(const NormalForm& a) {
    ConjugateSequence c;
    for (const auto& [level, elem] : a.levels) c.factors.push_back({level, elem});
    c.t = a.t;
    return expand_conjugates(c);
}

std::string display(const NormalForm& a, const FiniteGroup& g) {
    if (a.is_identity()) return "1";
    std::string out;
    for (const auto& [level, elem] : a.levels)
        out += "[" + std::to_string(level) + ":" + g.label(elem) + "]";
    if (a.t != 0) {
        if (!out.empty()) out += ' ';
        out += "x^" + std::to_string(a.t);
    }
    return out;
}

}  // namespace cayley
