#pragma once

#include <string>
#include <vector>

#include "cayley/coeffs.hpp"
#include "cayley/fingroup.hpp"
#include "cayley/normalform.hpp"
#include "cayley/words.hpp"

namespace cayley {

/// Two independent equality engines: `Machine` decides by partition
/// refinement over the product machines; `Action` enumerates all words up
/// to the depth bound and compares the actions exhaustively.
enum class Method { Machine, Action };

enum class Verdict { Pass, Fail, Vacuous };

struct VerifyOptions {
    Method method = Method::Machine;
    std::size_t state_budget = kDefaultStateBudget;
    std::size_t action_cap = 1'000'000;  // max number of words |G|^(n+1)
};

struct CheckRecord {
    std::string id;    // "rel" | "wreath" | "depth" | "xval" | "roundtrip"
    long long n = 0;
    int g = -1;        // element index or -1 when not applicable
    int h = -1;
    Verdict verdict = Verdict::Pass;
    std::string note;  // witness or error detail on failure
};

struct VerificationReport {
    std::string group_name;
    std::vector<CheckRecord> checks;
    int passed = 0;
    int failed = 0;
    double wall_seconds = 0;

    bool all_pass() const { return failed == 0; }
    void add(CheckRecord r) {
        (r.verdict == Verdict::Fail ? failed : passed) += 1;
        checks.push_back(std::move(r));
    }
};

/// Commutation relation at (n, g, h):
///   lhs = [x^n g x^-n, h],  rhs = prod_{j=1..n} x^j [g^-1, h^(a_nj)] x^-j.
GenWord relation_lhs(long long n, int g, int h, const FiniteGroup& grp);
GenWord relation_rhs(long long n, int g, int h, const FiniteGroup& grp, const CoeffMatrix& m);

/// Tests lhs == rhs with the chosen engine. The action engine relies on
/// both sides having x-exponent zero and levels within [0, n], so their
/// quotient has depth at most n+1 and equality is decided on the |G|^(n+1)
/// words of length n+1.
Verdict verify_relation(const FiniteGroup& grp, long long n, int g, int h,
                        const VerifyOptions& opts = {}, MachineCache* cache = nullptr);

/// All relations for 1 <= n' <= n_max and every ordered pair (g, h).
/// Per-check errors are recorded as failures, not thrown.
VerificationReport verify_all(const FiniteGroup& grp, long long n_max,
                              const VerifyOptions& opts = {}, long long n_min = 1);

/// Wreath coordinates of x^n g x^-n: for every first letter a the output
/// is g*a and the residual equals the machine of C(ga)^-n C(a)^n.
Verdict verify_wreath_coords(const FiniteGroup& grp, int g, long long n,
                             const VerifyOptions& opts = {}, MachineCache* cache = nullptr);
VerificationReport verify_wreath_all(const FiniteGroup& grp, long long n_max,
                                     const VerifyOptions& opts = {}, long long n_min = 0);

/// Depth of x^n g x^-n is exactly n+1 for g != identity: random long words
/// are fixed beyond position n+1 and some word changes at position n+1.
Verdict verify_depth(const FiniteGroup& grp, int g, long long n,
                     const VerifyOptions& opts = {}, MachineCache* cache = nullptr);
VerificationReport verify_depth_all(const FiniteGroup& grp, long long n_max,
                                    const VerifyOptions& opts = {}, long long n_min = 0);

/// Seeded random word pairs (bounded x-exponent excursion keeps the
/// machines desk-scale); asserts that normal-form equality agrees with
/// machine equality on every pair, and that normalize(to_word(nf)) == nf
/// on `count` random normal forms.
VerificationReport cross_validate(const FiniteGroup& grp, int count, int max_len,
                                  uint64_t seed, const VerifyOptions& opts = {});

/// Equality of two arbitrary words with the chosen engine. The action
/// engine compares x-exponents first (distinct exponents mean distinct
/// elements, x having infinite order); an exponent-0 difference is
/// conjugated by x^-min(level) so the depth bound applies, then decided by
/// exhaustive enumeration of all words up to that depth.
bool word_equal(const GenWord& u, const GenWord& v, const FiniteGroup& grp,
                const VerifyOptions& opts = {}, MachineCache* cache = nullptr);

/// equal(x * C(g), embedded g) for every g; the composition-order anchor.
bool check_embedding(const FiniteGroup& grp, std::size_t state_budget = kDefaultStateBudget);

/// x^m moves some word, for every 1 <= m <= m_max: the impulse word
/// (g, e, e, ...) of length m+1 comes back changed for every g != e.
bool x_power_nontrivial(const FiniteGroup& grp, int m_max);

/// `CHECK <id> n=<n> g=<label> h=<label> <PASS|FAIL>` lines.
std::string render_lines(const VerificationReport& r, const FiniteGroup& grp);
/// `<N> checks, <P> pass[, <F> fail]`.
std::string render_summary(const VerificationReport& r);

}  // namespace cayley
