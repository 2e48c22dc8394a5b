#include "cayley/relcheck.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "cayley/mealy.hpp"
#include "cayley/rng.hpp"

namespace cayley {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Letter x_pow(long long e) { return {LetterKind::X, -1, e}; }
Letter emb(int elem) { return {LetterKind::Embedded, elem, 1}; }

/// True iff the machine fixes every word of length depth: exhaustive
/// depth-first enumeration of the |alphabet|^depth inputs, shared prefixes
/// walked once, independent of the refinement engine.
bool fixes_all_words(const PointedMachine& p, long long depth) {
    const MealyMachine& m = *p.machine;
    struct Frame {
        int32_t state;
        int letter;
    };
    std::vector<Frame> stack;
    stack.push_back({static_cast<int32_t>(p.initial), 0});
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.letter == m.alphabet) {
            stack.pop_back();
            continue;
        }
        const int a = f.letter++;
        if (m.l(f.state, a) != a) return false;
        if (static_cast<long long>(stack.size()) < depth)
            stack.push_back({m.d(f.state, a), 0});
    }
    return true;
}

bool action_cost_ok(int alphabet, long long depth, std::size_t cap) {
    std::size_t cost = 1;
    for (long long i = 0; i < depth; ++i) {
        if (cost > cap / static_cast<std::size_t>(alphabet)) return false;
        cost *= static_cast<std::size_t>(alphabet);
    }
    return cost <= cap;
}

std::string pair_note(const FiniteGroup& grp, const GenWord& u, const GenWord& v) {
    return "'" + format(u, grp) + "' vs '" + format(v, grp) + "'";
}

}  // namespace

GenWord relation_lhs(long long n, int g, int h, const FiniteGroup& grp) {
    // [x^n g x^-n, h] = x^n g^-1 x^-n h^-1 x^n g x^-n h
    GenWord w;
    w.letters = {x_pow(n),  emb(grp.inv(g)), x_pow(-n), emb(grp.inv(h)),
                 x_pow(n),  emb(g),          x_pow(-n), emb(h)};
    return w;
}

GenWord relation_rhs(long long n, int g, int h, const FiniteGroup& grp, const CoeffMatrix& m) {
    if (n > m.n_max())
        throw CoeffRangeExceeded("relation at n = " + std::to_string(n) +
                                 " exceeds coefficient matrix of size " +
                                 std::to_string(m.n_max()));
    GenWord w;
    const int ginv = grp.inv(g);
    for (long long j = 1; j <= n; ++j) {
        const int hp = grp.power(h, m.at(static_cast<int>(n), static_cast<int>(j)));
        const int c = grp.commutator(ginv, hp);
        if (c == 0) continue;
        w.letters.push_back(x_pow(j));
        w.letters.push_back(emb(c));
        w.letters.push_back(x_pow(-j));
    }
    return w;
}

Verdict verify_relation(const FiniteGroup& grp, long long n, int g, int h,
                        const VerifyOptions& opts, MachineCache* cache) {
    const CoeffMatrix m = CoeffMatrix::build_recursive(static_cast<int>(n));
    const GenWord lhs = relation_lhs(n, g, h, grp);
    const GenWord rhs = relation_rhs(n, g, h, grp, m);
    if (opts.method == Method::Machine) {
        return equal(to_machine(lhs, grp, opts.state_budget, cache),
                     to_machine(rhs, grp, opts.state_budget, cache))
                   ? Verdict::Pass
                   : Verdict::Fail;
    }
    // action: both sides have x-exponent 0 and levels in [0, n], so
    // lhs * rhs^-1 has depth <= n+1 and is trivial iff it fixes G^(n+1)
    if (!action_cost_ok(grp.order(), n + 1, opts.action_cap))
        throw ActionCostExceeded("|G|^" + std::to_string(n + 1) + " exceeds action cap of " +
                                 std::to_string(opts.action_cap));
    const GenWord quotient = concat(lhs, inverse_word(rhs));
    const PointedMachine qm = to_machine(quotient, grp, opts.state_budget, cache);
    return fixes_all_words(qm, n + 1) ? Verdict::Pass : Verdict::Fail;
}

VerificationReport verify_all(const FiniteGroup& grp, long long n_max,
                              const VerifyOptions& opts, long long n_min) {
    const auto start = Clock::now();
    if (!check_embedding(grp, opts.state_budget))
        throw Error("embedding x*C(g) = g failed for group '" + grp.name() + "'");
    VerificationReport r;
    r.group_name = grp.name();
    MachineCache cache;
    for (long long n = n_min; n <= n_max; ++n)
        for (int g = 0; g < grp.order(); ++g)
            for (int h = 0; h < grp.order(); ++h) {
                CheckRecord rec{"rel", n, g, h, Verdict::Pass, ""};
                try {
                    rec.verdict = verify_relation(grp, n, g, h, opts, &cache);
                    if (rec.verdict == Verdict::Fail)
                        rec.note = "[x^" + std::to_string(n) + " " + grp.label(g) + " x^-" +
                                   std::to_string(n) + ", " + grp.label(h) +
                                   "] != correction product";
                } catch (const Error& e) {
                    rec.verdict = Verdict::Fail;
                    rec.note = std::string("error: ") + e.what();
                }
                r.add(std::move(rec));
            }
    r.wall_seconds = seconds_since(start);
    return r;
}

Verdict verify_wreath_coords(const FiniteGroup& grp, int g, long long n,
                             const VerifyOptions& opts, MachineCache* cache) {
    GenWord w;
    if (n != 0) w.letters = {x_pow(n), emb(g), x_pow(-n)};
    else w.letters = {emb(g)};
    const PointedMachine p = to_machine(w, grp, opts.state_budget, cache);
    for (int a = 0; a < grp.order(); ++a) {
        if (p.machine->l(p.initial, a) != grp.mul(g, a)) return Verdict::Fail;
        const PointedMachine residual{p.machine, p.machine->d(p.initial, a)};
        GenWord expect;
        if (n != 0)
            expect.letters = {{LetterKind::StateGen, grp.mul(g, a), -n},
                              {LetterKind::StateGen, a, n}};
        const PointedMachine em = to_machine(expect, grp, opts.state_budget, cache);
        if (!equal(residual, em)) return Verdict::Fail;
    }
    return Verdict::Pass;
}

VerificationReport verify_wreath_all(const FiniteGroup& grp, long long n_max,
                                     const VerifyOptions& opts, long long n_min) {
    const auto start = Clock::now();
    VerificationReport r;
    r.group_name = grp.name();
    MachineCache cache;
    for (long long n = n_min; n <= n_max; ++n)
        for (int g = 0; g < grp.order(); ++g) {
            CheckRecord rec{"wreath", n, g, -1, Verdict::Pass, ""};
            try {
                rec.verdict = verify_wreath_coords(grp, g, n, opts, &cache);
                if (rec.verdict == Verdict::Fail)
                    rec.note = "wreath coordinates of x^" + std::to_string(n) + " " +
                               grp.label(g) + " x^-" + std::to_string(n) + " mismatch";
            } catch (const Error& e) {
                rec.verdict = Verdict::Fail;
                rec.note = std::string("error: ") + e.what();
            }
            r.add(std::move(rec));
        }
    r.wall_seconds = seconds_since(start);
    return r;
}

Verdict verify_depth(const FiniteGroup& grp, int g, long long n,
                     const VerifyOptions& opts, MachineCache* cache) {
    if (g == 0) return Verdict::Vacuous;
    GenWord w;
    w.letters = {x_pow(n), emb(g), x_pow(-n)};
    if (n == 0) w.letters = {emb(g)};
    const PointedMachine p = to_machine(w, grp, opts.state_budget, cache);
    const MealyMachine& m = *p.machine;

    // beyond position n+1 nothing moves: random long words
    Rng rng(0x9E3779B9u ^ (static_cast<uint64_t>(n) << 8) ^ static_cast<uint64_t>(g));
    const int extra = 8;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> word(static_cast<std::size_t>(n) + 1 + extra);
        for (int& a : word) a = static_cast<int>(rng.uniform(static_cast<uint64_t>(grp.order())));
        const std::vector<int> out = act(p, word);
        for (std::size_t i = static_cast<std::size_t>(n) + 1; i < word.size(); ++i)
            if (out[i] != word[i]) return Verdict::Fail;
    }

    // position n+1 moves for some word: states reachable at depth n
    std::vector<int32_t> frontier{static_cast<int32_t>(p.initial)};
    std::vector<char> seen;
    for (long long step = 0; step < n; ++step) {
        seen.assign(static_cast<std::size_t>(m.state_count()), 0);
        std::vector<int32_t> next;
        for (int32_t q : frontier)
            for (int a = 0; a < m.alphabet; ++a) {
                const int32_t nq = m.d(q, a);
                if (!seen[static_cast<std::size_t>(nq)]) {
                    seen[static_cast<std::size_t>(nq)] = 1;
                    next.push_back(nq);
                }
            }
        frontier = std::move(next);
    }
    for (int32_t q : frontier)
        for (int a = 0; a < m.alphabet; ++a)
            if (m.l(q, a) != a) return Verdict::Pass;
    return Verdict::Fail;  // depth < n+1
}

VerificationReport verify_depth_all(const FiniteGroup& grp, long long n_max,
                                    const VerifyOptions& opts, long long n_min) {
    const auto start = Clock::now();
    VerificationReport r;
    r.group_name = grp.name();
    MachineCache cache;
    for (long long n = n_min; n <= n_max; ++n)
        for (int g = 0; g < grp.order(); ++g) {
            CheckRecord rec{"depth", n, g, -1, Verdict::Pass, ""};
            try {
                rec.verdict = verify_depth(grp, g, n, opts, &cache);
                if (rec.verdict == Verdict::Fail)
                    rec.note = "depth of x^" + std::to_string(n) + " " + grp.label(g) + " x^-" +
                               std::to_string(n) + " is not " + std::to_string(n + 1);
            } catch (const Error& e) {
                rec.verdict = Verdict::Fail;
                rec.note = std::string("error: ") + e.what();
            }
            r.add(std::move(rec));
        }
    r.wall_seconds = seconds_since(start);
    return r;
}

// ---- cross validation -------------------------------------------------------

namespace {

/// Random word with the running x-exponent kept within [-2, 2]; rich in
/// every letter kind but guaranteed to stay machine-friendly.
GenWord random_word(Rng& rng, const FiniteGroup& grp, int max_len) {
    GenWord w;
    const int len = 1 + static_cast<int>(rng.uniform(static_cast<uint64_t>(max_len)));
    long long s = 0;
    for (int i = 0; i < len; ++i) {
        for (;;) {
            const int kind = static_cast<int>(rng.uniform(4));
            if (kind == 0) {  // x^±1
                const long long e = rng.uniform(2) ? 1 : -1;
                if (s + e < -2 || s + e > 2) continue;
                s += e;
                w.letters.push_back(x_pow(e));
            } else if (kind == 1) {  // embedded element, exponent in ±1..3
                const int g = 1 + static_cast<int>(
                                      rng.uniform(static_cast<uint64_t>(grp.order() - 1)));
                long long e = 1 + static_cast<long long>(rng.uniform(3));
                if (rng.uniform(2)) e = -e;
                w.letters.push_back({LetterKind::Embedded, g, e});
            } else {  // C(g)^±1, shifting the exponent like x^∓1
                const int g = static_cast<int>(rng.uniform(static_cast<uint64_t>(grp.order())));
                const long long e = rng.uniform(2) ? 1 : -1;
                if (s - e < -2 || s - e > 2) continue;
                s -= e;
                w.letters.push_back({LetterKind::StateGen, g, e});
            }
            break;
        }
    }
    return w;
}

/// Same element, different word: inserts 1..3 canceling pairs.
GenWord equal_variant(Rng& rng, const FiniteGroup& grp, const GenWord& u) {
    GenWord v = u;
    const int inserts = 1 + static_cast<int>(rng.uniform(3));
    for (int i = 0; i < inserts; ++i) {
        const std::size_t pos = rng.uniform(v.letters.size() + 1);
        std::vector<Letter> pair;
        switch (rng.uniform(3)) {
            case 0: {
                const int g = 1 + static_cast<int>(
                                      rng.uniform(static_cast<uint64_t>(grp.order() - 1)));
                pair = {emb(g), emb(grp.inv(g))};
                break;
            }
            case 1: {
                const long long e = rng.uniform(2) ? 1 : -1;
                pair = {x_pow(e), x_pow(-e)};
                break;
            }
            default: {
                const int g = static_cast<int>(rng.uniform(static_cast<uint64_t>(grp.order())));
                const long long e = rng.uniform(2) ? 1 : -1;
                pair = {{LetterKind::StateGen, g, e}, {LetterKind::StateGen, g, -e}};
                break;
            }
        }
        v.letters.insert(v.letters.begin() + static_cast<std::ptrdiff_t>(pos), pair.begin(),
                         pair.end());
    }
    return v;
}

NormalForm random_nf(Rng& rng, const FiniteGroup& grp) {
    NormalForm nf;
    const int factors = static_cast<int>(rng.uniform(5));
    for (int i = 0; i < factors; ++i) {
        const long long level = rng.range(-4, 4);
        const int g = 1 + static_cast<int>(rng.uniform(static_cast<uint64_t>(grp.order() - 1)));
        nf.levels[level] = g;  // overwriting keeps it a valid normal form
    }
    nf.t = rng.range(-4, 4);
    return nf;
}

}  // namespace

VerificationReport cross_validate(const FiniteGroup& grp, int count, int max_len,
                                  uint64_t seed, const VerifyOptions& opts) {
    const auto start = Clock::now();
    if (!check_embedding(grp, opts.state_budget))
        throw Error("embedding x*C(g) = g failed for group '" + grp.name() + "'");
    VerificationReport r;
    r.group_name = grp.name();
    Rng rng(seed);
    MachineCache cache;
    for (int i = 0; i < count; ++i) {
        const GenWord u = random_word(rng, grp, max_len);
        const GenWord v = (i % 2 == 0) ? random_word(rng, grp, max_len)
                                       : equal_variant(rng, grp, u);
        CheckRecord rec{"xval", i, -1, -1, Verdict::Pass, ""};
        try {
            const bool by_nf = nf_equal(normalize(u, grp), normalize(v, grp));
            const bool by_machine = equal(to_machine(u, grp, opts.state_budget, &cache),
                                          to_machine(v, grp, opts.state_budget, &cache));
            if (by_nf != by_machine) {
                rec.verdict = Verdict::Fail;
                rec.note = "oracles disagree on " + pair_note(grp, u, v) + ": nf says " +
                           (by_nf ? "equal" : "unequal");
            }
        } catch (const Error& e) {
            rec.verdict = Verdict::Fail;
            rec.note = std::string("error: ") + e.what() + " on " + pair_note(grp, u, v);
        }
        r.add(std::move(rec));
    }
    for (int i = 0; i < count; ++i) {
        const NormalForm nf = random_nf(rng, grp);
        CheckRecord rec{"roundtrip", i, -1, -1, Verdict::Pass, ""};
        try {
            if (!nf_equal(normalize(to_word(nf), grp), nf)) {
                rec.verdict = Verdict::Fail;
                rec.note = "normalize(to_word(nf)) != nf for " + display(nf, grp);
            }
        } catch (const Error& e) {
            rec.verdict = Verdict::Fail;
            rec.note = std::string("error: ") + e.what();
        }
        r.add(std::move(rec));
    }
    r.wall_seconds = seconds_since(start);
    return r;
}

bool word_equal(const GenWord& u, const GenWord& v, const FiniteGroup& grp,
                const VerifyOptions& opts, MachineCache* cache) {
    if (opts.method == Method::Machine)
        return equal(to_machine(u, grp, opts.state_budget, cache),
                     to_machine(v, grp, opts.state_budget, cache));

    if (to_conjugates(u, grp).t != to_conjugates(v, grp).t) return false;
    const GenWord quotient = concat(u, inverse_word(v));
    const ConjugateSequence cq = to_conjugates(quotient, grp);
    if (cq.factors.empty()) return true;
    long long lo = cq.factors.front().level, hi = lo;
    for (const ConjugateFactor& f : cq.factors) {
        lo = std::min(lo, f.level);
        hi = std::max(hi, f.level);
    }
    const long long depth = hi - lo + 1;
    if (!action_cost_ok(grp.order(), depth, opts.action_cap))
        throw ActionCostExceeded("|G|^" + std::to_string(depth) + " exceeds action cap of " +
                                 std::to_string(opts.action_cap));
    GenWord conj;
    if (lo != 0) conj.letters.push_back({LetterKind::X, -1, -lo});
    conj = concat(conj, quotient);
    if (lo != 0) conj.letters.push_back({LetterKind::X, -1, lo});
    return fixes_all_words(to_machine(conj, grp, opts.state_budget, cache), depth);
}

bool check_embedding(const FiniteGroup& grp, std::size_t state_budget) {
    const PointedMachine x = x_machine(grp);
    for (int g = 0; g < grp.order(); ++g) {
        const PointedMachine prod = compose(x, state_generator(grp, g), state_budget);
        if (!equal(prod, embedded_element(grp, g))) return false;
    }
    return true;
}

bool x_power_nontrivial(const FiniteGroup& grp, int m_max) {
    for (int m = 1; m <= m_max; ++m) {
        GenWord xm;
        xm.letters = {x_pow(m)};
        for (int g = 1; g < grp.order(); ++g) {
            std::vector<int> impulse(static_cast<std::size_t>(m) + 1, 0);
            impulse[0] = g;
            if (act_word(xm, grp, impulse) == impulse) return false;
        }
    }
    return true;
}

std::string render_lines(const VerificationReport& r, const FiniteGroup& grp) {
    std::ostringstream os;
    for (const CheckRecord& c : r.checks) {
        os << "CHECK " << c.id << " n=" << c.n << " g="
           << (c.g >= 0 ? grp.label(c.g) : "-") << " h="
           << (c.h >= 0 ? grp.label(c.h) : "-") << ' '
           << (c.verdict == Verdict::Fail ? "FAIL" : "PASS") << '\n';
    }
    return os.str();
}

std::string render_summary(const VerificationReport& r) {
    std::ostringstream os;
    os << r.checks.size() << " checks, " << r.passed << " pass";
    if (r.failed > 0) os << ", " << r.failed << " fail";
    return os.str();
}

}  // namespace cayley
