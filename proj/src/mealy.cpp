#include "cayley/mealy.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace cayley {

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int32_t>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int32_t x : v) {
            h ^= static_cast<std::size_t>(static_cast<uint32_t>(x));
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// Machine restricted to the part reachable from one state, densely
/// renumbered in BFS order (initial becomes 0).
struct Dense {
    int k = 0;
    std::vector<int32_t> delta, lambda;  // n*k
    std::vector<int32_t> origin;         // dense index -> original state

    int n() const { return k == 0 ? 0 : static_cast<int>(delta.size()) / k; }
};

Dense reachable_part(const MealyMachine& m, int initial) {
    Dense d;
    d.k = m.alphabet;
    std::vector<int32_t> idx(static_cast<std::size_t>(m.state_count()), -1);
    std::deque<int32_t> queue;
    idx[static_cast<std::size_t>(initial)] = 0;
    d.origin.push_back(initial);
    queue.push_back(initial);
    while (!queue.empty()) {
        const int32_t q = queue.front();
        queue.pop_front();
        for (int a = 0; a < d.k; ++a) {
            const int32_t nq = m.d(q, a);
            if (idx[static_cast<std::size_t>(nq)] < 0) {
                idx[static_cast<std::size_t>(nq)] = static_cast<int32_t>(d.origin.size());
                d.origin.push_back(nq);
                queue.push_back(nq);
            }
        }
    }
    d.delta.resize(d.origin.size() * static_cast<std::size_t>(d.k));
    d.lambda.resize(d.origin.size() * static_cast<std::size_t>(d.k));
    for (std::size_t i = 0; i < d.origin.size(); ++i)
        for (int a = 0; a < d.k; ++a) {
            d.delta[i * d.k + static_cast<std::size_t>(a)] = idx[static_cast<std::size_t>(m.d(d.origin[i], a))];
            d.lambda[i * d.k + static_cast<std::size_t>(a)] = m.l(d.origin[i], a);
        }
    return d;
}

/// Coarsest partition refining "same output row" that is stable under the
/// transitions. Classes are numbered by first occurrence in state order.
std::vector<int32_t> refine_classes(const Dense& d) {
    const int n = d.n(), k = d.k;
    std::vector<int32_t> cls(static_cast<std::size_t>(n));
    {
        std::unordered_map<std::vector<int32_t>, int32_t, VecHash> ids;
        std::vector<int32_t> row(static_cast<std::size_t>(k));
        for (int q = 0; q < n; ++q) {
            std::copy_n(d.lambda.begin() + static_cast<std::size_t>(q) * k, k, row.begin());
            auto [it, fresh] = ids.try_emplace(row, static_cast<int32_t>(ids.size()));
            cls[static_cast<std::size_t>(q)] = it->second;
        }
    }
    std::size_t count = 0;
    {
        std::size_t mx = 0;
        for (int32_t c : cls) mx = std::max<std::size_t>(mx, static_cast<std::size_t>(c) + 1);
        count = mx;
    }
    std::vector<int32_t> next(static_cast<std::size_t>(n));
    std::vector<int32_t> sig(static_cast<std::size_t>(k) + 1);
    while (true) {
        std::unordered_map<std::vector<int32_t>, int32_t, VecHash> ids;
        ids.reserve(count * 2);
        for (int q = 0; q < n; ++q) {
            sig[0] = cls[static_cast<std::size_t>(q)];
            for (int a = 0; a < k; ++a)
                sig[static_cast<std::size_t>(a) + 1] =
                    cls[static_cast<std::size_t>(d.delta[static_cast<std::size_t>(q) * k + a])];
            auto [it, fresh] = ids.try_emplace(sig, static_cast<int32_t>(ids.size()));
            next[static_cast<std::size_t>(q)] = it->second;
        }
        if (ids.size() == count) return cls;
        count = ids.size();
        std::swap(cls, next);
    }
}

}  // namespace

bool MealyMachine::invertible(int* witness) const {
    std::vector<char> seen(static_cast<std::size_t>(alphabet));
    for (int q = 0; q < state_count(); ++q) {
        std::fill(seen.begin(), seen.end(), 0);
        bool ok = true;
        for (int a = 0; a < alphabet && ok; ++a) {
            const int32_t o = l(q, a);
            if (seen[static_cast<std::size_t>(o)]) ok = false;
            seen[static_cast<std::size_t>(o)] = 1;
        }
        if (!ok) {
            if (witness) *witness = q;
            return false;
        }
    }
    return true;
}

MachinePtr cayley_machine(const FiniteGroup& g) {
    auto m = std::make_shared<MealyMachine>();
    const int k = g.order();
    m->alphabet = k;
    m->delta.resize(static_cast<std::size_t>(k) * k);
    m->lambda.resize(static_cast<std::size_t>(k) * k);
    for (int q = 0; q < k; ++q)
        for (int a = 0; a < k; ++a) {
            const int32_t v = static_cast<int32_t>(g.mul(q, a));
            m->delta[static_cast<std::size_t>(q) * k + a] = v;
            m->lambda[static_cast<std::size_t>(q) * k + a] = v;
        }
    m->state_labels = g.labels();
    return m;
}

MachinePtr invert(const MealyMachine& m) {
    int bad = -1;
    if (!m.invertible(&bad))
        throw NotInvertible(bad, "state " + std::to_string(bad) +
                                     " does not output a permutation of the alphabet");
    auto r = std::make_shared<MealyMachine>();
    r->alphabet = m.alphabet;
    r->delta.resize(m.delta.size());
    r->lambda.resize(m.lambda.size());
    r->state_labels = m.state_labels;
    const int k = m.alphabet;
    std::vector<int32_t> inv_row(static_cast<std::size_t>(k));
    for (int q = 0; q < m.state_count(); ++q) {
        for (int a = 0; a < k; ++a) inv_row[static_cast<std::size_t>(m.l(q, a))] = static_cast<int32_t>(a);
        for (int a = 0; a < k; ++a) {
            r->lambda[static_cast<std::size_t>(q) * k + a] = inv_row[static_cast<std::size_t>(a)];
            r->delta[static_cast<std::size_t>(q) * k + a] = m.d(q, inv_row[static_cast<std::size_t>(a)]);
        }
    }
    return r;
}

PointedMachine invert(const PointedMachine& p) { return {invert(*p.machine), p.initial}; }

PointedMachine compose(const PointedMachine& a, const PointedMachine& b,
                       std::size_t state_budget) {
    if (a.alphabet() != b.alphabet())
        throw AlphabetMismatch("alphabet sizes " + std::to_string(a.alphabet()) + " and " +
                               std::to_string(b.alphabet()) + " differ");
    const MealyMachine& ma = *a.machine;
    const MealyMachine& mb = *b.machine;
    const int k = ma.alphabet;

    auto key = [](int32_t p, int32_t q) {
        return (static_cast<uint64_t>(static_cast<uint32_t>(p)) << 32) | static_cast<uint32_t>(q);
    };
    std::unordered_map<uint64_t, int32_t> idx;
    std::vector<std::pair<int32_t, int32_t>> pairs;
    auto intern = [&](int32_t p, int32_t q) {
        auto [it, fresh] = idx.try_emplace(key(p, q), static_cast<int32_t>(pairs.size()));
        if (fresh) {
            pairs.emplace_back(p, q);
            if (pairs.size() > state_budget)
                throw StateBudgetExceeded("product machine exceeds state budget of " +
                                          std::to_string(state_budget));
        }
        return it->second;
    };

    auto out = std::make_shared<MealyMachine>();
    out->alphabet = k;
    intern(static_cast<int32_t>(a.initial), static_cast<int32_t>(b.initial));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto [qa, qb] = pairs[i];
        for (int letter = 0; letter < k; ++letter) {
            const int32_t mid = mb.l(qb, letter);
            const int32_t o = ma.l(qa, mid);
            const int32_t np = ma.d(qa, mid);
            const int32_t nq = mb.d(qb, letter);
            out->lambda.push_back(o);
            out->delta.push_back(intern(np, nq));
        }
    }
    return {out, 0};
}

PointedMachine minimize(const PointedMachine& p) {
    const Dense d = reachable_part(*p.machine, p.initial);
    const std::vector<int32_t> cls = refine_classes(d);
    int32_t nclasses = 0;
    for (int32_t c : cls) nclasses = std::max(nclasses, c + 1);

    auto out = std::make_shared<MealyMachine>();
    out->alphabet = d.k;
    out->delta.assign(static_cast<std::size_t>(nclasses) * d.k, -1);
    out->lambda.assign(static_cast<std::size_t>(nclasses) * d.k, -1);
    std::vector<char> done(static_cast<std::size_t>(nclasses));
    for (int q = 0; q < d.n(); ++q) {
        const int32_t c = cls[static_cast<std::size_t>(q)];
        if (done[static_cast<std::size_t>(c)]) continue;
        done[static_cast<std::size_t>(c)] = 1;
        for (int a = 0; a < d.k; ++a) {
            out->delta[static_cast<std::size_t>(c) * d.k + a] =
                cls[static_cast<std::size_t>(d.delta[static_cast<std::size_t>(q) * d.k + a])];
            out->lambda[static_cast<std::size_t>(c) * d.k + a] =
                d.lambda[static_cast<std::size_t>(q) * d.k + a];
        }
    }
    return {out, cls[0]};  // dense state 0 is the initial one
}

std::vector<int> act(const PointedMachine& p, std::span<const int> word) {
    const MealyMachine& m = *p.machine;
    std::vector<int> out;
    out.reserve(word.size());
    int q = p.initial;
    for (int a : word) {
        if (a < 0 || a >= m.alphabet)
            throw LetterOutOfRange("letter " + std::to_string(a) + " outside alphabet of size " +
                                   std::to_string(m.alphabet));
        out.push_back(m.l(q, a));
        q = m.d(q, a);
    }
    return out;
}

bool equal(const PointedMachine& p, const PointedMachine& q) {
    if (p.alphabet() != q.alphabet())
        throw AlphabetMismatch("alphabet sizes " + std::to_string(p.alphabet()) + " and " +
                               std::to_string(q.alphabet()) + " differ");
    const Dense dp = reachable_part(*p.machine, p.initial);
    const Dense dq = reachable_part(*q.machine, q.initial);
    // disjoint union; q's states are shifted by dp.n()
    Dense u;
    u.k = dp.k;
    const int np = dp.n();
    u.delta = dp.delta;
    u.lambda = dp.lambda;
    u.delta.reserve(dp.delta.size() + dq.delta.size());
    for (int32_t t : dq.delta) u.delta.push_back(t + np);
    u.lambda.insert(u.lambda.end(), dq.lambda.begin(), dq.lambda.end());
    const std::vector<int32_t> cls = refine_classes(u);
    return cls[0] == cls[static_cast<std::size_t>(np)];
}

bool is_identity(const PointedMachine& p) {
    const MealyMachine& m = *p.machine;
    std::vector<char> seen(static_cast<std::size_t>(m.state_count()));
    std::deque<int32_t> queue;
    seen[static_cast<std::size_t>(p.initial)] = 1;
    queue.push_back(static_cast<int32_t>(p.initial));
    while (!queue.empty()) {
        const int32_t q = queue.front();
        queue.pop_front();
        for (int a = 0; a < m.alphabet; ++a) {
            if (m.l(q, a) != a) return false;
            const int32_t nq = m.d(q, a);
            if (!seen[static_cast<std::size_t>(nq)]) {
                seen[static_cast<std::size_t>(nq)] = 1;
                queue.push_back(nq);
            }
        }
    }
    return true;
}

PointedMachine embedded_element(const FiniteGroup& g, int elem) {
    auto m = std::make_shared<MealyMachine>();
    const int k = g.order();
    m->alphabet = k;
    m->delta.resize(2 * static_cast<std::size_t>(k));
    m->lambda.resize(2 * static_cast<std::size_t>(k));
    for (int a = 0; a < k; ++a) {
        m->lambda[static_cast<std::size_t>(a)] = static_cast<int32_t>(g.mul(elem, a));
        m->delta[static_cast<std::size_t>(a)] = 1;
        m->lambda[static_cast<std::size_t>(k) + a] = static_cast<int32_t>(a);
        m->delta[static_cast<std::size_t>(k) + a] = 1;
    }
    return {m, 0};
}

PointedMachine identity_machine(int alphabet) {
    auto m = std::make_shared<MealyMachine>();
    m->alphabet = alphabet;
    m->delta.assign(static_cast<std::size_t>(alphabet), 0);
    m->lambda.resize(static_cast<std::size_t>(alphabet));
    for (int a = 0; a < alphabet; ++a) m->lambda[static_cast<std::size_t>(a)] = static_cast<int32_t>(a);
    return {m, 0};
}

PointedMachine x_machine(const FiniteGroup& g) { return {invert(*cayley_machine(g)), 0}; }

PointedMachine state_generator(const FiniteGroup& g, int elem) {
    return {cayley_machine(g), elem};
}

std::string dump(const MealyMachine& m, const std::vector<std::string>& alphabet_labels) {
    auto state_name = [&](int q) {
        if (q < static_cast<int>(m.state_labels.size())) return m.state_labels[static_cast<std::size_t>(q)];
        return "q" + std::to_string(q);
    };
    auto letter_name = [&](int a) {
        if (a < static_cast<int>(alphabet_labels.size()))
            return alphabet_labels[static_cast<std::size_t>(a)];
        return std::to_string(a);
    };
    std::ostringstream os;
    for (int q = 0; q < m.state_count(); ++q)
        for (int a = 0; a < m.alphabet; ++a)
            os << state_name(q) << " | " << letter_name(a) << " -> " << letter_name(m.l(q, a))
               << " / " << state_name(m.d(q, a)) << "\n";
    return os.str();
}

std::string dump(const PointedMachine& p, const std::vector<std::string>& alphabet_labels) {
    const MealyMachine& m = *p.machine;
    std::string init = p.initial < static_cast<int>(m.state_labels.size())
                           ? m.state_labels[static_cast<std::size_t>(p.initial)]
                           : "q" + std::to_string(p.initial);
    return "initial: " + init + "\n" + dump(m, alphabet_labels);
}

}  // namespace cayley
