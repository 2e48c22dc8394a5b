#include "cayley/words.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <optional>

namespace cayley {

namespace {

constexpr std::size_t kMaxExpandedLetters = 1'000'000;

bool valid_int(const std::string& s) {
    std::size_t i = (s.size() > 1 && s[0] == '-') ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

GenWord parse(const std::string& text, const FiniteGroup& g) {
    GenWord w;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        const std::string token = text.substr(start, i - start);
        const std::size_t pos = start + 1;  // 1-based position of the token

        std::string base = token;
        long long exp = 1;
        if (const std::size_t caret = token.find('^'); caret != std::string::npos) {
            base = token.substr(0, caret);
            const std::string es = token.substr(caret + 1);
            if (!valid_int(es))
                throw SyntaxError(pos + caret + 1, "invalid exponent '" + es + "'");
            errno = 0;
            exp = std::strtoll(es.c_str(), nullptr, 10);
            if (errno != 0) throw SyntaxError(pos + caret + 1, "exponent out of range");
            if (exp == 0) throw ZeroExponent(pos + caret + 1);
        }
        if (base.empty()) throw SyntaxError(pos, "token starts with '^'");

        Letter letter;
        letter.exp = exp;
        if (base == "x") {
            letter.kind = LetterKind::X;
        } else if (base.rfind("C(", 0) == 0) {
            if (base.size() < 4 || base.back() != ')')
                throw SyntaxError(pos, "malformed generator '" + base + "', expected C(label)");
            const std::string label = base.substr(2, base.size() - 3);
            const int e = g.index_of(label);
            if (e < 0) throw UnknownLabel(label);
            letter.kind = LetterKind::StateGen;
            letter.elem = e;
        } else {
            const int e = g.index_of(base);
            if (e < 0) throw UnknownLabel(base);
            letter.kind = LetterKind::Embedded;
            letter.elem = e;
        }
        w.letters.push_back(letter);
    }
    return w;
}

std::string format(const GenWord& w, const FiniteGroup& g) {
    std::string out;
    for (const Letter& l : w.letters) {
        if (!out.empty()) out += ' ';
        switch (l.kind) {
            case LetterKind::X: out += 'x'; break;
            case LetterKind::Embedded: out += g.label(l.elem); break;
            case LetterKind::StateGen: out += "C(" + g.label(l.elem) + ")"; break;
        }
        if (l.exp != 1) out += '^' + std::to_string(l.exp);
    }
    return out;
}

ConjugateSequence to_conjugates(const GenWord& w, const FiniteGroup& g) {
    ConjugateSequence c;
    long long s = 0;  // running x-exponent of the prefix
    std::size_t steps = 0;
    auto push = [&](long long level, int elem) {
        if (elem != 0) c.factors.push_back({level, elem});
    };
    for (const Letter& l : w.letters) {
        switch (l.kind) {
            case LetterKind::X:
                s += l.exp;
                break;
            case LetterKind::Embedded:
                push(s, g.power(l.elem, l.exp));
                break;
            case LetterKind::StateGen: {
                // C(g) = x^-1 g, so C(g)^e expands literally
                const long long n = l.exp < 0 ? -l.exp : l.exp;
                if ((steps += static_cast<std::size_t>(n)) > kMaxExpandedLetters)
                    throw WordTooLarge("word expands to more than " +
                                       std::to_string(kMaxExpandedLetters) + " letters");
                for (long long r = 0; r < n; ++r) {
                    if (l.exp > 0) {
                        s -= 1;
                        push(s, l.elem);
                    } else {
                        push(s, g.inv(l.elem));
                        s += 1;
                    }
                }
                break;
            }
        }
    }
    c.t = s;
    return c;
}

GenWord inverse_word(const GenWord& w) {
    GenWord r;
    r.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        Letter l = *it;
        l.exp = -l.exp;
        r.letters.push_back(l);
    }
    return r;
}

GenWord concat(const GenWord& a, const GenWord& b) {
    GenWord r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

GenWord expand_conjugates(const ConjugateSequence& c) {
    GenWord w;
    for (const ConjugateFactor& f : c.factors) {
        if (f.level != 0) w.letters.push_back({LetterKind::X, -1, f.level});
        w.letters.push_back({LetterKind::Embedded, f.elem, 1});
        if (f.level != 0) w.letters.push_back({LetterKind::X, -1, -f.level});
    }
    if (c.t != 0) w.letters.push_back({LetterKind::X, -1, c.t});
    return w;
}

// ---- machine construction --------------------------------------------------

namespace {

// atomic letters: every exponent expanded to +-1, embedded powers collapsed
enum class AtomKind { XPlus, XMinus, Emb, Cg, CgInv };

struct Atom {
    AtomKind kind;
    int elem = -1;

    long long x_shift() const {
        switch (kind) {
            case AtomKind::XPlus: return 1;
            case AtomKind::XMinus: return -1;
            case AtomKind::Cg: return -1;     // C(g) = x^-1 g
            case AtomKind::CgInv: return 1;   // C(g)^-1 = g^-1 x
            case AtomKind::Emb: return 0;
        }
        return 0;
    }
};

std::vector<Atom> atomize(const GenWord& w, const FiniteGroup& g) {
    std::vector<Atom> atoms;
    for (const Letter& l : w.letters) {
        if (l.kind == LetterKind::Embedded) {
            const int e = g.power(l.elem, l.exp);
            if (e != 0) atoms.push_back({AtomKind::Emb, e});
            continue;
        }
        const long long n = l.exp < 0 ? -l.exp : l.exp;
        if (atoms.size() + static_cast<std::size_t>(n) > kMaxExpandedLetters)
            throw WordTooLarge("word expands to more than " +
                               std::to_string(kMaxExpandedLetters) + " letters");
        for (long long r = 0; r < n; ++r) {
            if (l.kind == LetterKind::X)
                atoms.push_back({l.exp > 0 ? AtomKind::XPlus : AtomKind::XMinus, -1});
            else
                atoms.push_back({l.exp > 0 ? AtomKind::Cg : AtomKind::CgInv, l.elem});
        }
    }
    return atoms;
}

struct Builder {
    const FiniteGroup& g;
    std::size_t budget;
    MachineCache* cache;
    MachinePtr cayley;      // shared by C(g) and x machines
    MachinePtr cayley_inv;

    PointedMachine atom_machine(const Atom& a) const {
        switch (a.kind) {
            case AtomKind::XPlus: return {cayley_inv, 0};
            case AtomKind::XMinus: return {cayley, 0};
            case AtomKind::Cg: return {cayley, a.elem};
            case AtomKind::CgInv: return {cayley_inv, a.elem};
            case AtomKind::Emb: return embedded_element(g, a.elem);
        }
        return identity_machine(g.order());
    }

    PointedMachine compose_min(const PointedMachine& a, const PointedMachine& b) const {
        return minimize(compose(a, b, budget));
    }

    // [lo, hi) half-open range of atoms; intermediate machines stay small
    // when x / x^-1 layers around a bounded-depth core are composed from
    // the inside out, so matched outer layers are peeled first
    PointedMachine build_range(const std::vector<Atom>& atoms, std::size_t lo,
                               std::size_t hi) const {
        if (lo >= hi) return identity_machine(g.order());

        std::optional<std::pair<long long, int>> key;
        if (cache) {
            key = block_key(atoms, lo, hi);
            if (key) {
                auto it = cache->blocks.find(*key);
                if (it != cache->blocks.end()) return it->second;
            }
        }

        std::size_t peel = 0, l = lo, h = hi;
        while (h - l >= 2) {
            const AtomKind fk = atoms[l].kind;
            const AtomKind lk = atoms[h - 1].kind;
            const bool opposite = (fk == AtomKind::XPlus && lk == AtomKind::XMinus) ||
                                  (fk == AtomKind::XMinus && lk == AtomKind::XPlus);
            if (!opposite) break;
            ++peel;
            ++l;
            --h;
        }

        PointedMachine acc;
        if (l >= h) {
            acc = identity_machine(g.order());
        } else {
            acc = minimize(atom_machine(atoms[h - 1]));
            for (std::size_t i = h - 1; i-- > l;)
                acc = compose_min(atom_machine(atoms[i]), acc);
        }
        for (std::size_t r = 1; r <= peel; ++r)
            acc = compose_min(atom_machine(atoms[l - r]),
                              compose_min(acc, atom_machine(atoms[h - 1 + r])));

        if (cache && key) cache->blocks.emplace(*key, acc);
        return acc;
    }

    // (n, elem) when atoms[lo..hi) is exactly x^n elem x^-n (n may be negative)
    static std::optional<std::pair<long long, int>> block_key(const std::vector<Atom>& atoms,
                                                              std::size_t lo, std::size_t hi) {
        const std::size_t len = hi - lo;
        if (len < 3 || len % 2 == 0) return std::nullopt;
        const std::size_t n = (len - 1) / 2;
        const AtomKind open = atoms[lo].kind;
        if (open != AtomKind::XPlus && open != AtomKind::XMinus) return std::nullopt;
        const AtomKind close = open == AtomKind::XPlus ? AtomKind::XMinus : AtomKind::XPlus;
        for (std::size_t r = 0; r < n; ++r)
            if (atoms[lo + r].kind != open || atoms[hi - 1 - r].kind != close) return std::nullopt;
        const Atom& mid = atoms[lo + n];
        if (mid.kind != AtomKind::Emb) return std::nullopt;
        const long long level = open == AtomKind::XPlus ? static_cast<long long>(n)
                                                        : -static_cast<long long>(n);
        return std::make_pair(level, mid.elem);
    }
};

}  // namespace

PointedMachine to_machine(const GenWord& w, const FiniteGroup& g, std::size_t state_budget,
                          MachineCache* cache) {
    Builder b{g, state_budget, cache, cayley_machine(g), nullptr};
    b.cayley_inv = invert(*b.cayley);

    const std::vector<Atom> atoms = atomize(w, g);
    if (atoms.empty()) return identity_machine(g.order());

    // split at zero crossings of the running x-exponent; every chunk except
    // possibly the last then represents a bounded-depth transformation
    std::vector<std::size_t> bounds{0};
    long long s = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        s += atoms[i].x_shift();
        if (s == 0 && i + 1 < atoms.size()) bounds.push_back(i + 1);
    }
    bounds.push_back(atoms.size());

    PointedMachine acc = b.build_range(atoms, bounds[bounds.size() - 2], bounds.back());
    for (std::size_t c = bounds.size() - 2; c > 0; --c)
        acc = b.compose_min(b.build_range(atoms, bounds[c - 1], bounds[c]), acc);
    return acc;
}

std::vector<int> act_word(const GenWord& w, const FiniteGroup& g, std::span<const int> input) {
    const std::vector<Atom> atoms = atomize(w, g);
    const int k = g.order();
    // per-atom simulation state: group element for Cayley/reset stages,
    // consumed flag for embedded letters
    std::vector<int> st(atoms.size());
    for (std::size_t i = 0; i < atoms.size(); ++i)
        st[i] = (atoms[i].kind == AtomKind::Cg || atoms[i].kind == AtomKind::CgInv)
                    ? atoms[i].elem
                    : 0;

    std::vector<int> out;
    out.reserve(input.size());
    for (int a : input) {
        if (a < 0 || a >= k)
            throw LetterOutOfRange("letter " + std::to_string(a) + " outside alphabet of size " +
                                   std::to_string(k));
        int v = a;
        for (std::size_t i = atoms.size(); i-- > 0;) {
            switch (atoms[i].kind) {
                case AtomKind::XMinus:
                case AtomKind::Cg: {  // Cayley: output st*v, move there
                    v = g.mul(st[i], v);
                    st[i] = v;
                    break;
                }
                case AtomKind::XPlus:
                case AtomKind::CgInv: {  // reset: output st^-1 v, remember input
                    const int in = v;
                    v = g.mul(g.inv(st[i]), v);
                    st[i] = in;
                    break;
                }
                case AtomKind::Emb: {
                    if (st[i] == 0) {
                        v = g.mul(atoms[i].elem, v);
                        st[i] = 1;
                    }
                    break;
                }
            }
        }
        out.push_back(v);
    }
    return out;
}

}  // namespace cayley
