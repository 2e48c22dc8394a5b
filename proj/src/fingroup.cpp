#include "cayley/fingroup.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace cayley {

namespace {

void validate_labels(const std::vector<std::string>& labels) {
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const std::string& l = labels[i];
        if (l.empty())
            throw GroupError("label " + std::to_string(i) + " is empty");
        if (l.find_first_of(" \t\r\n") != std::string::npos)
            throw GroupError("label '" + l + "' contains whitespace");
        if (l == "x")
            throw ReservedLabelX("label 'x' is reserved for the generator x");
        if (l.front() == '#')
            throw GroupError("label '" + l + "' must not start with '#'");
        if (l.size() >= 3 && l.rfind("C(", 0) == 0 && l.back() == ')')
            throw GroupError("label '" + l + "' collides with the C(...) generator syntax");
        if (!seen.insert(l).second)
            throw DuplicateLabel("label '" + l + "' appears twice");
    }
}

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

}  // namespace

GroupPtr FiniteGroup::from_table(std::vector<std::string> labels,
                                 const std::vector<std::vector<int>>& table,
                                 std::string name) {
    const int k = static_cast<int>(labels.size());
    if (k == 0) throw GroupError("group must have at least one element");
    validate_labels(labels);

    if (static_cast<int>(table.size()) != k)
        throw NotLatinSquare("table has " + std::to_string(table.size()) + " rows, expected " +
                             std::to_string(k));
    for (int r = 0; r < k; ++r)
        if (static_cast<int>(table[static_cast<std::size_t>(r)].size()) != k)
            throw NotLatinSquare("row " + std::to_string(r) + " has " +
                                 std::to_string(table[static_cast<std::size_t>(r)].size()) +
                                 " entries, expected " + std::to_string(k));

    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->name_ = std::move(name);
    g->k_ = k;
    g->labels_ = std::move(labels);
    g->table_.resize(static_cast<std::size_t>(k) * k);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) {
            const int v = table[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (v < 0 || v >= k)
                throw NotLatinSquare("entry (" + std::to_string(r) + "," + std::to_string(c) +
                                     ") = " + std::to_string(v) + " is out of range");
            g->table_[static_cast<std::size_t>(r) * k + c] = v;
        }

    // every row and column is a permutation
    std::vector<char> seen(static_cast<std::size_t>(k));
    for (int r = 0; r < k; ++r) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int c = 0; c < k; ++c) {
            const int v = g->mul(r, c);
            if (seen[static_cast<std::size_t>(v)])
                throw NotLatinSquare("row " + std::to_string(r) + " repeats entry " +
                                     std::to_string(v));
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }
    for (int c = 0; c < k; ++c) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int r = 0; r < k; ++r) {
            const int v = g->mul(r, c);
            if (seen[static_cast<std::size_t>(v)])
                throw NotLatinSquare("column " + std::to_string(c) + " repeats entry " +
                                     std::to_string(v));
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }

    // identity law at index 0
    for (int c = 0; c < k; ++c)
        if (g->mul(0, c) != c)
            throw NoIdentityAtIndexZero("table[0][" + std::to_string(c) + "] = " +
                                        std::to_string(g->mul(0, c)) + ", expected " +
                                        std::to_string(c));
    for (int r = 0; r < k; ++r)
        if (g->mul(r, 0) != r)
            throw NoIdentityAtIndexZero("table[" + std::to_string(r) + "][0] = " +
                                        std::to_string(g->mul(r, 0)) + ", expected " +
                                        std::to_string(r));

    // associativity, exhaustively
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            const int ab = g->mul(a, b);
            for (int c = 0; c < k; ++c)
                if (g->mul(ab, c) != g->mul(a, g->mul(b, c)))
                    throw NotAssociative("(" + std::to_string(a) + "*" + std::to_string(b) +
                                         ")*" + std::to_string(c) + " != " + std::to_string(a) +
                                         "*(" + std::to_string(b) + "*" + std::to_string(c) + ")");
        }

    // inverses (two-sided once associativity holds)
    g->inv_.assign(static_cast<std::size_t>(k), -1);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (g->mul(a, b) == 0) {
                g->inv_[static_cast<std::size_t>(a)] = b;
                break;
            }

    // element orders and group exponent
    g->elt_order_.assign(static_cast<std::size_t>(k), 0);
    for (int a = 0; a < k; ++a) {
        int p = a, n = 1;
        while (p != 0) {
            p = g->mul(p, a);
            ++n;
        }
        g->elt_order_[static_cast<std::size_t>(a)] = n;
    }
    g->exponent_ = 1;
    for (int a = 0; a < k; ++a) g->exponent_ = lcm_ll(g->exponent_, g->elt_order(a));

    for (int z = 0; z < k; ++z) {
        bool central = true;
        for (int a = 0; a < k && central; ++a) central = g->mul(z, a) == g->mul(a, z);
        if (central) g->center_.push_back(z);
    }

    // class <= 2 iff every commutator is central
    g->class2_ = true;
    for (int a = 0; a < k && g->class2_; ++a)
        for (int b = 0; b < k && g->class2_; ++b) {
            const int c = g->commutator(a, b);
            for (int z = 0; z < k; ++z)
                if (g->mul(c, z) != g->mul(z, c)) {
                    g->class2_ = false;
                    g->class_witness_ = ClassWitness{a, b, z};
                    break;
                }
        }

    return g;
}

int FiniteGroup::index_of(const std::string& label) const {
    for (int i = 0; i < k_; ++i)
        if (labels_[static_cast<std::size_t>(i)] == label) return i;
    return -1;
}

int FiniteGroup::power(int g, long long e) const {
    const long long m = elt_order(g);
    long long r = e % m;
    if (r < 0) r += m;
    int acc = 0;
    for (long long i = 0; i < r; ++i) acc = mul(acc, g);
    return acc;
}

int FiniteGroup::power(int g, const BigInt& e) const {
    const BigInt m = elt_order(g);
    BigInt r = e % m;
    if (r < 0) r += m;
    return power(g, r.convert_to<long long>());
}

int FiniteGroup::commutator(int g, int h) const {
    return mul(mul(mul(inv(g), inv(h)), g), h);
}

// ---- catalog -------------------------------------------------------------

namespace {

GroupPtr make_cyclic(int n, const std::vector<std::string>& labels, const std::string& name) {
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
    return FiniteGroup::from_table(labels, t, name);
}

GroupPtr make_klein() {
    // index = 2*b + a over (Z/2)^2, labels chosen to read naturally
    std::vector<std::string> labels{"e", "a", "b", "ab"};
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) t[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = p ^ q;
    return FiniteGroup::from_table(labels, t, "z2xz2");
}

GroupPtr make_s3() {
    using Perm = std::array<int, 3>;
    const std::vector<Perm> perms{{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                  {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    const std::vector<std::string> labels{"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
    auto find = [&](const Perm& p) {
        for (std::size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == p) return static_cast<int>(i);
        return -1;
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            Perm c;  // (p*q)(x) = p(q(x))
            for (int x = 0; x < 3; ++x)
                c[static_cast<std::size_t>(x)] =
                    perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(
                        perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)])];
            t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = find(c);
        }
    return FiniteGroup::from_table(labels, t, "s3");
}

// dihedral of order 2n: elements r^i s^j, index = i + n*j
GroupPtr make_dihedral(int n, const std::string& name) {
    std::vector<std::string> labels;
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < n; ++i) {
            std::string l;
            if (i == 0 && j == 0) l = "e";
            if (i == 1) l = "r";
            if (i > 1) l = "r" + std::to_string(i);
            if (j == 1) l += "s";
            labels.push_back(l);
        }
    const int k = 2 * n;
    std::vector<std::vector<int>> t(static_cast<std::size_t>(k),
                                    std::vector<int>(static_cast<std::size_t>(k)));
    for (int i1 = 0; i1 < n; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < n; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    // (r^i1 s^j1)(r^i2 s^j2) = r^(i1 + (-1)^j1 i2) s^(j1+j2)
                    const int i = ((i1 + (j1 ? n - i2 : i2)) % n + n) % n;
                    const int j = (j1 + j2) % 2;
                    t[static_cast<std::size_t>(i1 + n * j1)][static_cast<std::size_t>(i2 + n * j2)] =
                        i + n * j;
                }
    return FiniteGroup::from_table(labels, t, name);
}

GroupPtr make_q8() {
    // elements (unit, sign): 1,-1,i,-i,j,-j,k,-k
    const std::vector<std::string> labels{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    // umul[a][b] = {unit, sign} for units 0=1,1=i,2=j,3=k
    struct US {
        int u, s;
    };
    const US umul[4][4] = {
        {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
        {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
        {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
        {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
    };
    auto idx = [](int u, int s) { return u == 0 ? s : 2 * u + s; };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int u1 = 0; u1 < 4; ++u1)
        for (int s1 = 0; s1 < 2; ++s1)
            for (int u2 = 0; u2 < 4; ++u2)
                for (int s2 = 0; s2 < 2; ++s2) {
                    const US p = umul[u1][u2];
                    t[static_cast<std::size_t>(idx(u1, s1))][static_cast<std::size_t>(idx(u2, s2))] =
                        idx(p.u, (s1 + s2 + p.s) % 2);
                }
    return FiniteGroup::from_table(labels, t, "q8");
}

GroupPtr make_heis3() {
    // triples (a,b,c) mod 3 with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b')
    std::vector<std::string> labels;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                labels.push_back(std::to_string(a) + std::to_string(b) + std::to_string(c));
    auto idx = [](int a, int b, int c) { return 9 * a + 3 * b + c; };
    std::vector<std::vector<int>> t(27, std::vector<int>(27));
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int a2 = 0; a2 < 3; ++a2)
                    for (int b2 = 0; b2 < 3; ++b2)
                        for (int c2 = 0; c2 < 3; ++c2)
                            t[static_cast<std::size_t>(idx(a, b, c))]
                             [static_cast<std::size_t>(idx(a2, b2, c2))] =
                                 idx((a + a2) % 3, (b + b2) % 3, (c + c2 + a * b2) % 3);
    return FiniteGroup::from_table(labels, t, "heis3");
}

}  // namespace

const std::vector<std::string>& FiniteGroup::builtin_names() {
    static const std::vector<std::string> names{"z2",  "z4", "z2xz2", "s3",
                                                "d4",  "q8", "heis3", "d8_16"};
    return names;
}

GroupPtr FiniteGroup::builtin(const std::string& name) {
    if (name == "z2") return make_cyclic(2, {"e", "t"}, "z2");
    if (name == "z4") return make_cyclic(4, {"e", "r", "r2", "r3"}, "z4");
    if (name == "z2xz2") return make_klein();
    if (name == "s3") return make_s3();
    if (name == "d4") return make_dihedral(4, "d4");
    if (name == "q8") return make_q8();
    if (name == "heis3") return make_heis3();
    if (name == "d8_16") return make_dihedral(8, "d8_16");
    throw UnknownName("unknown builtin group '" + name + "'");
}

// ---- file format ----------------------------------------------------------

GroupPtr FiniteGroup::load(std::istream& in, std::string name) {
    std::string line;
    std::size_t lineno = 0;
    auto next_line = [&](std::vector<std::string>& tokens) {
        tokens.clear();
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            std::istringstream ls(line);
            std::string tok;
            while (ls >> tok) tokens.push_back(tok);
            if (tokens.empty()) continue;          // blank line
            if (tokens.front().front() == '#') {   // comment
                tokens.clear();
                continue;
            }
            return true;
        }
        return false;
    };

    std::vector<std::string> tok;
    if (!next_line(tok)) throw GroupFileError(lineno + 1, "expected 'order K', got end of file");
    if (tok.size() != 2 || tok[0] != "order")
        throw GroupFileError(lineno, "expected 'order K'");
    int k = 0;
    try {
        k = std::stoi(tok[1]);
    } catch (const std::exception&) {
        throw GroupFileError(lineno, "invalid order '" + tok[1] + "'");
    }
    if (k <= 0) throw GroupFileError(lineno, "order must be positive");

    if (!next_line(tok)) throw GroupFileError(lineno + 1, "expected 'elements ...', got end of file");
    if (tok.empty() || tok[0] != "elements" || static_cast<int>(tok.size()) != k + 1)
        throw GroupFileError(lineno, "expected 'elements' followed by " + std::to_string(k) +
                                         " labels");
    std::vector<std::string> labels(tok.begin() + 1, tok.end());
    std::unordered_map<std::string, int> index;
    for (int i = 0; i < k; ++i) index[labels[static_cast<std::size_t>(i)]] = i;

    std::vector<std::vector<int>> table;
    for (int r = 0; r < k; ++r) {
        if (!next_line(tok))
            throw GroupFileError(lineno + 1, "expected table row " + std::to_string(r + 1) +
                                                 ", got end of file");
        if (static_cast<int>(tok.size()) != k)
            throw GroupFileError(lineno, "table row has " + std::to_string(tok.size()) +
                                             " entries, expected " + std::to_string(k));
        std::vector<int> row;
        for (const std::string& cell : tok) {
            auto it = index.find(cell);
            if (it == index.end())
                throw GroupFileError(lineno, "label '" + cell + "' not declared in elements line");
            row.push_back(it->second);
        }
        table.push_back(std::move(row));
    }
    return from_table(std::move(labels), table, std::move(name));
}

GroupPtr FiniteGroup::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open group file '" + path + "'");
    return load(in, path);
}

void FiniteGroup::save(std::ostream& out) const {
    out << "order " << k_ << "\n";
    out << "elements";
    for (const std::string& l : labels_) out << ' ' << l;
    out << "\n";
    for (int r = 0; r < k_; ++r) {
        for (int c = 0; c < k_; ++c) out << (c ? " " : "") << label(mul(r, c));
        out << "\n";
    }
}

// ---- element wrapper -------------------------------------------------------

namespace {
void check_same(const GroupElement& a, const GroupElement& b) {
    if (&a.group() != &b.group())
        throw GroupMismatch("elements belong to different groups");
}
}  // namespace

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
    check_same(a, b);
    return {a.group(), a.group().mul(a.index(), b.index())};
}

GroupElement inverse(const GroupElement& a) { return {a.group(), a.group().inv(a.index())}; }

GroupElement power(const GroupElement& g, const BigInt& e) {
    return {g.group(), g.group().power(g.index(), e)};
}

GroupElement commutator(const GroupElement& g, const GroupElement& h) {
    check_same(g, h);
    return {g.group(), g.group().commutator(g.index(), h.index())};
}

}  // namespace cayley
