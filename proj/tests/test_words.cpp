#include "cayley/words.hpp"

#include "cayley/rng.hpp"
#include "doctest.h"

using namespace cayley;

namespace {

GenWord random_word(Rng& rng, const FiniteGroup& g, int max_len) {
    GenWord w;
    const int len = static_cast<int>(rng.uniform(static_cast<uint64_t>(max_len) + 1));
    for (int i = 0; i < len; ++i) {
        Letter l;
        long long e = rng.range(-3, 3);
        if (e == 0) e = 1;
        l.exp = e;
        switch (rng.uniform(3)) {
            case 0: l.kind = LetterKind::X; break;
            case 1:
                l.kind = LetterKind::Embedded;
                l.elem = static_cast<int>(rng.uniform(static_cast<uint64_t>(g.order())));
                break;
            default:
                l.kind = LetterKind::StateGen;
                l.elem = static_cast<int>(rng.uniform(static_cast<uint64_t>(g.order())));
                break;
        }
        w.letters.push_back(l);
    }
    return w;
}

// machine state counts grow like |G|^(x-exponent window), so words headed
// for to_machine keep the running exponent within [-2, 2]
GenWord bounded_random_word(Rng& rng, const FiniteGroup& g, int max_len) {
    GenWord w;
    const int len = 1 + static_cast<int>(rng.uniform(static_cast<uint64_t>(max_len)));
    long long s = 0;
    for (int i = 0; i < len; ++i) {
        for (;;) {
            const int kind = static_cast<int>(rng.uniform(3));
            if (kind == 0) {
                const long long e = rng.uniform(2) ? 1 : -1;
                if (s + e < -2 || s + e > 2) continue;
                s += e;
                w.letters.push_back({LetterKind::X, -1, e});
            } else if (kind == 1) {
                long long e = rng.range(-2, 2);
                if (e == 0) e = 1;
                w.letters.push_back(
                    {LetterKind::Embedded,
                     static_cast<int>(rng.uniform(static_cast<uint64_t>(g.order()))), e});
            } else {
                const long long e = rng.uniform(2) ? 1 : -1;
                if (s - e < -2 || s - e > 2) continue;
                s -= e;
                w.letters.push_back(
                    {LetterKind::StateGen,
                     static_cast<int>(rng.uniform(static_cast<uint64_t>(g.order()))), e});
            }
            break;
        }
    }
    return w;
}

}  // namespace

TEST_CASE("parse examples") {
    const GroupPtr g = FiniteGroup::builtin("q8");
    const int i = g->index_of("i"), j = g->index_of("j");

    const GenWord a = parse("x^2 i x^-2", *g);
    REQUIRE(a.letters.size() == 3);
    CHECK(a.letters[0] == Letter{LetterKind::X, -1, 2});
    CHECK(a.letters[1] == Letter{LetterKind::Embedded, i, 1});
    CHECK(a.letters[2] == Letter{LetterKind::X, -1, -2});

    const GenWord b = parse("C(i)^-1 C(j)", *g);
    REQUIRE(b.letters.size() == 2);
    CHECK(b.letters[0] == Letter{LetterKind::StateGen, i, -1});
    CHECK(b.letters[1] == Letter{LetterKind::StateGen, j, 1});

    CHECK(parse("", *g).empty());
    CHECK(parse("   ", *g).empty());
}

TEST_CASE("parse errors") {
    const GroupPtr g = FiniteGroup::builtin("q8");
    CHECK_THROWS_AS(parse("foo", *g), UnknownLabel);
    CHECK_THROWS_AS(parse("C(foo)", *g), UnknownLabel);
    CHECK_THROWS_AS(parse("x^0", *g), ZeroExponent);
    CHECK_THROWS_AS(parse("x^", *g), SyntaxError);
    CHECK_THROWS_AS(parse("x^+3", *g), SyntaxError);
    CHECK_THROWS_AS(parse("C(i", *g), SyntaxError);
    CHECK_THROWS_AS(parse("^2", *g), SyntaxError);
    try {
        parse("x i^", *g);
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.position == 5);  // after the caret of the second token
    }
    try {
        parse("x j^0", *g);
        FAIL("expected ZeroExponent");
    } catch (const ZeroExponent& e) {
        CHECK(e.position == 5);
    }
}

TEST_CASE("format and round trips") {
    const GroupPtr g = FiniteGroup::builtin("q8");
    GenWord w;
    w.letters = {{LetterKind::X, -1, 2}};
    CHECK(format(w, *g) == "x^2");
    CHECK(format(GenWord{}, *g).empty());
    CHECK(format(parse("x  i   x^-1", *g), *g) == "x i x^-1");

    Rng rng(42);
    for (int trial = 0; trial < 1000; ++trial) {
        const GenWord u = random_word(rng, *g, 12);
        CHECK(parse(format(u, *g), *g) == u);
    }
}

TEST_CASE("to_conjugates examples") {
    const GroupPtr g = FiniteGroup::builtin("q8");
    const int i = g->index_of("i"), j = g->index_of("j");

    const ConjugateSequence a = to_conjugates(parse("x i x^-1 j", *g), *g);
    REQUIRE(a.factors.size() == 2);
    CHECK(a.factors[0] == ConjugateFactor{1, i});
    CHECK(a.factors[1] == ConjugateFactor{0, j});
    CHECK(a.t == 0);

    const ConjugateSequence b = to_conjugates(parse("C(i)", *g), *g);
    REQUIRE(b.factors.size() == 1);
    CHECK(b.factors[0] == ConjugateFactor{-1, i});
    CHECK(b.t == -1);

    const ConjugateSequence c = to_conjugates(parse("x^3", *g), *g);
    CHECK(c.factors.empty());
    CHECK(c.t == 3);

    // C(g)^-1 = g^-1 x: factor at the current level, then shift up
    const ConjugateSequence d = to_conjugates(parse("C(i)^-1", *g), *g);
    REQUIRE(d.factors.size() == 1);
    CHECK(d.factors[0] == ConjugateFactor{0, g->inv(i)});
    CHECK(d.t == 1);
}

TEST_CASE("t is the signed sum of x-exponents after expansion") {
    const GroupPtr g = FiniteGroup::builtin("d4");
    Rng rng(9);
    for (int trial = 0; trial < 300; ++trial) {
        const GenWord w = random_word(rng, *g, 10);
        long long t = 0;
        for (const Letter& l : w.letters) {
            if (l.kind == LetterKind::X) t += l.exp;
            if (l.kind == LetterKind::StateGen) t -= l.exp;
        }
        CHECK(to_conjugates(w, *g).t == t);
    }
}

TEST_CASE("to_machine examples") {
    const GroupPtr g = FiniteGroup::builtin("q8");
    for (int e = 0; e < g->order(); ++e) {
        GenWord w;
        w.letters = {{LetterKind::X, -1, 1}, {LetterKind::StateGen, e, 1}};
        CHECK(equal(to_machine(w, *g), embedded_element(*g, e)));
    }
    CHECK(is_identity(to_machine(GenWord{}, *g)));
    CHECK(equal(to_machine(parse("C(1)^-1", *g), *g), x_machine(*g)));
}

TEST_CASE("machine semantics match the conjugate expansion") {
    Rng rng(77);
    for (const char* name : {"z4", "q8", "d4"}) {
        const GroupPtr g = FiniteGroup::builtin(name);
        for (int trial = 0; trial < 60; ++trial) {
            const GenWord w = bounded_random_word(rng, *g, 8);
            const GenWord expanded = expand_conjugates(to_conjugates(w, *g));
            CHECK(equal(to_machine(w, *g), to_machine(expanded, *g)));
        }
    }
}

TEST_CASE("act_word agrees with the materialized machine") {
    Rng rng(55);
    const GroupPtr g = FiniteGroup::builtin("q8");
    for (int trial = 0; trial < 60; ++trial) {
        const GenWord w = bounded_random_word(rng, *g, 8);
        const PointedMachine p = to_machine(w, *g);
        for (int rep = 0; rep < 5; ++rep) {
            std::vector<int> in(static_cast<std::size_t>(1 + rng.uniform(10)));
            for (int& a : in) a = static_cast<int>(rng.uniform(8));
            CHECK(act_word(w, *g, in) == act(p, in));
        }
    }
}

TEST_CASE("inverse word inverts the transformation") {
    Rng rng(31);
    const GroupPtr g = FiniteGroup::builtin("d4");
    for (int trial = 0; trial < 40; ++trial) {
        const GenWord w = bounded_random_word(rng, *g, 8);
        CHECK(is_identity(to_machine(concat(w, inverse_word(w)), *g)));
    }
}

TEST_CASE("expansion guard") {
    const GroupPtr g = FiniteGroup::builtin("z2");
    GenWord w;
    w.letters = {{LetterKind::StateGen, 1, 2'000'000}};
    CHECK_THROWS_AS(to_conjugates(w, *g), WordTooLarge);
}
