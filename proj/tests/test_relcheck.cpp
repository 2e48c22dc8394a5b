#include "cayley/relcheck.hpp"

#include "cayley/mealy.hpp"
#include "doctest.h"

using namespace cayley;

TEST_CASE("single relation checks under both engines") {
    const GroupPtr q8 = FiniteGroup::builtin("q8");
    const int i = q8->index_of("i"), j = q8->index_of("j");
    for (const Method m : {Method::Machine, Method::Action}) {
        VerifyOptions opts;
        opts.method = m;
        CHECK(verify_relation(*q8, 1, i, j, opts) == Verdict::Pass);
        CHECK(verify_relation(*q8, 2, i, j, opts) == Verdict::Pass);
    }
    const GroupPtr z4 = FiniteGroup::builtin("z4");
    for (long long n = 1; n <= 3; ++n)
        for (int g = 0; g < 4; ++g)
            for (int h = 0; h < 4; ++h)
                CHECK(verify_relation(*z4, n, g, h) == Verdict::Pass);
}

TEST_CASE("the n=1 relation words are [xgx^-1, h] and x [g^-1,h^-1] x^-1") {
    const GroupPtr q8 = FiniteGroup::builtin("q8");
    const int i = q8->index_of("i"), j = q8->index_of("j");
    const CoeffMatrix m = CoeffMatrix::build_recursive(1);
    CHECK(format(relation_lhs(1, i, j, *q8), *q8) == "x -i x^-1 -j x i x^-1 j");
    CHECK(format(relation_rhs(1, i, j, *q8, m), *q8) == "x -1 x^-1");
}

TEST_CASE("verify_all counts and verdicts") {
    VerifyOptions opts;
    const VerificationReport q8 = verify_all(*FiniteGroup::builtin("q8"), 3, opts);
    CHECK(q8.checks.size() == 192);
    CHECK(q8.passed == 192);
    CHECK(q8.all_pass());

    const VerificationReport d4 = verify_all(*FiniteGroup::builtin("d4"), 3, opts);
    CHECK(d4.checks.size() == 192);
    CHECK(d4.all_pass());
}

TEST_CASE("heis3 relations at n <= 2") {
    const VerificationReport r = verify_all(*FiniteGroup::builtin("heis3"), 2);
    CHECK(r.checks.size() == 1458);
    CHECK(r.all_pass());
}

TEST_CASE("the class-3 control fails somewhere at n <= 4") {
    const GroupPtr d16 = FiniteGroup::builtin("d8_16");
    const VerificationReport r = verify_all(*d16, 4);
    CHECK(r.failed > 0);
    // frozen witness: the first failing triple found by the search
    REQUIRE(!r.checks.empty());
    const CheckRecord* first_fail = nullptr;
    for (const CheckRecord& c : r.checks)
        if (c.verdict == Verdict::Fail) {
            first_fail = &c;
            break;
        }
    REQUIRE(first_fail != nullptr);
    CHECK(first_fail->n == 1);
    CHECK(d16->label(first_fail->g) == "r");
    CHECK(d16->label(first_fail->h) == "s");
    // frozen regression fixture: [x r x^-1, s] != x [r^-1, s^-1] x^-1 in d8_16
    CHECK(verify_relation(*d16, 1, d16->index_of("r"), d16->index_of("s")) == Verdict::Fail);
    VerifyOptions action;
    action.method = Method::Action;
    CHECK(verify_relation(*d16, 1, d16->index_of("r"), d16->index_of("s"), action) ==
          Verdict::Fail);
}

TEST_CASE("relation verdicts are stable under group automorphisms") {
    const GroupPtr q8 = FiniteGroup::builtin("q8");
    // relabel by conjugation: phi(y) = j y j^-1, an automorphism of q8
    const int j = q8->index_of("j");
    std::vector<int> phi(8);
    for (int y = 0; y < 8; ++y) phi[static_cast<std::size_t>(y)] = q8->mul(q8->mul(j, y), q8->inv(j));
    std::vector<std::string> labels(8);
    std::vector<std::vector<int>> table(8, std::vector<int>(8));
    for (int y = 0; y < 8; ++y) labels[static_cast<std::size_t>(phi[static_cast<std::size_t>(y)])] = q8->label(y);
    // permuted table: phi is an isomorphism, so t[phi(a)][phi(b)] = phi(ab)
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            table[static_cast<std::size_t>(phi[static_cast<std::size_t>(a)])]
                 [static_cast<std::size_t>(phi[static_cast<std::size_t>(b)])] =
                     phi[static_cast<std::size_t>(q8->mul(a, b))];
    const GroupPtr twisted = FiniteGroup::from_table(labels, table, "q8-twisted");
    const VerificationReport r = verify_all(*twisted, 2);
    CHECK(r.checks.size() == 128);
    CHECK(r.all_pass());
}

TEST_CASE("wreath coordinates") {
    const GroupPtr q8 = FiniteGroup::builtin("q8");
    CHECK(verify_wreath_coords(*q8, q8->index_of("i"), 0) == Verdict::Pass);
    CHECK(verify_wreath_coords(*q8, q8->index_of("i"), 1) == Verdict::Pass);
    const GroupPtr z2 = FiniteGroup::builtin("z2");
    CHECK(verify_wreath_coords(*z2, 1, 2) == Verdict::Pass);
    const VerificationReport r = verify_wreath_all(*q8, 2);
    CHECK(r.checks.size() == 24);
    CHECK(r.all_pass());
}

TEST_CASE("depth of conjugates") {
    const GroupPtr q8 = FiniteGroup::builtin("q8");
    CHECK(verify_depth(*q8, q8->index_of("i"), 0) == Verdict::Pass);
    CHECK(verify_depth(*q8, q8->index_of("i"), 2) == Verdict::Pass);
    CHECK(verify_depth(*q8, 0, 3) == Verdict::Vacuous);
    const VerificationReport r = verify_depth_all(*q8, 3);
    CHECK(r.all_pass());
}

TEST_CASE("cross validation on a small budget") {
    const VerificationReport r = cross_validate(*FiniteGroup::builtin("q8"), 60, 12, 7);
    CHECK(r.checks.size() == 120);
    CHECK(r.all_pass());
    const VerificationReport z2 = cross_validate(*FiniteGroup::builtin("z2"), 60, 12, 9);
    CHECK(z2.all_pass());
}

TEST_CASE("a word equals its free reduction under both oracles") {
    const GroupPtr q8 = FiniteGroup::builtin("q8");
    const GenWord u = parse("x i x^-1 j", *q8);
    const GenWord v = parse("x x^-1 x i i -i x^-1 j C(j) C(j)^-1", *q8);
    CHECK(nf_equal(normalize(u, *q8), normalize(v, *q8)));
    CHECK(equal(to_machine(u, *q8), to_machine(v, *q8)));
}

TEST_CASE("word_equal on arbitrary words") {
    const GroupPtr q8 = FiniteGroup::builtin("q8");
    VerifyOptions machine, action;
    machine.method = Method::Machine;
    action.method = Method::Action;
    struct Case {
        const char* u;
        const char* v;
        bool same;
    };
    // negative levels and nonzero x-exponents exercise the conjugation step
    const Case cases[] = {
        {"C(i) C(j)", "x^-1 i x x^-2 j x^2 x^-2", true},
        {"C(i) C(j)", "C(j) C(i)", false},
        {"x^2", "x^3", false},
        {"x^-3 i x^3", "x^-3 i x^3 j -j", true},
        {"", "i -i", true},
        {"x i x^-1 j", "j x i x^-1", false},
    };
    for (const Case& c : cases) {
        const GenWord u = parse(c.u, *q8);
        const GenWord v = parse(c.v, *q8);
        CHECK(word_equal(u, v, *q8, machine) == c.same);
        CHECK(word_equal(u, v, *q8, action) == c.same);
        CHECK(nf_equal(normalize(u, *q8), normalize(v, *q8)) == c.same);
    }
}

TEST_CASE("embedding anchor") {
    for (const std::string& name : FiniteGroup::builtin_names())
        CHECK(check_embedding(*FiniteGroup::builtin(name)));
}

TEST_CASE("x has no torsion up to 16 over the catalog") {
    for (const std::string& name : FiniteGroup::builtin_names())
        CHECK(x_power_nontrivial(*FiniteGroup::builtin(name), 16));
}

TEST_CASE("abelian groups degenerate to empty correction products") {
    for (const char* name : {"z2", "z4", "z2xz2"}) {
        const GroupPtr g = FiniteGroup::builtin(name);
        const CoeffMatrix m = CoeffMatrix::build_recursive(6);
        for (long long n = 1; n <= 6; ++n)
            for (int a = 0; a < g->order(); ++a)
                for (int b = 0; b < g->order(); ++b)
                    CHECK(relation_rhs(n, a, b, *g, m).empty());
        const VerificationReport r = verify_all(*g, 4);
        CHECK(r.all_pass());
    }
}

TEST_CASE("report rendering") {
    const GroupPtr z2 = FiniteGroup::builtin("z2");
    const VerificationReport r = verify_all(*z2, 1);
    CHECK(render_summary(r) == "4 checks, 4 pass");
    const std::string lines = render_lines(r, *z2);
    CHECK(lines.find("CHECK rel n=1 g=e h=e PASS\n") == 0);
    CHECK(lines.find("CHECK rel n=1 g=t h=t PASS") != std::string::npos);
}

TEST_CASE("both engines return identical verdicts, including failures") {
    // d8_16 fails on many triples; the two engines must agree check by check
    const GroupPtr d16 = FiniteGroup::builtin("d8_16");
    VerifyOptions machine, action;
    machine.method = Method::Machine;
    action.method = Method::Action;
    MachineCache cm, ca;
    int fails = 0;
    for (long long n = 1; n <= 2; ++n)
        for (int g = 0; g < 16; ++g)
            for (int h = 0; h < 16; ++h) {
                const Verdict vm = verify_relation(*d16, n, g, h, machine, &cm);
                const Verdict va = verify_relation(*d16, n, g, h, action, &ca);
                CHECK(vm == va);
                if (vm == Verdict::Fail) ++fails;
            }
    CHECK(fails > 0);
}

TEST_CASE("action engine respects its cost cap") {
    const GroupPtr q8 = FiniteGroup::builtin("q8");
    VerifyOptions opts;
    opts.method = Method::Action;
    opts.action_cap = 100;
    CHECK_THROWS_AS(verify_relation(*q8, 3, 1, 2, opts), ActionCostExceeded);
}
