#include "cayley/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cayley/fingroup.hpp"
#include "doctest.h"

using namespace cayley;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("group info (builtin)") {
    const Result r = run({"group", "--group", "q8", "--info"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "name: q8\n"
          "order: 8\n"
          "elements: 1 -1 i -i j -j k -k\n"
          "class <= 2: yes\n"
          "center: {1, -1}\n"
          "exponent: 4\n");
}

TEST_CASE("group info for a class-3 control names a witness") {
    const Result r = run({"group", "--group", "d8_16"});
    CHECK(r.code == 0);
    CHECK(r.out.find("class <= 2: no (witness g=") != std::string::npos);
}

TEST_CASE("group from file") {
    const std::string path = "cli_test_d4.grp";
    {
        std::ofstream f(path);
        FiniteGroup::builtin("d4")->save(f);
    }
    const Result r = run({"group", "--file", path, "--info"});
    CHECK(r.code == 0);
    CHECK(r.out.find("order: 8\n") != std::string::npos);
    CHECK(r.out.find("class <= 2: yes\n") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("truncated group file reports the line number") {
    const std::string path = "cli_test_trunc.grp";
    {
        std::ofstream f(path);
        f << "order 2\nelements e t\ne t\n";
    }
    const Result r = run({"group", "--file", path});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 4") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("unknown builtin name") {
    const Result r = run({"group", "--group", "foo"});
    CHECK(r.code == 2);
    CHECK(r.err.find("unknown builtin group 'foo'") != std::string::npos);
}

TEST_CASE("a group source is required") {
    const Result r = run({"group"});
    CHECK(r.code == 2);
}

TEST_CASE("coeffs table") {
    const Result r = run({"coeffs", "--n-max", "3"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "-1\n"
          " 1 -2\n"
          "    3 -4\n");
}

TEST_CASE("coeffs csv") {
    const Result r = run({"coeffs", "--n-max", "3", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "-1,0,0\n"
          "1,-2,0\n"
          "0,3,-4\n");
}

TEST_CASE("coeffs check") {
    const Result r = run({"coeffs", "--n-max", "12", "--check"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "row identities: 12/12 pass\n"
          "summation identities: 66/66 pass\n");
}

TEST_CASE("machine dump") {
    const Result r = run({"machine", "--group", "z2"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "e | e -> e / e\n"
          "e | t -> t / t\n"
          "t | e -> t / t\n"
          "t | t -> e / e\n");
}

TEST_CASE("inverse machine dump is the reset automaton") {
    const Result r = run({"machine", "--group", "z2", "--invert"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "e | e -> e / e\n"
          "e | t -> t / t\n"
          "t | e -> t / e\n"
          "t | t -> e / t\n");
}

TEST_CASE("word machine dump") {
    const Result r = run({"machine", "--group", "q8", "x C(i)", "--minimize"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("initial: q0\n", 0) == 0);
    CHECK(r.out.find("q0 | j -> k / q1\n") != std::string::npos);
}

TEST_CASE("act") {
    const Result r = run({"act", "--group", "q8", "x C(i)", "j k"});
    CHECK(r.code == 0);
    CHECK(r.out == "k k\n");
}

TEST_CASE("eq") {
    SUBCASE("equal words") {
        const Result r =
            run({"eq", "--group", "q8", "x i x^-1 j", "x x^-1 x i x^-1 j"});
        CHECK(r.code == 0);
        CHECK(r.out == "EQUAL\n");
    }
    SUBCASE("unequal words") {
        const Result r = run({"eq", "--group", "q8", "x i x^-1 j", "j x i x^-1"});
        CHECK(r.code == 1);
        CHECK(r.out == "NOT EQUAL\n");
    }
    SUBCASE("action method") {
        const Result r = run({"eq", "--group", "q8", "--method", "action", "x i x^-1 j",
                              "x x^-1 x i x^-1 j"});
        CHECK(r.code == 0);
        CHECK(r.out == "EQUAL\n");
        const Result s = run({"eq", "--group", "q8", "--method", "action", "x^2", "x^3"});
        CHECK(s.code == 1);
        CHECK(s.out == "NOT EQUAL\n");
    }
    SUBCASE("unknown label") {
        const Result r = run({"eq", "--group", "q8", "x i x^-1 j", "j x i x^-1 x [?]"});
        CHECK(r.code == 2);
        CHECK(r.err.find("unknown label '[?]'") != std::string::npos);
    }
    SUBCASE("malformed word reports the position") {
        const Result r = run({"eq", "--group", "q8", "x i x^-1 j", "j x i x^-1 x^"});
        CHECK(r.code == 2);
        CHECK(r.err.find("position 14") != std::string::npos);
    }
}

TEST_CASE("nf") {
    const Result r = run({"nf", "--group", "q8", "x i x^-1 j"});
    CHECK(r.code == 0);
    CHECK(r.out == "[0:j][1:-i]\n");
    const Result id = run({"nf", "--group", "q8", ""});
    CHECK(id.out == "1\n");
    const Result bad = run({"nf", "--group", "d8_16", "r s"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("class") != std::string::npos);
}

TEST_CASE("verify relations") {
    const Result r = run({"verify", "--group", "q8", "--n-max", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "192 checks, 192 pass\n");
}

TEST_CASE("verify csv lines") {
    const Result r = run({"verify", "--group", "z2", "--n-max", "1", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "CHECK rel n=1 g=e h=e PASS\n"
          "CHECK rel n=1 g=e h=t PASS\n"
          "CHECK rel n=1 g=t h=e PASS\n"
          "CHECK rel n=1 g=t h=t PASS\n");
}

TEST_CASE("verify failure exits 1 with witnesses") {
    const Result r = run({"verify", "--group", "d8_16", "--n-max", "2"});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL rel") != std::string::npos);
    CHECK(r.out.find(" fail\n") != std::string::npos);
}

TEST_CASE("verify wreath and depth sections") {
    const Result r = run({"verify", "--group", "q8", "--n-max", "2", "--wreath"});
    CHECK(r.code == 0);
    CHECK(r.out == "24 checks, 24 pass\n");
    const Result d = run({"verify", "--group", "q8", "--n-max", "2", "--depth"});
    CHECK(d.code == 0);
    CHECK(d.out == "24 checks, 24 pass\n");
    const Result single = run({"verify", "--group", "q8", "--n", "2", "--depth"});
    CHECK(single.code == 0);
    CHECK(single.out == "8 checks, 8 pass\n");
}

TEST_CASE("xval") {
    const Result r = run({"xval", "--group", "q8", "--count", "50", "--max-len", "12",
                          "--seed", "42"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "50/50 agreement\n"
          "roundtrip: 50/50\n");
}

TEST_CASE("identical invocations are byte-identical") {
    const std::vector<std::string> args{"xval", "--group", "d4", "--count", "25",
                                        "--max-len", "10", "--seed", "5"};
    const Result a = run(args);
    const Result b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"coeffs", "--n-max", "0"}).code == 2);
    CHECK(run({"verify", "--group", "q8", "--method", "bogus"}).code == 2);
    CHECK(run({"group", "--group", "q8", "--file", "x.grp"}).code == 2);
}
