#include <doctest.h>

#include <sstream>

#include "qap/core.hpp"
#include "qap/io.hpp"
#include "test_util.hpp"

using namespace qap;
using testutil::fixture;
using testutil::from_ints;

TEST_CASE("qap objective: direct 2x2 expansion") {
    auto a = from_ints({{0, 1}, {1, 0}});
    auto b = from_ints({{0, 2}, {2, 0}});
    CHECK(qap_objective(a, b, Permutation::identity(2)) == 4);
}

TEST_CASE("qap objective: appendix pair at identity") {
    auto a = fixture("kalmanson_robinson");
    auto b = fixture("down_benevolent_toeplitz");
    // Frozen via the independent double-sum oracle.
    CHECK(qap_objective(a, b, Permutation::identity(10)) == 27556);
    CHECK(testutil::objective_oracle(a, b, Permutation::identity(10)) == 27556);
}

TEST_CASE("qap objective: zero annihilator") {
    testutil::TestRng rng(7);
    auto a = rng.matrix(6, -9, 9, false);
    ExactMatrix zero(6);
    CHECK(qap_objective(a, zero, rng.permutation(6)) == 0);
}

TEST_CASE("qap objective: dimension mismatch") {
    auto a = from_ints({{0, 1}, {1, 0}});
    auto b = from_ints({{0}});
    CHECK_THROWS_AS(qap_objective(a, b, Permutation::identity(2)), std::invalid_argument);
}

TEST_CASE("apply_permutation: identity fixes any matrix") {
    testutil::TestRng rng(11);
    auto a = rng.matrix(7, -5, 5, true);
    CHECK(apply_permutation(a, Permutation::identity(7)) == a);
}

TEST_CASE("permutation algebra") {
    Permutation p({2, 3, 1});
    CHECK(invert(p) == Permutation({3, 1, 2}));
    CHECK(compose(Permutation::identity(3), p) == p);
    CHECK(compose(p, invert(p)) == Permutation::identity(3));
    CHECK_THROWS_AS(Permutation({1, 1, 3}), std::invalid_argument);
}

TEST_CASE("apply_permutation composes contravariantly") {
    testutil::TestRng rng(23);
    for (int t = 0; t < 50; ++t) {
        int n = rng.uniform(2, 7);
        auto a = rng.matrix(n, -6, 6, false);
        auto p = rng.permutation(n);
        auto q = rng.permutation(n);
        CHECK(apply_permutation(apply_permutation(a, p), q) == apply_permutation(a, compose(p, q)));
    }
}

TEST_CASE("permuted-instance objective identity") {
    // Z(A^pi, B^psi, phi) = Z(A, B, pi o phi o psi^-1) under
    // compose(p,q)(i) = p(q(i)).
    testutil::TestRng rng(31);
    for (int t = 0; t < 1000; ++t) {
        int n = rng.uniform(2, 8);
        auto a = rng.matrix(n, -6, 9, false);
        auto b = rng.matrix(n, -6, 9, false);
        auto pi = rng.permutation(n);
        auto psi = rng.permutation(n);
        auto phi = rng.permutation(n);
        auto lhs = qap_objective(apply_permutation(a, pi), apply_permutation(b, psi), phi);
        auto rhs = qap_objective(a, b, compose(compose(pi, phi), invert(psi)));
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("transpose invariance for symmetric inputs") {
    testutil::TestRng rng(41);
    auto a = rng.matrix(6, -4, 8, true);
    auto b = rng.matrix(6, -4, 8, true);
    auto p = rng.permutation(6);
    CHECK(qap_objective(a, b, p) == qap_objective(a.transposed(), b.transposed(), p));
}

TEST_CASE("sign flip leaves the objective unchanged") {
    testutil::TestRng rng(43);
    auto a = rng.matrix(5, -7, 7, false);
    auto b = rng.matrix(5, -7, 7, false);
    auto p = rng.permutation(5);
    CHECK(qap_objective(a, b, p) == qap_objective(-a, -b, p));
}

TEST_CASE("matrix text format: parse and round trip") {
    const std::string text = "3\n0 1/2 -2\n1/2 0 7\n-2 7 0\n";
    std::istringstream in(text);
    auto m = read_matrix(in);
    CHECK(m.n() == 3);
    CHECK(m.at(1, 2) == Rat(1, 2));
    CHECK(m.at(1, 3) == -2);
    CHECK(write_matrix(m) == text);
}

TEST_CASE("matrix text format: comments and canonicalization") {
    std::istringstream in("# header\n2\n# rows follow\n2/4 -6/3\n0/5 +1\n");
    auto m = read_matrix(in);
    CHECK(m.at(1, 1) == Rat(1, 2));
    CHECK(m.at(1, 2) == -2);
    CHECK(m.at(2, 1) == 0);
    CHECK(write_matrix(m) == "2\n1/2 -2\n0 1\n");
}

TEST_CASE("matrix text format: error positions") {
    std::istringstream bad_token("2\n1 x\n3 4\n");
    CHECK_THROWS_AS(read_matrix(bad_token), ParseError);
    try {
        std::istringstream in("2\n1 x\n3 4\n");
        read_matrix(in);
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 3);
    }
    std::istringstream bad_den("2\n1 1/0\n3 4\n");
    CHECK_THROWS_AS(read_matrix(bad_den), ParseError);
    std::istringstream short_row("2\n1\n2 3\n");
    CHECK_THROWS_AS(read_matrix(short_row), ParseError);
    std::istringstream trailing("2\n1 2\n3 4\n5\n");
    CHECK_THROWS_AS(read_matrix(trailing), ParseError);
}

TEST_CASE("write/read round trip is byte identical on fixtures") {
    for (const char* name : {"robinson", "down_benevolent_toeplitz", "example_6x6"}) {
        auto m = fixture(name);
        std::istringstream in(write_matrix(m));
        CHECK(write_matrix(read_matrix(in)) == write_matrix(m));
    }
}

TEST_CASE("rational parsing corner cases") {
    CHECK(parse_rational("-4/6") == Rat(-2, 3));
    CHECK(to_string(parse_rational("10/5")) == "2");
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("render heatmap shape") {
    auto m = fixture("dw_toeplitz");
    auto art = render_heatmap(m);
    int lines = 0;
    for (char c : art)
        if (c == '\n') ++lines;
    CHECK(lines == 10);
    CHECK(art.find('@') != std::string::npos);  // max entries are darkest
    CHECK(art[0] == ' ');                       // zero diagonal is lightest
}
