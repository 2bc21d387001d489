#include "deltarig/bipoly.hpp"

#include <doctest.h>

#include <random>

using namespace deltarig;

TEST_CASE("arithmetic basics") {
    const BiPoly x = BiPoly::var_x();
    const BiPoly y = BiPoly::var_y();
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x + y).pow(2) == x * x + BiPoly::constant(2) * x * y + y * y);
    CHECK(BiPoly::zero().to_string() == "0");
    CHECK((x - x) == BiPoly::zero());
}

TEST_CASE("degrees and coefficients") {
    const BiPoly p = BiPoly::parse("3*x^2*y - x + 7");
    CHECK(p.deg_x() == 2);
    CHECK(p.deg_y() == 1);
    CHECK(p.total_degree() == 3);
    CHECK(p.coeff(2, 1) == 3);
    CHECK(p.coeff(1, 0) == -1);
    CHECK(p.coeff(0, 0) == 7);
    CHECK(p.coeff(5, 5) == 0);
    CHECK(p.content() == 1);
    CHECK(BiPoly::parse("6*x + 4*y").content() == 2);
}

TEST_CASE("evaluation") {
    const BiPoly p = BiPoly::parse("x^2 + 2*x*y + y^2");
    CHECK(p.eval(1, 2) == 9);
    CHECK(p.eval(-3, 3) == 0);
    CHECK(BiPoly::parse("3*x*y + y^2 - 2*x - 2*y").eval(1, 1) == 0);
}

TEST_CASE("printing follows graded lex order") {
    CHECK(BiPoly::parse("-2*y + y^2 - 2*x + 3*y*x").to_string() ==
          "3*x*y + y^2 - 2*x - 2*y");
    CHECK(BiPoly::parse("1 + x").to_string() == "x + 1");
    CHECK(BiPoly::parse("x - 1").to_string() == "x - 1");
    CHECK(BiPoly::constant(-5).to_string() == "-5");
}

TEST_CASE("parse accepts the printed grammar in any order") {
    const char* cases[] = {"x + y", "2*x*y - x - y", "x^2 + 2*x + 2*y + y^2",
                           "-x^3*y^2 + 4", "0"};
    for (const char* c : cases) {
        const BiPoly p = BiPoly::parse(c);
        CHECK(BiPoly::parse(p.to_string()) == p);
    }
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_WITH_AS(BiPoly::parse("x + + y"), doctest::Contains("position"),
                         std::invalid_argument);
    CHECK_THROWS_AS(BiPoly::parse("x^"), std::invalid_argument);
    CHECK_THROWS_AS(BiPoly::parse("z + 1"), std::invalid_argument);
    CHECK_THROWS_AS(BiPoly::parse(""), std::invalid_argument);
}

TEST_CASE("round trip on random polynomials") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> exp(0, 4), coef(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        BiPoly p;
        for (int t = 0; t < 6; ++t) p.add_term(exp(rng), exp(rng), coef(rng));
        CHECK(BiPoly::parse(p.to_string()) == p);
    }
}

TEST_CASE("exact division") {
    const BiPoly a = BiPoly::parse("x^2 - y^2");
    const BiPoly b = BiPoly::parse("x + y");
    BiPoly q;
    REQUIRE(a.divide_exact(b, q));
    CHECK(q == BiPoly::parse("x - y"));
    CHECK_FALSE(BiPoly::parse("x^2 + y^2").divide_exact(b, q));
    CHECK_FALSE(BiPoly::parse("2*x + 2*y + 1").divide_exact(BiPoly::constant(2), q));
}

TEST_CASE("division round trip on random products") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> exp(0, 3), coef(-5, 5);
    auto random_poly = [&] {
        BiPoly p;
        while (p == BiPoly::zero())
            for (int t = 0; t < 4; ++t) p.add_term(exp(rng), exp(rng), coef(rng));
        return p;
    };
    for (int trial = 0; trial < 100; ++trial) {
        const BiPoly a = random_poly(), b = random_poly();
        BiPoly q;
        REQUIRE((a * b).divide_exact(b, q));
        CHECK(q == a);
    }
}

TEST_CASE("laurent substitution of a known Tutte polynomial") {
    // T for feasible family {emptyset, {1,2}}: sigma2 = 2, width 2.
    const BiPoly t = BiPoly::parse("2*x*y - x - y");
    const LaurentPoly s = specialize_uv(t, 2, 2);
    // sum over subsets: u^(2(|E|-rho(A))) v^(2|A|) with rho(A) = |E| - min |A xor F|
    LaurentPoly expected;
    expected.add_term(0, 0, 1);   // A = {}: feasible, rho = 2
    expected.add_term(2, 2, 1);   // A = {1}: distance 1, rho = 1
    expected.add_term(2, 2, 1);   // A = {2}: distance 1, rho = 1
    expected.add_term(0, 4, 1);   // A = {1,2}: feasible, rho = 2
    LaurentPoly merged;
    merged.add_term(0, 0, 1);
    merged.add_term(2, 2, 2);
    merged.add_term(0, 4, 1);
    CHECK(s == merged);
    CHECK(expected == merged);
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(40, 20) == Int("137846528820"));
}
