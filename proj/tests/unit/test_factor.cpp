#include "deltarig/factor.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

using namespace deltarig;

namespace {

Int iabs(const Int& v) { return v < 0 ? Int(-v) : v; }

/// Independent factor oracle for small inputs: searches every candidate
/// divisor with bounded total degree and coefficient height, pruned by
/// divisibility of integer evaluations. Exponential; degree <= 4 only.
std::multiset<BiPoly> brute_force_factors(BiPoly p) {
    std::multiset<BiPoly> out;
    const Int c = p.content();
    if (c > 1) {
        BiPoly q;
        REQUIRE(p.divide_exact(BiPoly::constant(c), q));
        p = q;
    }
    Int height = 0;
    for (const auto& [exps, coef] : p.terms()) height = std::max(height, iabs(coef));

    // A minimal-degree non-unit divisor is irreducible, so searching degrees
    // in increasing order always peels off a true irreducible factor.
    for (bool split = true; split;) {
        split = false;
        const int d = p.total_degree();
        if (d <= 1) break;
        const Int p11 = p.eval(1, 1), p21 = p.eval(2, 1), p12 = p.eval(1, 2);
        for (int dcap = 1; dcap <= d / 2 && !split; ++dcap) {
            std::vector<std::pair<int, int>> slots;
            for (int i = 0; i <= dcap; ++i)
                for (int j = 0; i + j <= dcap; ++j) slots.push_back({i, j});
            const Int hb = height;  // coefficient bound for trial divisors
            std::vector<Int> coeffs(slots.size(), -hb);
            auto bump = [&]() {
                for (std::size_t k = 0; k < coeffs.size(); ++k) {
                    if (coeffs[k] < hb) {
                        ++coeffs[k];
                        return true;
                    }
                    coeffs[k] = -hb;
                }
                return false;
            };
            do {
                BiPoly g;
                for (std::size_t k = 0; k < slots.size(); ++k)
                    if (coeffs[k] != 0) g.add_term(slots[k].first, slots[k].second, coeffs[k]);
                if (g.total_degree() != dcap) continue;
                if (g.content() != 1) continue;
                const Int g11 = g.eval(1, 1), g21 = g.eval(2, 1), g12 = g.eval(1, 2);
                if (g11 != 0 && p11 % g11 != 0) continue;
                if (g21 != 0 && p21 % g21 != 0) continue;
                if (g12 != 0 && p12 % g12 != 0) continue;
                BiPoly q;
                if (!p.divide_exact(g, q)) continue;
                const bool neg = g.leading_coeff() < 0;
                out.insert(neg ? -g : g);
                p = neg ? -q : q;
                split = true;
                break;
            } while (bump());
        }
    }
    if (p.total_degree() >= 1) out.insert(p);
    return out;
}

std::multiset<BiPoly> flatten(const Factorization& f) {
    std::multiset<BiPoly> out;
    for (const auto& [poly, mult] : f.factors)
        for (int i = 0; i < mult; ++i) out.insert(poly);
    return out;
}

}  // namespace

TEST_CASE("univariate helpers") {
    const UniPoly a{Int(-1), Int(0), Int(1)};  // x^2 - 1
    const UniPoly b{Int(1), Int(1)};           // x + 1
    CHECK(uni_degree(a) == 2);
    UniPoly q;
    REQUIRE(uni_divide_exact(a, b, q));
    CHECK(q == UniPoly{Int(-1), Int(1)});
    CHECK(uni_mul(q, b) == a);
    CHECK(uni_content(UniPoly{Int(6), Int(-4)}) == 2);
    CHECK(uni_primitive_gcd(a, b) == b);
    CHECK(uni_derivative(a) == UniPoly{Int(0), Int(2)});
}

TEST_CASE("univariate factorization of knowns") {
    // (x-1)(x+1)(x^2+1)
    const UniPoly p{Int(-1), Int(0), Int(0), Int(0), Int(1)};
    const auto f = factor_univariate(p);
    CHECK(f.content == 1);
    REQUIRE(f.factors.size() == 3);
    UniPoly prod{Int(1)};
    for (const auto& [fac, mult] : f.factors) {
        CHECK(mult == 1);
        prod = uni_mul(prod, fac);
    }
    CHECK(prod == p);
}

TEST_CASE("univariate multiplicities and content") {
    // 12 (x+2)^2 (x^2+x+1)
    UniPoly p{Int(1), Int(2)};
    p = uni_mul(p, UniPoly{Int(2), Int(4)});
    p = uni_mul(p, UniPoly{Int(6), Int(6), Int(6)});
    const auto f = factor_univariate(p);
    CHECK(f.content == 12);
    std::map<int, int> degrees;
    for (const auto& [fac, mult] : f.factors) degrees[uni_degree(fac)] += mult;
    CHECK(degrees == std::map<int, int>{{1, 2}, {2, 1}});
}

TEST_CASE("univariate round trips on random products") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> coef(-6, 6), deg(1, 3), parts(2, 3);
    for (int trial = 0; trial < 100; ++trial) {
        UniPoly p{Int(1)};
        const int k = parts(rng);
        for (int i = 0; i < k; ++i) {
            UniPoly f(deg(rng) + 1);
            for (auto& c : f) c = coef(rng);
            if (f.back() == 0) f.back() = 1;
            p = uni_mul(p, f);
        }
        const auto fac = factor_univariate(p);
        UniPoly prod{fac.content};
        for (const auto& [q, mult] : fac.factors)
            for (int i = 0; i < mult; ++i) prod = uni_mul(prod, q);
        CHECK(prod == p);
        for (const auto& [q, mult] : fac.factors) CHECK(q.back() > 0);
    }
}

TEST_CASE("bivariate factorization of knowns") {
    SUBCASE("perfect square") {
        const auto f = factor_bivariate(BiPoly::parse("x^2+2*x*y+y^2"));
        CHECK(f.content == 1);
        REQUIRE(f.factors.size() == 1);
        CHECK(f.factors[0].first == BiPoly::parse("x + y"));
        CHECK(f.factors[0].second == 2);
    }
    SUBCASE("product of two Tutte polynomials") {
        const BiPoly p = BiPoly::parse("x + y") * BiPoly::parse("2*x*y - x - y");
        const auto f = factor_bivariate(p);
        CHECK(f.content == 1);
        REQUIRE(f.factors.size() == 2);
        const auto fs = flatten(f);
        CHECK(fs.count(BiPoly::parse("x + y")) == 1);
        CHECK(fs.count(BiPoly::parse("2*x*y - x - y")) == 1);
    }
    SUBCASE("content and monomial factors") {
        const auto f = factor_bivariate(BiPoly::parse("-6*x^2*y + 6*x*y^2"));
        CHECK(f.content == -6);
        CHECK(f.expand() == BiPoly::parse("-6*x^2*y + 6*x*y^2"));
    }
    SUBCASE("univariate inputs pass through") {
        const auto f = factor_bivariate(BiPoly::parse("y^2 - 1"));
        CHECK(flatten(f) == std::multiset<BiPoly>{BiPoly::parse("y - 1"), BiPoly::parse("y + 1")});
    }
}

TEST_CASE("irreducibility calls") {
    CHECK(is_irreducible(BiPoly::parse("x + y")));
    CHECK(is_irreducible(BiPoly::parse("x^2 + 2*x + 2*y + y^2")));
    CHECK(is_irreducible(BiPoly::parse("2*x*y - x - y")));
    CHECK(is_irreducible(BiPoly::parse("y^2 + 3*x*y - 2*x - 2*y")));
    CHECK_FALSE(is_irreducible(BiPoly::parse("x^2 - y^2")));
    CHECK_FALSE(is_irreducible(BiPoly::parse("2*x + 2*y")));
    CHECK_FALSE(is_irreducible(BiPoly::parse("x*y")));
    CHECK_THROWS_AS(is_irreducible(BiPoly::constant(3)), std::invalid_argument);
    CHECK_THROWS_AS(factor_bivariate(BiPoly::zero()), std::invalid_argument);
}

TEST_CASE("bivariate factorization agrees with the brute-force oracle") {
    const char* inputs[] = {
        "x^2+2*x*y+y^2",  "x^2 - y^2",       "x*y + x + y + 1", "x^2 + y + 1",
        "2*x*y - x - y",  "x^3 - y^3",       "x^2*y^2 - 1",     "x^2 + 2*x + 2*y + y^2",
        "4*x^2 - 4*y^2",  "x^2*y + x*y^2",
    };
    for (const char* text : inputs) {
        CAPTURE(text);
        const BiPoly p = BiPoly::parse(text);
        CHECK(flatten(factor_bivariate(p)) == brute_force_factors(p));
    }
}

TEST_CASE("bivariate round trips on seeded random products") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> coef(-4, 4), parts(2, 3);
    auto random_irreducible = [&]() {
        for (;;) {
            BiPoly f;
            std::uniform_int_distribution<int> exp(0, 2);
            for (int t = 0; t < 4; ++t) f.add_term(exp(rng), exp(rng), coef(rng));
            if (f.total_degree() < 1) continue;
            BiPoly q;
            if (f.content() != 1) continue;
            try {
                if (is_irreducible(f)) return f.leading_coeff() > 0 ? f : -f;
            } catch (const std::invalid_argument&) {
            }
        }
    };
    for (int trial = 0; trial < 200; ++trial) {
        std::multiset<BiPoly> expected;
        BiPoly p = BiPoly::constant(1);
        const int k = parts(rng);
        for (int i = 0; i < k; ++i) {
            const BiPoly f = random_irreducible();
            expected.insert(f);
            p = p * f;
        }
        CAPTURE(p.to_string());
        const auto got = factor_bivariate(p);
        CHECK(flatten(got) == expected);
        CHECK(got.expand() == p);
    }
}
