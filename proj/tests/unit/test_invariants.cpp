#include "deltarig/invariants.hpp"

#include <doctest.h>

#include "deltarig/verify.hpp"

using namespace deltarig;

namespace {

DeltaMatroid torus_pair() {
    return DeltaMatroid::validate({"1", "2"}, {0b00, 0b11});
}

DeltaMatroid u12() { return DeltaMatroid::validate({"1", "2"}, {0b01, 0b10}); }

}  // namespace

TEST_CASE("subset sum on the knowns") {
    CHECK(tutte_subset_sum(DeltaMatroid::validate({}, {0})) == BiPoly::constant(1));
    CHECK(tutte_subset_sum(u12()) == BiPoly::parse("x + y"));
    CHECK(tutte_subset_sum(torus_pair()) == BiPoly::parse("2*x*y - x - y"));
    CHECK(tutte_subset_sum(make_np()) == BiPoly::parse("3*x*y + y^2 - 2*x - 2*y"));
    CHECK(tutte_subset_sum(make_uniform(2, 4)) == BiPoly::parse("x^2 + y^2 + 2*x + 2*y"));
}

TEST_CASE("subset sum assembled from shifted terms") {
    // T(NP) = (x-1) + 3(x-1)(y-1) + 3(y-1) + (y-1)^2, gathered on the shifted basis
    ShiftedHalfPoly s;
    s.add_term(2, 0, 1);
    s.add_term(2, 2, 3);
    s.add_term(0, 2, 3);
    s.add_term(0, 4, 1);
    CHECK(s.integral());
    CHECK(s.expand() == tutte_subset_sum(make_np()));
    CHECK(tutte_subset_sum_general(make_np()).terms() == s.terms());
}

TEST_CASE("non-even input stays on the half lattice") {
    const DeltaMatroid half = DeltaMatroid::validate({"e"}, {0b0, 0b1});
    const ShiftedHalfPoly s = tutte_subset_sum_general(half);
    CHECK_FALSE(s.integral());
    CHECK_THROWS_AS(s.expand(), std::invalid_argument);
    CHECK_THROWS_AS(tutte_subset_sum(half), std::invalid_argument);
    CHECK_THROWS_AS(tutte_delcon(half), std::invalid_argument);
}

TEST_CASE("deletion-contraction matches subset sum") {
    CHECK(tutte_delcon(make_np()) == tutte_subset_sum(make_np()));
    CHECK(tutte_delcon(torus_pair()) == BiPoly::parse("2*x*y - x - y"));
    CHECK(tutte_delcon(DeltaMatroid::validate({"e"}, {0b1})) == BiPoly::var_x());
    CHECK(tutte_delcon(DeltaMatroid::validate({"e"}, {0b0})) == BiPoly::var_y());
    // recursion trace at element 1 of NP: T = T(D\1) + (y-1) T(D/1)
    const DeltaMatroid np = make_np();
    const BiPoly expected = tutte_subset_sum(np.delete_element(0)) +
                            (BiPoly::var_y() - BiPoly::constant(1)) *
                                tutte_subset_sum(np.contract_element(0));
    CHECK(expected == tutte_subset_sum(np));
}

TEST_CASE("delcon agreement across the small corpus") {
    TutteEngine engine;
    for (int n = 1; n <= 3; ++n)
        for (const DeltaMatroid& d : enumerate_even_delta_matroids(n))
            CHECK(engine.tutte(d) == tutte_subset_sum(d));
    CHECK(engine.cache_size() > 0);
}

TEST_CASE("ribbon polynomial equals the delta-matroid polynomial") {
    const RibbonGraph cyc = plane_two_cycle();
    CHECK(ribbon_polynomial(cyc) == BiPoly::parse("x + y"));
    const RibbonGraph torus =
        RibbonGraph::validate({{1, 3, 2, 4}}, {{1, 2, 1, "e1"}, {3, 4, 1, "e2"}});
    CHECK(ribbon_polynomial(torus) == BiPoly::parse("2*x*y - x - y"));
    CHECK(ribbon_polynomial(RibbonGraph::validate({{}}, {})) == BiPoly::constant(1));
    CHECK(ribbon_polynomial(torus) == tutte_subset_sum(torus.delta_matroid()));
}

TEST_CASE("Bollobas-Riordan polynomial") {
    TriPoly expected;  // 1 + 3y + 3y^2 z^2 + y^3 z^2
    expected.add_term(0, 0, 0, 1);
    expected.add_term(0, 1, 0, 3);
    expected.add_term(0, 2, 2, 3);
    expected.add_term(0, 3, 2, 1);
    CHECK(br_polynomial(make_np()) == expected);

    TriPoly u;  // x + 1 + y
    u.add_term(1, 0, 0, 1);
    u.add_term(0, 0, 0, 1);
    u.add_term(0, 1, 0, 1);
    CHECK(br_polynomial(u12()) == u);

    TriPoly one;
    one.add_term(0, 0, 0, 1);
    CHECK(br_polynomial(DeltaMatroid::validate({}, {0})) == one);
}

TEST_CASE("BR and Tutte agree after clearing denominators") {
    CHECK(check_br_relation(make_np()));
    CHECK(check_br_relation(torus_pair()));
    CHECK(check_br_relation(DeltaMatroid::validate({}, {0})));
    CHECK(check_br_relation(make_uniform(2, 4)));
}

TEST_CASE("beta invariant") {
    CHECK(beta(u12()) == 1);
    CHECK(beta(make_np()) == -2);
    CHECK(beta(make_uniform(2, 4)) == 2);
    CHECK(beta(torus_pair()) == -1);
    auto abs_beta = [](const DeltaMatroid& d) {
        const Int b = beta(d);
        return b < 0 ? Int(-b) : b;
    };
    CHECK(abs_beta(make_mk4()) >= 2);
    for (Mask tw = 0; tw <= make_np().full_mask(); ++tw)
        CHECK(abs_beta(make_np().twist(tw)) == 2);
}

TEST_CASE("Brylawski relations") {
    const auto lines = check_brylawski(make_np());
    REQUIRE(lines.size() == 4);  // k = 0..3
    for (const auto& l : lines) CHECK(l.pass);
    CHECK(lines[0].expected == 0);   // k=0: constant term
    CHECK(lines[1].lhs == 0);        // k=1: b00 - b01 + b10 = 2 - 2
    CHECK(lines[3].expected == 1);   // k=n: (-1)^(3-1)
    for (const auto& l : check_brylawski(make_uniform(2, 4))) CHECK(l.pass);
}

TEST_CASE("top coefficient law") {
    CHECK(check_top_coefficients(make_np()));
    CHECK(check_top_coefficients(u12()));
    CHECK(check_top_coefficients(DeltaMatroid::validate({}, {0})));
    CHECK(check_top_coefficients(make_uniform(2, 4)));
}

TEST_CASE("profile recovery") {
    const TutteProfile u = profile_from_polynomial(BiPoly::parse("x + y"));
    CHECK(u.n_elements == 2);
    CHECK(u.sigma2 == 2);
    CHECK(u.width == 0);
    CHECK(u.is_matroid);
    CHECK(u.feasible_size_counts == std::map<int, Int>{{1, 2}});

    const TutteProfile np = profile_from_polynomial(tutte_subset_sum(make_np()));
    CHECK(np.n_elements == 3);
    CHECK(np.sigma2 == 2);
    CHECK(np.width == 2);
    CHECK(np.is_even);
    CHECK_FALSE(np.is_matroid);
    CHECK(np.feasible_size_counts == std::map<int, Int>{{0, 1}, {2, 3}});

    const TutteProfile empty = profile_from_polynomial(BiPoly::constant(1));
    CHECK(empty.n_elements == 0);

    CHECK_THROWS_WITH_AS(profile_from_polynomial(BiPoly::parse("x*y + 5")),
                         doctest::Contains("not a delta-matroid"), std::invalid_argument);
}

TEST_CASE("series-parallel test") {
    CHECK(is_series_parallel(u12()));
    CHECK(is_series_parallel(torus_pair()));  // beta = -1 = (-1)^(2/2)
    CHECK_FALSE(is_series_parallel(make_np()));
    CHECK_FALSE(is_series_parallel(make_uniform(2, 4)));
    CHECK_THROWS_AS(is_series_parallel(DeltaMatroid::validate({"e"}, {0b1})),
                    std::invalid_argument);
    CHECK_THROWS_AS(is_series_parallel(DeltaMatroid::validate({"1", "2"}, {0b00, 0b01})),
                    std::invalid_argument);
}

TEST_CASE("spanning identity on the knowns") {
    // coloop: T = x, sigma2 = 2, w = 0 -> u + v
    LaurentPoly coloop;
    coloop.add_term(2, 0, 1);
    coloop.add_term(0, 2, 1);
    CHECK(specialize_uv(BiPoly::var_x(), 2, 0) == coloop);

    // 2-cycle: T = x+y -> u + 2v + u v^2
    LaurentPoly cyc;
    cyc.add_term(2, 0, 1);
    cyc.add_term(0, 2, 2);
    cyc.add_term(2, 4, 1);
    CHECK(specialize_uv(BiPoly::parse("x + y"), 2, 0) == cyc);
}
