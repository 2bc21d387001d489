#include "deltarig/json_io.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace deltarig;

TEST_CASE("delta-matroid round trip") {
    const std::string text =
        R"({"ground": ["1", "2", "3"], "feasible": [[], ["1", "2"], ["1", "3"], ["2", "3"]]})";
    const DeltaMatroid d = dm_from_json(text);
    CHECK(d.size() == 3);
    CHECK(d.feasible().size() == 4);
    CHECK(dm_from_json(dm_to_json(d)) == d);
}

TEST_CASE("delta-matroid input errors") {
    CHECK_THROWS_WITH_AS(dm_from_json(R"({"ground": ["1"], "feasible": [[])"),
                         doctest::Contains("parse error"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(dm_from_json(R"({"feasible": [[]]})"), doctest::Contains("ground"),
                         std::invalid_argument);
    CHECK_THROWS_AS(dm_from_json(R"({"ground": ["1"], "feasible": [["2"]]})"),
                    std::invalid_argument);
    // families violating the exchange axiom are rejected on load
    CHECK_THROWS_WITH_AS(
        dm_from_json(
            R"({"ground": ["1", "2", "3", "4"], "feasible": [[], ["1", "2"], ["1", "2", "3", "4"]]})"),
        doctest::Contains("symmetric exchange"), std::invalid_argument);
}

TEST_CASE("ribbon graph round trip") {
    const std::string text =
        R"({"vertices": [[1, 3, 2, 4]], "edges": [{"darts": [1, 2], "sign": 1, "label": "e1"},
            {"darts": [3, 4], "sign": 1, "label": "e2"}]})";
    const RibbonGraph g = rg_from_json(text);
    CHECK(g.num_vertices() == 1);
    CHECK(g.num_edges() == 2);
    const RibbonGraph again = rg_from_json(rg_to_json(g));
    CHECK(again.rotations() == g.rotations());
    CHECK(again.delta_matroid() == g.delta_matroid());
}

TEST_CASE("ribbon graph input errors") {
    CHECK_THROWS_AS(rg_from_json("[1, 2, 3]"), std::invalid_argument);
    CHECK_THROWS_AS(rg_from_json(R"({"vertices": [[1]], "edges": []})"), std::invalid_argument);
    CHECK_THROWS_AS(
        rg_from_json(R"({"vertices": [[1, 2]], "edges": [{"darts": [1, 2], "sign": 3,
                        "label": "e"}]})"),
        std::invalid_argument);
}
