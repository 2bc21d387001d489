import json

try:
    import deltarig as dr
except ImportError:  # running against the bare extension in the build tree
    import _deltarig as dr

NP = json.dumps({"ground": ["1", "2", "3"],
                 "feasible": [[], ["1", "2"], ["1", "3"], ["2", "3"]]})
TORUS = json.dumps({
    "vertices": [[1, 3, 2, 4]],
    "edges": [{"darts": [1, 2], "sign": 1, "label": "e1"},
              {"darts": [3, 4], "sign": 1, "label": "e2"}],
})


def test_tutte_of_np():
    d = dr.DeltaMatroid.from_json(NP)
    assert str(d.tutte()) == "3*x*y + y^2 - 2*x - 2*y"
    assert d.beta() == -2
    assert d.is_connected()


def test_ribbon_graph_round_trip():
    g = dr.RibbonGraph.from_json(TORUS)
    assert g.orientable()
    assert g.metrics()["euler_genus"] == 2
    assert g.poly() == g.delta_matroid().tutte()
    again = dr.RibbonGraph.from_json(g.to_json())
    assert again.poly() == g.poly()


def test_factor_and_irreducibility():
    content, factors = dr.factor("x^2+2*x*y+y^2")
    assert content == 1
    assert len(factors) == 1
    poly, mult = factors[0]
    assert str(poly) == "x + y" and mult == 2
    assert dr.is_irreducible("x^2 + 2*x + 2*y + y^2")
    assert not dr.is_irreducible("x^2+2*x*y+y^2")


def test_profile_recovery():
    p = dr.profile("3*x*y + y^2 - 2*x - 2*y")
    assert p["elements"] == 3
    assert p["width"] == 2
    assert p["even"] and not p["matroid"]


def test_verify_small():
    report = dr.verify_theorem(max_n=2, sampled=False)
    assert report["failures"] == []
    assert report["instances"] > 0
