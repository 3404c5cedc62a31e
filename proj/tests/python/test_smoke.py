"""Smoke tests for the compiled extension."""

import roughdist_core as rd


def test_case0_and_case1():
    assert rd.case0_k("110") == "10"
    assert rd.case0_k("7") is None
    assert rd.case1_k("64") == "8"
    assert rd.case1_k("65") is None


def test_powerset_models():
    models = rd.powerset_models("100")
    assert {m["n"] for m in models} >= {"4", "16", "64"}
    for m in models:
        assert int(m["k"]) ** 2 == int(m["n"]) == 2 ** m["x"]


def test_case2_scan():
    rep = rd.case2_admissible("100", "1")
    assert rep["candidates"] == "9"
    assert any(e["k"] == "10" and e["pi"] == "1" for e in rep["admissible"])
    assert rd.case2_count_values("1000000", "1/2") == "1413"
    assert rd.case2_count_values("1000000", "1/2", trimmed=True) == "999"


def test_counting():
    rep = rd.bounded_model_count("4", 2, "1", "3")
    assert rep["B"] == "10"
    assert rep["n_o"] == "3"
    assert rd.chain_distribution_count("2", "2") == "3"


def test_poset_ops():
    diamond = (
        "elements bot x y top\n"
        "order bot <= x\norder bot <= y\n"
        "order x <= top\norder y <= top\n"
    )
    w, antichain = rd.poset_width(diamond)
    assert w == 2
    assert list(antichain) == ["x", "y"]
    assert len(rd.poset_chain_cover(diamond)) == 2
    assert rd.hasse_index(diamond) == "1"
    cc = rd.chain_cover_model_count(diamond, "1")
    assert cc["B"] == rd.placement_oracle_count(diamond, 1)


def test_sdr():
    assert rd.find_sdr(3, [[0, 1], [1, 2], [0, 2]]) is not None
    assert rd.find_sdr(2, [[0], [0]]) is None


def test_space_classification():
    space = "universe 1 2 3\nblock 1 2\nblock 3\npawlak\n"
    rep = rd.classify_space(space)
    assert rep["axioms_ok"]
    assert (rep["n"], rep["k"], rep["rough"]) == (8, 4, 4)
    assert rep["wra"] and rep["ls"] and rep["fu"]
    idx = rd.iota_index(space)
    assert idx["value"] >= 0.0


def test_alpha_refine():
    target = 1 / 3

    def contains(lo, hi):
        def val(s):
            if "/" in s:
                p, q = s.split("/")
                return int(p) / int(q)
            return float(int(s))

        return val(lo) <= target <= val(hi)

    got = rd.alpha_refine(contains, grid_n=10, epsilon="1/1000000", max_rounds=7)
    assert got is not None
    p, q = (got.split("/") + ["1"])[:2]
    assert abs(int(p) / int(q) - target) <= 1e-6
