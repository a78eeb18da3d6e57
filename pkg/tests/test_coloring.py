import pytest
from hypothesis import given, settings, strategies as st

from coronalab import InapplicableError, MalformedWitnessError, SizeLimitError, corona, power
from coronalab.coloring import (
    ColorAssignment,
    appendix_ball_bound,
    appendix_edge_ball_bound,
    chromatic_number,
    construct_corona_coloring,
    corona_chromatic_formula,
    corona_dist_bounds,
    delta_ij,
    distance_k_chromatic,
    girth_chromatic_lower_bound,
    validate_coloring,
)
from coronalab.graph import ball

import oracles
from conftest import fam
from test_graph import graphs


def chi(g, k=1):
    return distance_k_chromatic(g, k).value


class TestChromatic:
    @pytest.mark.parametrize("token,value", [("P4", 2), ("K5", 5), ("C5", 3), ("N3", 1), ("K1", 1)])
    def test_small(self, token, value):
        res = chromatic_number(fam(token))
        assert res.value == value
        assert validate_coloring(fam(token), 1, res.witness)

    def test_corona_p3_k2(self):
        g, _ = corona(fam("P3"), fam("K2"))
        assert chromatic_number(g).value == 3

    def test_empty_graph(self):
        from coronalab import build_graph

        assert chromatic_number(build_graph(0, [])).value == 0

    def test_cap_names_limit(self):
        with pytest.raises(SizeLimitError, match="cap of 5"):
            chromatic_number(fam("C8"), cap=5)

    def test_deterministic(self):
        g, _ = corona(fam("C5"), fam("P3"))
        assert chromatic_number(g).witness == chromatic_number(g).witness


class TestDistanceK:
    def test_p4_k3_is_n(self):
        assert chi(fam("P4"), 3) == 4

    def test_c6_k2(self):
        assert chi(fam("C6"), 2) == 3

    @given(graphs(8), st.integers(1, 4))
    @settings(max_examples=40, deadline=None)
    def test_equals_chromatic_of_power(self, g, k):
        res = distance_k_chromatic(g, k)
        assert res.value == chromatic_number(power(g, k)).value
        assert validate_coloring(g, k, res.witness)

    @given(graphs(7))
    @settings(max_examples=40, deadline=None)
    def test_k1_is_chi_and_monotone_in_k(self, g):
        values = [chi(g, k) for k in range(1, 5)]
        assert values[0] == chromatic_number(g).value
        assert values == sorted(values)
        assert values[-1] <= g.n


class TestValidate:
    def test_examples(self):
        c6 = fam("C6")
        assert validate_coloring(c6, 2, ColorAssignment((0, 1, 2, 0, 1, 2), 3))
        assert not validate_coloring(c6, 2, ColorAssignment((0, 1, 0, 1, 0, 1), 2))
        assert validate_coloring(c6, 5, ColorAssignment(tuple(range(6)), 6))

    def test_missing_vertex(self):
        with pytest.raises(MalformedWitnessError):
            validate_coloring(fam("C6"), 1, ColorAssignment((0, 1, 0), 2))


class TestConstruction:
    def test_p3_k2_three_colors(self):
        a = construct_corona_coloring(fam("P3"), fam("K2"), 1)
        assert a.palette_size == 3

    def test_p4_k1_k2(self):
        a = construct_corona_coloring(fam("P4"), fam("K1"), 2)
        assert a.palette_size <= chi(fam("P4"), 2) + 1
        g, _ = corona(fam("P4"), fam("K1"))
        assert validate_coloring(g, 2, a) and chi(g, 2) == 4

    def test_k3_k2_k3(self):
        a = construct_corona_coloring(fam("K3"), fam("K2"), 3)
        g, _ = corona(fam("K3"), fam("K2"))
        assert a.palette_size <= 9 and chi(g, 3) == 9

    @pytest.mark.parametrize("g", ["P2", "P5", "C5", "K1,3", "K2,3", "T6"])
    @pytest.mark.parametrize("h", ["K1", "K3", "P3", "N2"])
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_always_valid(self, g, h, k):
        cg, _ = corona(fam(g), fam(h))
        a = construct_corona_coloring(fam(g), fam(h), k)
        assert validate_coloring(cg, k, a)
        assert a.palette_size >= chi(cg, k)


class TestFormulas:
    def test_examples(self):
        assert corona_chromatic_formula("chi2-path", n1=4, n2=1) == 4
        assert corona_chromatic_formula("chi3-tree", n2=1, tree=fam("K1,3")) == 6
        assert corona_chromatic_formula("chik-path", n1=4, k=4, n2=1) == 7

    @pytest.mark.parametrize(
        "case,kw",
        [
            ("chi2-path", {"n1": 2, "n2": 1}),
            ("chi2-cycle3t", {"n1": 4, "n2": 1}),
            ("chi3-tree", {"n2": 1, "tree": fam("C4")}),
            ("chik-path", {"n1": 3, "k": 4, "n2": 1}),
            ("nonsense", {"n2": 1}),
        ],
    )
    def test_hypothesis_violations(self, case, kw):
        with pytest.raises(InapplicableError):
            corona_chromatic_formula(case, **kw)

    def test_delta_ij(self):
        assert delta_ij(fam("K1,3")) == 4
        assert delta_ij(fam("P4")) == 4
        assert delta_ij(fam("K2")) == 2
        with pytest.raises(InapplicableError):
            delta_ij(fam("N3"))


class TestBounds:
    def test_c4_k2_k3(self):
        b = corona_dist_bounds(fam("C4"), fam("K2"), 3)
        cg, _ = corona(fam("C4"), fam("K2"))
        assert b.lower == 8 and chi(cg, 3) == 8

    def test_c4_n2_k2(self):
        b = corona_dist_bounds(fam("C4"), fam("N2"), 2)
        cg, _ = corona(fam("C4"), fam("N2"))
        assert (b.lower, b.upper, chi(cg, 2)) == (5, 6, 5)

    def test_k33_k1_strict(self):
        b = corona_dist_bounds(fam("K3,3"), fam("K1"), 2)
        cg, _ = corona(fam("K3,3"), fam("K1"))
        assert b.lower < chi(cg, 2) == 6 < b.upper

    def test_triangle_lower_inapplicable(self):
        b = corona_dist_bounds(fam("K3"), fam("K1"), 3)
        assert b.lower is None and "triangle" in b.reasons["lower"]


class TestBallBounds:
    def test_ball_bound_examples(self):
        assert appendix_ball_bound(2, 2, 2) == 5 == len(ball(fam("C7"), 0, 2))
        assert appendix_ball_bound(4, 3, 1) == 5
        assert appendix_ball_bound(3, 3, 2) == 10

    def test_edge_ball_bound_examples(self):
        c8 = fam("C8")
        assert appendix_edge_ball_bound(2, 3) == 8 == len(ball(c8, 0, 3) | ball(c8, 1, 3))
        assert appendix_edge_ball_bound(3, 1) == 6
        c6 = fam("C6")
        assert appendix_edge_ball_bound(2, 2) == 6 == len(ball(c6, 0, 2) | ball(c6, 1, 2))

    def test_girth_bound_examples(self):
        assert girth_chromatic_lower_bound(fam("C6"), 2) == 3 == chi(fam("C6"), 2)
        assert girth_chromatic_lower_bound(fam("C8"), 3) == 4 == chi(fam("C8"), 3)
        assert girth_chromatic_lower_bound(fam("K4"), 3) is None

    @given(graphs(8), st.sampled_from([2, 3]))
    @settings(max_examples=60, deadline=None)
    def test_girth_bound_is_a_lower_bound(self, g, k):
        lb = girth_chromatic_lower_bound(g, k)
        if lb is not None:
            assert lb <= chi(g, k)


@pytest.mark.parametrize("token", ["P5", "C5", "C6", "K2,3", "T6"])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_matches_partition_oracle(token, k):
    g = fam(token)
    value = chi(g, k)
    assert value == oracles.chromatic(g.n, g.edges(), k)
    assert oracles.colorable(g.n, g.edges(), value, k)
    assert value == 1 or not oracles.colorable(g.n, g.edges(), value - 1, k)
