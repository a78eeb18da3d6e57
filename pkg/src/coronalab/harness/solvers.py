"""Memoized exact solvers shared by the checks of one suite run."""

from ..coloring import chromatic_number, distance_k_chromatic
from ..config import DEFAULT_CAPS
from ..domination import (
    connected_domination_number,
    distance_k_domination_number,
    domatic_number,
    domination_number,
    idomatic_number,
    independence_number,
    independent_domination_number,
    k_domination_number,
    ld_case_classify,
    location_numbers,
    roman_domination,
)
from ..graph import corona


class Solvers:
    """Exact parameter values keyed by graph, computed at most once per run."""

    def __init__(self, caps=DEFAULT_CAPS):
        self.caps = caps
        self._memo = {}

    def _get(self, key, compute):
        if key not in self._memo:
            self._memo[key] = compute()
        return self._memo[key]

    def corona(self, g, h):
        return self._get(("corona", g, h), lambda: corona(g, h))

    def chi(self, g, k=1):
        def run():
            if k == 1:
                return chromatic_number(g, cap=self.caps.coloring).value
            return distance_k_chromatic(g, k, cap=self.caps.coloring).value

        return self._get(("chi", g, k), run)

    def gamma(self, g):
        return self._get(("gamma", g), lambda: domination_number(g, self.caps.subset))

    def gamma_c(self, g):
        return self._get(("gamma_c", g), lambda: connected_domination_number(g, self.caps.subset))

    def beta0(self, g):
        return self._get(("beta0", g), lambda: independence_number(g, self.caps.subset))

    def indep_dom(self, g):
        return self._get(("i", g), lambda: independent_domination_number(g, self.caps.subset))

    def gamma_k(self, g, k):
        return self._get(("gamma_k", g, k), lambda: k_domination_number(g, k, self.caps.subset))

    def gamma_dist(self, g, k):
        return self._get(
            ("gamma_dist", g, k), lambda: distance_k_domination_number(g, k, self.caps.subset)
        )

    def roman(self, g):
        return self._get(
            ("roman", g), lambda: roman_domination(g, self.caps.subset, with_b2max=False)[0]
        )

    def roman_b2max(self, g):
        return self._get(
            ("b2max", g),
            lambda: roman_domination(g, self.caps.subset, self.caps.roman_enum)[1],
        )

    def location(self, g):
        return self._get(("location", g), lambda: location_numbers(g, self.caps.subset))

    def ld_case(self, h):
        return self._get(("ld_case", h), lambda: ld_case_classify(h, self.caps.subset))

    def domatic(self, g):
        return self._get(("domatic", g), lambda: domatic_number(g, self.caps.partition))

    def idomatic(self, g):
        return self._get(("idomatic", g), lambda: idomatic_number(g, self.caps.partition))
