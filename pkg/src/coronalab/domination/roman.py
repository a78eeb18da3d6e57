"""Exact Roman domination number and the largest b2 over optimal functions.

A minimum-weight Roman function is determined by its set S of 2-vertices:
every vertex outside N[S] must carry 1, everything else in N[S] \\ S
carries 0. The search therefore branches on S. For the lowest-numbered
vertex u that is not yet covered, either some w in N[u] is a 2-vertex
(earlier choices are excluded from later siblings), or u carries 1 and
then no vertex of N[u] may become a 2-vertex in that subtree. The bound
prices each uncovered vertex x at min(1, 2 / |N[w] & uncovered|) over
the vertices w still allowed to cover it, a feasible dual of the
covering relaxation.
"""

import math

from ..config import DEFAULT_CAPS, check_cap
from ..errors import ConstructionError
from ..graph import bits_to_tuple, iter_bits
from . import predicates
from .results import DominationResult, RomanAssignment
from .search import SearchStats


def _roman_search(g, stats, target=None):
    """Optimal weight and 2-sets; with ``target`` given, every 2-set of that weight."""
    n = g.n
    closed = [g.closed(v) for v in range(n)]
    full = (1 << n) - 1
    best = [n + 1 if target is None else target]
    hits = []

    def price(uncov, forbidden):
        total = 0.0
        for x in iter_bits(uncov):
            p = 1.0
            for w in iter_bits(closed[x] & ~forbidden):
                p = min(p, 2.0 / (closed[w] & uncov).bit_count())
            total += p
        return math.ceil(total - 1e-9)

    def dfs(twos, covered, forbidden, cost):
        stats.nodes += 1
        uncov = full & ~covered
        if not uncov:
            if target is None:
                if cost < best[0]:
                    best[0] = cost
                    hits[:] = [twos]
            elif cost == target:
                hits.append(twos)
            return
        bound = cost + price(uncov, forbidden)
        if bound > best[0] or (target is None and bound == best[0]):
            return
        u = (uncov & -uncov).bit_length() - 1
        options = sorted(
            iter_bits(closed[u] & ~forbidden), key=lambda w: (-(closed[w] & uncov).bit_count(), w)
        )
        excluded = 0
        for w in options:
            dfs(twos | (1 << w), covered | closed[w], forbidden | excluded, cost + 2)
            excluded |= 1 << w
        dfs(twos, covered | (1 << u), forbidden | closed[u], cost + 1)

    dfs(0, 0, 0, 0)
    return best[0], hits


def roman_domination(g, cap=None, enum_cap=None, with_b2max=True):
    """Exact gamma_R with a minimum-weight assignment, plus b2max.

    ``b2max`` is the largest number of 2-vertices over all minimum-weight
    Roman functions. It requires enumerating every optimum and is subject
    to ``enum_cap``; pass ``with_b2max=False`` to skip it (``None`` is
    then returned in its place).
    """
    check_cap("roman_domination", g.n, DEFAULT_CAPS.subset if cap is None else cap)
    stats = SearchStats()
    if g.n == 0:
        return DominationResult("gamma_R", 0, RomanAssignment(()), True, 0), 0
    weight, hits = _roman_search(g, stats)
    witness = RomanAssignment.from_twos(g, set(bits_to_tuple(hits[0])))
    if witness.weight != weight or not predicates.is_roman(g, witness.values):
        raise ConstructionError("roman_domination: solver witness fails the Roman condition")
    result = DominationResult("gamma_R", weight, witness, True, stats.nodes)
    if not with_b2max:
        return result, None
    check_cap("roman b2max enumeration", g.n, DEFAULT_CAPS.roman_enum if enum_cap is None else enum_cap)
    _, optima = _roman_search(g, stats, target=weight)
    b2max = max(t.bit_count() for t in optima)
    return DominationResult("gamma_R", weight, witness, True, stats.nodes), b2max


def minimum_roman_assignments(g, enum_cap=None):
    """Every minimal minimum-weight Roman function (one per optimal 2-set)."""
    check_cap("roman enumeration", g.n, DEFAULT_CAPS.roman_enum if enum_cap is None else enum_cap)
    stats = SearchStats()
    weight, _ = _roman_search(g, stats)
    _, optima = _roman_search(g, stats, target=weight)
    return [RomanAssignment.from_twos(g, set(bits_to_tuple(t))) for t in sorted(optima)]
