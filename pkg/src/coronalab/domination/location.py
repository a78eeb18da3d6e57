"""Metric dimension, resolving domination and locating domination.

All three are hitting-set problems. A set resolves u and v exactly when
it meets R(u, v) = {w : d(u, w) != d(v, w)}. For locating-dominating
sets, two outside vertices u, v get distinct traces exactly when the set
meets N(u) ^ N(v); the pair is also separated when u or v is in the set,
so the pair constraint is {u, v} | (N(u) ^ N(v)).
"""

from ..config import DEFAULT_CAPS, check_cap
from ..errors import ConstructionError, PreconditionError
from ..graph import bits_to_tuple, distances, iter_bits
from . import predicates
from .results import DominationResult, LdCase
from .cover import min_cover
from .search import SearchStats, all_min_subsets


def _prepare(what, g, cap):
    if g.n == 0 or not g.is_connected():
        raise PreconditionError(f"{what} needs a connected graph")
    check_cap(what, g.n, DEFAULT_CAPS.subset if cap is None else cap)


def resolving_constraints(g):
    d = distances(g)
    cons = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            mask = 0
            for w in range(g.n):
                if d[u, w] != d[v, w]:
                    mask |= 1 << w
            cons.append((mask, 0, 1))
    return cons


def locating_constraints(g):
    cons = [(g.closed(u), 0, 1) for u in range(g.n)]
    for u in range(g.n):
        for v in range(u + 1, g.n):
            cons.append(((1 << u) | (1 << v) | (g.adj[u] ^ g.adj[v]), 0, 1))
    return cons


def _solve(parameter, g, cons, check):
    stats = SearchStats()
    size, mask = min_cover(g.n, cons, stats=stats)
    witness = bits_to_tuple(mask)
    if not check(witness):
        raise ConstructionError(f"{parameter}: solver witness {witness} fails its predicate")
    return DominationResult(parameter, size, witness, True, stats.nodes)


def metric_dimension(g, cap=None):
    """Minimum resolving set; the single-vertex graph has dimension 0."""
    _prepare("metric_dimension", g, cap)
    return _solve("dim", g, resolving_constraints(g), lambda s: predicates.is_resolving(g, s))


def resolving_domination_number(g, cap=None):
    """Minimum set that is both resolving and dominating (gamma_ld)."""
    _prepare("resolving_domination_number", g, cap)
    cons = resolving_constraints(g) + [(g.closed(u), 0, 1) for u in range(g.n)]
    return _solve("gamma_ld", g, cons, lambda s: predicates.is_resolving_dominating(g, s))


def locating_domination_number(g, cap=None):
    """Minimum dominating set with pairwise distinct outside traces (gamma_{l-d})."""
    _prepare("locating_domination_number", g, cap)
    return _solve(
        "gamma_l_d", g, locating_constraints(g), lambda s: predicates.is_locating_dominating(g, s)
    )


def location_numbers(g, cap=None):
    """``(dim, gamma_ld, gamma_l_d)`` as three results, each with a witness."""
    return (
        metric_dimension(g, cap),
        resolving_domination_number(g, cap),
        locating_domination_number(g, cap),
    )


def minimum_locating_dominating_sets(g, cap=None):
    """Every minimum locating-dominating set, as sorted tuples in lexicographic order."""
    _prepare("minimum_locating_dominating_sets", g, cap)
    size, masks = all_min_subsets(g.n, locating_constraints(g))
    return size, [bits_to_tuple(m) for m in masks]


def ld_case_classify(h, cap=None):
    """Decide which structural case ``h`` is in, with evidence.

    Case I holds when some minimum locating-dominating set A has every
    outside vertex adjacent to a proper subset of A. Otherwise every
    minimum set B has an outside vertex adjacent to all of B (Case II).
    """
    size, sets = minimum_locating_dominating_sets(h, cap)
    witnesses = {}
    for b in sets:
        bmask = sum(1 << v for v in b)
        full_trace = [u for u in range(h.n) if not (bmask >> u) & 1 and h.adj[u] & bmask == bmask]
        if not full_trace:
            return LdCase("I", size, b)
        witnesses[b] = full_trace[0]
    return LdCase("II", size, witnesses)
