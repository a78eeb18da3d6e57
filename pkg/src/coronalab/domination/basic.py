"""Exact domination, connected, independent, k- and distance-k domination numbers."""

from ..cliques import complement_adj, max_clique
from ..config import DEFAULT_CAPS, check_cap
from ..errors import ConstructionError, PreconditionError
from ..graph import ball_mask, bits_to_tuple
from . import predicates
from .results import DominationResult
from .cover import min_cover
from .search import SearchStats, min_subset


def _subset_cap(what, g, cap):
    check_cap(what, g.n, DEFAULT_CAPS.subset if cap is None else cap)


def _require_connected(what, g):
    if g.n == 0 or not g.is_connected():
        raise PreconditionError(f"{what} needs a connected graph")


def _verified(parameter, g, size, mask, stats, check, k=None):
    witness = bits_to_tuple(mask)
    if not check(witness):
        raise ConstructionError(f"{parameter}: solver witness {witness} fails its predicate")
    return DominationResult(parameter, size, witness, True, stats.nodes, k)


def _domination_lower(g):
    # each vertex dominates at most Delta + 1 vertices
    return -(-g.n // (g.max_degree + 1)) if g.n else 0


def domination_constraints(g):
    return [(g.closed(v), 0, 1) for v in range(g.n)]


def domination_number(g, cap=None):
    """Minimum dominating set, lexicographically first among the minimum ones."""
    _subset_cap("domination_number", g, cap)
    stats = SearchStats()
    size, mask = min_cover(g.n, domination_constraints(g), stats=stats)
    return _verified("gamma", g, size, mask, stats, lambda s: predicates.is_dominating(g, s))


def connected_domination_number(g, cap=None):
    """Minimum dominating set inducing a connected subgraph."""
    _require_connected("connected_domination_number", g)
    _subset_cap("connected_domination_number", g, cap)
    stats = SearchStats()
    size, mask = min_subset(
        g.n,
        domination_constraints(g),
        accept=g.induced_is_connected,
        lower=max(1, _domination_lower(g)),
        stats=stats,
    )
    return _verified(
        "gamma_c",
        g,
        size,
        mask,
        stats,
        lambda s: predicates.is_dominating(g, s) and predicates.is_connected_set(g, s),
    )


def independence_number(g, cap=None):
    """Maximum independent set size (beta_0), via a maximum clique of the complement."""
    _subset_cap("independence_number", g, cap)
    mask = max_clique(complement_adj(g.adj))
    stats = SearchStats()
    return _verified(
        "beta0", g, mask.bit_count(), mask, stats, lambda s: predicates.is_independent_set(g, s)
    )


def independent_domination_number(g, cap=None):
    """Minimum independent dominating set size i(G)."""
    _subset_cap("independent_domination_number", g, cap)
    stats = SearchStats()
    size, mask = min_subset(
        g.n, domination_constraints(g), adj=g.adj, lower=_domination_lower(g), stats=stats
    )
    return _verified(
        "i",
        g,
        size,
        mask,
        stats,
        lambda s: predicates.is_dominating(g, s) and predicates.is_independent_set(g, s),
    )


def k_domination_number(g, k, cap=None):
    """Minimum S such that every vertex outside S has at least k neighbors in S."""
    if k < 1:
        raise PreconditionError(f"k must be >= 1, got {k}")
    _subset_cap("k_domination_number", g, cap)
    stats = SearchStats()
    cons = [(1 << v, g.adj[v], k) for v in range(g.n)]
    size, mask = min_cover(g.n, cons, stats=stats)
    return _verified(
        "gamma_k", g, size, mask, stats, lambda s: predicates.is_k_dominating(g, s, k), k=k
    )


def distance_k_domination_number(g, k, cap=None):
    """Minimum S with every vertex within distance k of S."""
    if k < 1:
        raise PreconditionError(f"k must be >= 1, got {k}")
    _require_connected("distance_k_domination_number", g)
    _subset_cap("distance_k_domination_number", g, cap)
    stats = SearchStats()
    cons = [(ball_mask(g, v, k), 0, 1) for v in range(g.n)]
    size, mask = min_cover(g.n, cons, stats=stats)
    return _verified(
        "gamma_dist_k",
        g,
        size,
        mask,
        stats,
        lambda s: predicates.is_distance_k_dominating(g, s, k),
        k=k,
    )
