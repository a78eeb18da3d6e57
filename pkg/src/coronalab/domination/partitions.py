"""Domatic and idomatic numbers by exhaustive class assignment.

Vertices are assigned classes in restricted-growth order (a vertex may
open class c only if classes 0..c-1 are open), so every partition is
visited once. The prune: a closed neighborhood N[u] that still misses
some classes needs at least that many unassigned vertices to fill them.
"""

from ..coloring import chromatic_number
from ..config import DEFAULT_CAPS, check_cap
from ..errors import ConstructionError, PreconditionError
from . import predicates
from .results import DominationResult
from .search import SearchStats


def _partition_into(g, t, independent, stats):
    """A partition of V into t dominating (and, optionally, independent) classes, or None."""
    n = g.n
    if t > n:
        return None
    closed = [g.closed(v) for v in range(n)]
    members = [[u for u in range(n) if (closed[v] >> u) & 1] for v in range(n)]
    cls = [-1] * n
    seen = [0] * n  # classes already present in N[u]
    left = [len(members[u]) for u in range(n)]  # unassigned vertices in N[u]

    def rec(v, opened):
        stats.nodes += 1
        if v == n:
            return opened == t
        if t - opened > n - v:
            return False
        for c in range(min(opened + 1, t)):
            bit = 1 << c
            if independent and any(cls[u] == c for u in members[v] if u != v):
                continue
            cls[v] = c
            saved = [(u, seen[u]) for u in members[v]]
            for u in members[v]:
                seen[u] |= bit
                left[u] -= 1
            ok = all(t - seen[u].bit_count() <= left[u] for u in members[v])
            if ok and rec(v + 1, max(opened, c + 1)):
                return True
            for u, s in saved:
                seen[u] = s
                left[u] += 1
            cls[v] = -1
        return False

    if not rec(0, 0):
        return None
    return tuple(tuple(v for v in range(n) if cls[v] == c) for c in range(t))


def _partition_cap(what, g, cap):
    check_cap(what, g.n, DEFAULT_CAPS.partition if cap is None else cap)


def domatic_number(g, cap=None):
    """Largest partition of V into dominating sets; at most min degree + 1."""
    _partition_cap("domatic_number", g, cap)
    if g.n == 0:
        raise PreconditionError("domatic_number needs at least one vertex")
    stats = SearchStats()
    for t in range(g.min_degree + 1, 0, -1):
        parts = _partition_into(g, t, False, stats)
        if parts is not None:
            if not predicates.is_domatic_partition(g, parts):
                raise ConstructionError("domatic_number: witness fails its predicate")
            return DominationResult("domatic", t, parts, True, stats.nodes)
    raise ConstructionError("domatic_number: V itself should dominate")


def idomatic_number(g, cap=None):
    """Largest partition of V into independent dominating sets, or None if none exists."""
    _partition_cap("idomatic_number", g, cap)
    if g.n == 0:
        raise PreconditionError("idomatic_number needs at least one vertex")
    stats = SearchStats()
    for t in range(g.min_degree + 1, 0, -1):
        parts = _partition_into(g, t, True, stats)
        if parts is not None:
            if not predicates.is_idomatic_partition(g, parts):
                raise ConstructionError("idomatic_number: witness fails its predicate")
            return DominationResult("idomatic", t, parts, True, stats.nodes)
    return None


def independent_partition_exists(g, t, cap=None, nonempty=False):
    """Whether V splits into t independent sets.

    Empty classes are allowed by default, which makes this chi(G) <= t.
    With ``nonempty`` every class must be used, i.e. chi(G) <= t <= n.
    """
    if t < 1:
        raise PreconditionError(f"t must be >= 1, got {t}")
    chi = chromatic_number(g, cap=cap).value
    if nonempty:
        return chi <= t <= g.n
    return chi <= t
