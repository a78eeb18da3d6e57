"""Lexicographic minimum-subset search over covering constraints.

A constraint is a triple ``(free, count, need)`` of vertex bitmasks and an
integer. A set ``S`` satisfies it when ``S & free`` is nonempty or
``S & count`` has at least ``need`` members. Plain hitting constraints use
``count = 0``. Domination is hitting every closed neighborhood, k-domination
uses ``(1 << v, N(v), k)``, and resolving sets hit every distinguishing set.

Sizes are tried in increasing order and subsets of one size in
lexicographic order, so the first accepted set is the lexicographically
smallest minimum solution.
"""

from dataclasses import dataclass

from ..graph import iter_bits


@dataclass
class SearchStats:
    nodes: int = 0


def _satisfied(con, s):
    free, count, need = con
    return bool(s & free) or (count and (s & count).bit_count() >= need)


def subsets_of_size(n, constraints, size, *, adj=None, accept=None, collect=False, stats=None):
    """Subsets of exactly ``size`` vertices meeting every constraint, in lexicographic order.

    With ``adj`` given, chosen vertices must be pairwise non-adjacent.
    ``accept`` is an extra predicate checked on complete candidates.
    Returns the first hit (or ``None``), or every hit when ``collect``.
    """
    stats = stats if stats is not None else SearchStats()
    full = (1 << n) - 1
    found = []

    def dfs(s, nxt, slots, unsat, blocked):
        stats.nodes += 1
        if slots == 0:
            if not unsat and (accept is None or accept(s)):
                found.append(s)
                return not collect
            return False
        allowed = full & ~((1 << nxt) - 1) & ~blocked
        if allowed.bit_count() < slots:
            return False
        hi = n - 1
        used = 0
        packed = 0
        for free, count, need in unsat:
            fa = free & allowed
            if count:
                have = (s & count).bit_count()
                ca = count & allowed
                if not fa and have + ca.bit_count() < need:
                    return False
                region = fa | ca
                req = 1 if fa else need - have
            else:
                if not fa:
                    return False
                region = fa
                req = 1
            # every later pick lies above nxt; the region's top bit caps this pick
            top = region.bit_length() - 1
            if top < hi:
                hi = top
            if not region & used:
                used |= region
                packed += req
        if packed > slots:
            return False
        for e in iter_bits(allowed & ((2 << hi) - 1)):
            bit = 1 << e
            t = s | bit
            rest = [c for c in unsat if not _satisfied(c, t)]
            nb = blocked | adj[e] | bit if adj is not None else blocked
            if dfs(t, e + 1, slots - 1, rest, nb):
                return True
        return False

    start = [c for c in constraints if not _satisfied(c, 0)]
    dfs(0, 0, size, start, 0)
    if collect:
        return found
    return found[0] if found else None


def min_subset(n, constraints, *, adj=None, accept=None, lower=0, stats=None):
    """Smallest size and lexicographically first set meeting the constraints.

    Returns ``(size, mask)`` or ``(None, None)`` if no subset qualifies.
    """
    stats = stats if stats is not None else SearchStats()
    for size in range(lower, n + 1):
        hit = subsets_of_size(n, constraints, size, adj=adj, accept=accept, stats=stats)
        if hit is not None:
            return size, hit
    return None, None


def all_min_subsets(n, constraints, *, adj=None, accept=None, lower=0, stats=None):
    """Every minimum-size set meeting the constraints, in lexicographic order."""
    stats = stats if stats is not None else SearchStats()
    size, _ = min_subset(n, constraints, adj=adj, accept=accept, lower=lower, stats=stats)
    if size is None:
        return None, []
    return size, subsets_of_size(n, constraints, size, adj=adj, accept=accept, collect=True, stats=stats)
