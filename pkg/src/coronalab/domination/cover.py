"""Exact minimum covers by branch and bound with component decomposition.

Works on the residual form of the constraints used in :mod:`.search`:
``(free, count, need)`` over the still undecided vertices, asking for one
chosen vertex of ``free`` or ``need`` chosen vertices of ``count``.
Choosing a vertex satisfies or weakens the constraints containing it;
discarding a vertex removes it from every constraint. Residual
constraint systems that share no vertex are solved independently, and
exact values are memoized on the residual system, so graphs that fall
apart into small pieces once a few hub vertices are fixed (coronas are
the motivating case) are solved quickly.

The minimum value is found first; the lexicographically smallest
minimum set is then built one vertex at a time, asking the same solver
whether a given prefix still extends to a minimum solution.
"""

from ..graph import iter_bits
from .search import SearchStats

INFEASIBLE = float("inf")


def _normalize(free, count, need):
    """Canonical residual constraint, ``None`` if already satisfied, ``False`` if impossible."""
    if need <= 0:
        return None
    if count.bit_count() < need:
        count = 0
    if not count:
        return (free, 0, 1) if free else False
    if not free and need == 1:
        return (count, 0, 1)
    return (free, count, need)


def _reduce_hitting(cons):
    """Drop duplicate constraints and hitting constraints containing another one."""
    cons = set(cons)
    hitting = sorted((c for c in cons if not c[1]), key=lambda c: c[0].bit_count())
    kept = []
    for c in hitting:
        if not any(k[0] & c[0] == k[0] for k in kept):
            kept.append(c)
    return frozenset(kept + [c for c in cons if c[1]])


def _choose(cons, x):
    bit = 1 << x
    out = []
    for free, count, need in cons:
        if free & bit:
            continue
        if count & bit:
            c = _normalize(free, count & ~bit, need - 1)
            if c is None:
                continue
            out.append(c)
        else:
            out.append((free, count, need))
    return frozenset(out)


def _discard(cons, x):
    bit = 1 << x
    out = []
    for free, count, need in cons:
        if (free | count) & bit:
            c = _normalize(free & ~bit, count & ~bit, need)
            if c is False:
                return None
            out.append(c)
        else:
            out.append((free, count, need))
    return frozenset(out)


def _region(c):
    return c[0] | c[1]


def _components(cons):
    comps = []
    for c in sorted(cons):
        reg = _region(c)
        merged = [c]
        for comp in [comp for comp in comps if comp[0] & reg]:
            comps.remove(comp)
            reg |= comp[0]
            merged.extend(comp[1])
        comps.append((reg, merged))
    return [frozenset(members) for _, members in comps]


def _packing_bound(cons):
    used = 0
    total = 0
    for c in sorted(cons, key=lambda c: _region(c).bit_count()):
        reg = _region(c)
        if not reg & used:
            used |= reg
            total += 1 if c[0] else c[2]
    return total


class CoverSolver:
    """Minimum number of vertices meeting a family of covering constraints."""

    def __init__(self, n, constraints, stats=None):
        self.n = n
        self.stats = stats if stats is not None else SearchStats()
        self.exact = {}
        self.lower = {}
        start = []
        feasible = True
        for free, count, need in constraints:
            c = _normalize(free, count, need)
            if c is False:
                feasible = False
            elif c is not None:
                start.append(c)
        self.root = _reduce_hitting(start) if feasible else None

    def _forced(self, cons):
        """Apply forced choices; returns (cost, residual) or (INF, None)."""
        cost = 0
        while True:
            pick = None
            for free, count, need in cons:
                if not count and free & (free - 1) == 0:
                    pick = [free.bit_length() - 1]
                    break
                if not free and count.bit_count() == need:
                    pick = list(iter_bits(count))
                    break
            if pick is None:
                return cost, cons
            for x in pick:
                cons = _choose(cons, x)
                cost += 1

    def solve(self, cons, ub=INFEASIBLE):
        """Exact minimum if it is below ``ub``; otherwise some value >= ``ub``."""
        if cons is None:
            return INFEASIBLE
        if not cons:
            return 0
        if cons in self.exact:
            return self.exact[cons]
        known = self.lower.get(cons, 0)
        if known >= ub:
            return known
        self.stats.nodes += 1
        cost, rest = self._forced(cons)
        if cost:
            value = cost + self.solve(rest, ub - cost)
            return self._record(cons, value, ub)
        lb = max(known, _packing_bound(cons))
        if lb >= ub:
            self.lower[cons] = lb
            return lb
        comps = _components(cons)
        if len(comps) > 1:
            bounds = [_packing_bound(c) for c in comps]
            remaining = sum(bounds)
            total = 0
            for comp, b in sorted(zip(comps, bounds), key=lambda p: len(p[0])):
                remaining -= b
                total += self.solve(comp, ub - total - remaining)
                if total + remaining >= ub:
                    return self._record(cons, total + remaining, ub)
            return self._record(cons, total, ub)
        x = self._branch_vertex(cons)
        best = ub
        a = 1 + self.solve(_choose(cons, x), best - 1)
        if a < best:
            best = a
        b = self.solve(_discard(cons, x), best)
        if b < best:
            best = b
        return self._record(cons, best, ub)

    def _record(self, cons, value, ub):
        if value < ub:
            self.exact[cons] = value
        else:
            self.lower[cons] = max(self.lower.get(cons, 0), ub)
        return value

    @staticmethod
    def _branch_vertex(cons):
        """A vertex of a smallest constraint, preferring the one in most constraints."""
        smallest = min(cons, key=lambda c: (_region(c).bit_count(), c))
        occurrences = {}
        for c in cons:
            for v in iter_bits(_region(c)):
                occurrences[v] = occurrences.get(v, 0) + 1
        return max(iter_bits(_region(smallest)), key=lambda v: (occurrences[v], -v))

    def minimum(self):
        return self.solve(self.root)

    def first_minimum_set(self):
        """``(size, mask)`` of the lexicographically smallest minimum set, or ``(None, None)``."""
        size = self.minimum()
        if size == INFEASIBLE:
            return None, None
        cons = self.root
        left = size
        mask = 0
        for e in range(self.n):
            if not cons:
                break
            chosen = _choose(cons, e)
            if 1 + self.solve(chosen, left) <= left:
                cons = chosen
                mask |= 1 << e
                left -= 1
            else:
                cons = _discard(cons, e)
        if cons or left:
            raise AssertionError("prefix extension lost the optimum")
        return size, mask


def min_cover(n, constraints, stats=None):
    """``(size, mask)`` for the lexicographically first minimum set meeting the constraints."""
    return CoverSolver(n, constraints, stats).first_minimum_set()
