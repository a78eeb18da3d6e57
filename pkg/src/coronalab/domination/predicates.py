"""Defining predicates for the domination-type parameters.

These checks are deliberately naive (plain sets and breadth-first
search) and share no code with the solvers; every witness a solver or
construction returns is re-checked here.
"""

from collections import deque

from ..errors import MalformedWitnessError


def _nbrs(g, v):
    return {u for u in range(g.n) if (g.adj[v] >> u) & 1}


def _dist_from(g, s):
    dist = {s: 0}
    queue = deque([s])
    while queue:
        v = queue.popleft()
        for u in _nbrs(g, v):
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def _as_set(g, s):
    s = set(s)
    if any(not 0 <= v < g.n for v in s):
        raise MalformedWitnessError(f"vertex set {sorted(s)} leaves the range 0..{g.n - 1}")
    return s


def is_dominating(g, s):
    s = _as_set(g, s)
    return all(v in s or _nbrs(g, v) & s for v in range(g.n))


def is_k_dominating(g, s, k):
    s = _as_set(g, s)
    return all(v in s or len(_nbrs(g, v) & s) >= k for v in range(g.n))


def is_distance_k_dominating(g, s, k):
    s = _as_set(g, s)
    reach = set()
    for w in s:
        reach.update(u for u, d in _dist_from(g, w).items() if d <= k)
    return len(reach) == g.n


def is_independent_set(g, s):
    s = _as_set(g, s)
    return all(not (_nbrs(g, v) & s) for v in s)


def is_connected_set(g, s):
    s = _as_set(g, s)
    if not s:
        return False
    start = min(s)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in _nbrs(g, v) & s:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return seen == s


def is_roman(g, values):
    values = tuple(values)
    if len(values) != g.n or any(x not in (0, 1, 2) for x in values):
        raise MalformedWitnessError(f"Roman function needs {g.n} values in {{0,1,2}}")
    return all(values[v] != 0 or any(values[u] == 2 for u in _nbrs(g, v)) for v in range(g.n))


def is_resolving(g, s):
    s = sorted(_as_set(g, s))
    dist = {w: _dist_from(g, w) for w in s}
    vectors = {tuple(dist[w].get(v) for w in s) for v in range(g.n)}
    return len(vectors) == g.n


def is_resolving_dominating(g, s):
    return is_resolving(g, s) and is_dominating(g, s)


def is_locating_dominating(g, s):
    """Dominating, and outside vertices have pairwise distinct traces N(u) & S."""
    s = _as_set(g, s)
    if not is_dominating(g, s):
        return False
    traces = [frozenset(_nbrs(g, v) & s) for v in range(g.n) if v not in s]
    return len(set(traces)) == len(traces)


def _is_partition(g, parts):
    seen = [v for part in parts for v in part]
    if sorted(seen) != list(range(g.n)):
        raise MalformedWitnessError("classes do not partition the vertex set")
    return True


def is_domatic_partition(g, parts):
    _is_partition(g, parts)
    return all(part and is_dominating(g, part) for part in parts)


def is_idomatic_partition(g, parts):
    _is_partition(g, parts)
    return all(part and is_dominating(g, part) and is_independent_set(g, part) for part in parts)
