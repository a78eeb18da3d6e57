"""Brute-force reference values, written against plain edge lists.

Nothing here imports the solvers or the package's validators: each
oracle works from ``(n, edges)`` and enumerates its whole search space
(all subsets, all 3^n Roman assignments, all set partitions), so it is
slow but obviously correct.  Intended for graphs with n <= 9.
"""

from itertools import combinations, product

INF = float("inf")


def adjacency(n, edges):
    nbrs = [set() for _ in range(n)]
    for u, v in edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    return nbrs


def floyd_warshall(n, edges):
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in edges:
        d[u][v] = d[v][u] = 1
    for m in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][m] + d[m][j] < d[i][j]:
                    d[i][j] = d[i][m] + d[m][j]
    return d


def power_edges(n, edges, k):
    d = floyd_warshall(n, edges)
    return [(i, j) for i in range(n) for j in range(i + 1, n) if d[i][j] <= k]


def set_partitions(n):
    """Every partition of range(n), as a list of blocks (restricted growth strings)."""
    if n == 0:
        yield []
        return

    def grow(v, blocks):
        if v == n:
            yield [list(b) for b in blocks]
            return
        for b in blocks:
            b.append(v)
            yield from grow(v + 1, blocks)
            b.pop()
        blocks.append([v])
        yield from grow(v + 1, blocks)
        blocks.pop()

    yield from grow(0, [])


def _independent(nbrs, s):
    return all(not (nbrs[v] & s) for v in s)


def _dominating(nbrs, s, n):
    return all(v in s or nbrs[v] & s for v in range(n))


def chromatic(n, edges, k=1):
    """Fewest blocks in a partition into independent sets of the k-th power."""
    if n == 0:
        return 0
    nbrs = adjacency(n, power_edges(n, edges, k))
    return min(len(p) for p in set_partitions(n) if all(_independent(nbrs, set(b)) for b in p))


def colorable(n, edges, c, k=1):
    """Whether a proper c-coloring of the k-th power exists, by trying every color vector."""
    pe = power_edges(n, edges, k)
    if n == 0:
        return True
    # fixing vertex 0 to color 0 loses no generality
    for rest in product(range(c), repeat=n - 1):
        col = (0,) + rest
        if all(col[u] != col[v] for u, v in pe):
            return True
    return False


def smallest_subset(n, ok):
    """Size and lexicographically first set of the smallest size satisfying ``ok``."""
    for size in range(n + 1):
        for s in combinations(range(n), size):
            if ok(set(s)):
                return size, s
    return None


def largest_subset(n, ok):
    for size in range(n, -1, -1):
        for s in combinations(range(n), size):
            if ok(set(s)):
                return size
    return None


def _connected(nbrs, s):
    if not s:
        return False
    start = next(iter(s))
    seen, stack = {start}, [start]
    while stack:
        v = stack.pop()
        for u in nbrs[v] & s:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return seen == s


def domination(n, edges):
    nbrs = adjacency(n, edges)
    return smallest_subset(n, lambda s: _dominating(nbrs, s, n))


def connected_domination(n, edges):
    nbrs = adjacency(n, edges)
    return smallest_subset(n, lambda s: _dominating(nbrs, s, n) and _connected(nbrs, s))[0]


def independence(n, edges):
    nbrs = adjacency(n, edges)
    return largest_subset(n, lambda s: _independent(nbrs, s))


def independent_domination(n, edges):
    nbrs = adjacency(n, edges)
    return smallest_subset(n, lambda s: _independent(nbrs, s) and _dominating(nbrs, s, n))[0]


def k_domination(n, edges, k):
    nbrs = adjacency(n, edges)
    return smallest_subset(n, lambda s: all(v in s or len(nbrs[v] & s) >= k for v in range(n)))[0]


def distance_k_domination(n, edges, k):
    d = floyd_warshall(n, edges)
    return smallest_subset(n, lambda s: all(any(d[v][w] <= k for w in s) for v in range(n)))[0]


def _resolving(d, s, n):
    order = sorted(s)
    traces = {tuple(d[v][w] for w in order) for v in range(n)}
    return len(traces) == n


def metric_dimension(n, edges):
    d = floyd_warshall(n, edges)
    return smallest_subset(n, lambda s: _resolving(d, s, n))[0]


def resolving_domination(n, edges):
    d = floyd_warshall(n, edges)
    nbrs = adjacency(n, edges)
    return smallest_subset(n, lambda s: _resolving(d, s, n) and _dominating(nbrs, s, n))[0]


def locating_domination(n, edges):
    nbrs = adjacency(n, edges)

    def ok(s):
        if not _dominating(nbrs, s, n):
            return False
        traces = [frozenset(nbrs[v] & s) for v in range(n) if v not in s]
        return len(set(traces)) == len(traces)

    return smallest_subset(n, ok)[0]


def roman(n, edges):
    """(gamma_R, largest number of 2s over all minimum-weight Roman functions)."""
    nbrs = adjacency(n, edges)
    best, b2 = INF, -1
    for f in product((0, 1, 2), repeat=n):
        w = sum(f)
        if w > best:
            continue
        if all(f[v] or any(f[u] == 2 for u in nbrs[v]) for v in range(n)):
            twos = f.count(2)
            if w < best:
                best, b2 = w, twos
            else:
                b2 = max(b2, twos)
    return best, b2


def domatic(n, edges):
    nbrs = adjacency(n, edges)
    return max(len(p) for p in set_partitions(n) if all(_dominating(nbrs, set(b), n) for b in p))


def idomatic(n, edges):
    """Most classes in a partition into independent dominating sets, or None."""
    nbrs = adjacency(n, edges)
    sizes = [
        len(p)
        for p in set_partitions(n)
        if all(_independent(nbrs, set(b)) and _dominating(nbrs, set(b), n) for b in p)
    ]
    return max(sizes) if sizes else None


def is_connected(n, edges):
    return n > 0 and _connected(adjacency(n, edges), set(range(n)))
