"""Simple undirected graphs stored as per-vertex neighbor bitsets.

Vertex ids are ``0..n-1``. ``adj[v]`` is a Python int whose bit ``u`` is
set iff ``u`` is adjacent to ``v``. Graphs are immutable and hashable, so
they can be used as cache keys and shared between workers.
"""

from collections import deque
from dataclasses import dataclass
import math

import numpy as np

from .errors import GraphError

INF = math.inf


def iter_bits(mask):
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_tuple(mask):
    return tuple(iter_bits(mask))


def mask_of(vertices):
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in iter_bits(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @property
    def m(self):
        return sum(nb.bit_count() for nb in self.adj) // 2

    @property
    def full_mask(self):
        return (1 << self.n) - 1

    def neighbors(self, v):
        return bits_to_tuple(self.adj[v])

    def closed(self, v):
        """Bitmask of the closed neighborhood N[v]."""
        return self.adj[v] | (1 << v)

    def has_edge(self, u, v):
        return bool(self.adj[u] >> v & 1)

    def degree(self, v):
        return self.adj[v].bit_count()

    def degrees(self):
        return [nb.bit_count() for nb in self.adj]

    @property
    def max_degree(self):
        return max(self.degrees(), default=0)

    @property
    def min_degree(self):
        return min(self.degrees(), default=0)

    def edges(self):
        """Edges as ``(u, v)`` pairs with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def induced_is_connected(self, mask):
        """True if the subgraph induced by the vertex bitmask is connected (or empty)."""
        if not mask:
            return True
        start = mask & -mask
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.adj[v]
            nxt &= mask & ~seen
            seen |= nxt
            frontier = nxt
        return seen == mask

    def is_connected(self):
        return self.induced_is_connected(self.full_mask)

    def is_independent(self, mask):
        return all(not (self.adj[v] & mask) for v in iter_bits(mask))

    def complement(self):
        full = self.full_mask
        return Graph(self.n, tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(self.adj)))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n, edges):
    """Build a graph on ``n`` vertices from ``(u, v)`` pairs.

    Duplicate and reversed pairs collapse to one edge. Self-loops and
    out-of-range ids raise :class:`GraphError` naming the pair.
    """
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    adj = [0] * n
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {tuple(pair)} has a vertex outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"edge {tuple(pair)} is a self-loop")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def bfs_layers(g, source):
    """Distances from ``source``; unreachable vertices get ``INF``."""
    dist = [INF] * g.n
    dist[source] = 0
    seen = 1 << source
    frontier = 1 << source
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        nxt &= ~seen
        seen |= nxt
        for v in iter_bits(nxt):
            dist[v] = d
        frontier = nxt
    return dist


def distances(g):
    """All-pairs hop distances as an ``n x n`` float array (``inf`` if disconnected)."""
    out = np.full((g.n, g.n), np.inf)
    for s in range(g.n):
        out[s] = bfs_layers(g, s)
    return out


def eccentricity(g, v):
    return max(bfs_layers(g, v))


def diameter(g):
    """Largest distance between two vertices; ``inf`` for disconnected graphs."""
    if g.n == 0:
        return 0
    return max(eccentricity(g, v) for v in range(g.n))


def girth(g):
    """Length of a shortest cycle; ``inf`` for forests."""
    best = INF
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            # cycles closed from depth d have length >= 2d
            if 2 * dist[u] >= best:
                break
            for w in iter_bits(g.adj[u]):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def ball_mask(g, v, t):
    seen = 1 << v
    frontier = seen
    for _ in range(t):
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= g.adj[u]
        nxt &= ~seen
        if not nxt:
            break
        seen |= nxt
        frontier = nxt
    return seen


def ball(g, v, t):
    """The set M_t[v] of vertices at distance at most ``t`` from ``v``."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
    if t < 0:
        raise GraphError(f"negative radius {t}")
    return frozenset(iter_bits(ball_mask(g, v, t)))


def power(g, k):
    """The k-th power: ``u ~ v`` iff ``1 <= d(u, v) <= k``."""
    if k < 1:
        raise GraphError(f"power exponent must be >= 1, got {k}")
    if k == 1:
        return g
    return Graph(g.n, tuple(ball_mask(g, v, k) & ~(1 << v) for v in range(g.n)))


@dataclass(frozen=True)
class CoronaLabeling:
    """Vertex layout of a corona: centers first, then one contiguous block per copy."""

    n1: int
    n2: int

    @property
    def order(self):
        return self.n1 * (1 + self.n2)

    def center(self, i):
        return i

    def copy_vertex(self, i, j):
        return self.n1 + i * self.n2 + j

    def copy_mask(self, i):
        return ((1 << self.n2) - 1) << (self.n1 + i * self.n2)

    @property
    def centers_mask(self):
        return (1 << self.n1) - 1

    def label(self, v):
        """``("center", i)`` or ``("copy", i, j)`` for corona vertex ``v``."""
        if not 0 <= v < self.order:
            raise GraphError(f"vertex {v} outside the corona of order {self.order}")
        if v < self.n1:
            return ("center", v)
        i, j = divmod(v - self.n1, self.n2)
        return ("copy", i, j)

    def lift(self, i, h_mask):
        """Map a vertex bitmask of H to the corresponding vertices of copy ``i``."""
        return h_mask << (self.n1 + i * self.n2)

    def restrict(self, i, mask):
        """Inverse of :meth:`lift`: the H-vertices of copy ``i`` present in ``mask``."""
        return (mask >> (self.n1 + i * self.n2)) & ((1 << self.n2) - 1)

    def to_json(self):
        vertices = []
        for v in range(self.order):
            lab = self.label(v)
            if lab[0] == "center":
                vertices.append({"id": v, "kind": "center", "g": lab[1]})
            else:
                vertices.append({"id": v, "kind": "copy", "copy": lab[1], "h": lab[2]})
        return {"n1": self.n1, "n2": self.n2, "vertices": vertices}


def corona(g, h):
    """The corona product of ``g`` and ``h`` with its vertex labeling."""
    if g.n < 1:
        raise GraphError("the corona needs at least one vertex in G")
    lab = CoronaLabeling(g.n, h.n)
    adj = [0] * lab.order
    for i in range(g.n):
        block = lab.copy_mask(i)
        adj[i] = g.adj[i] | block
        for j in range(h.n):
            adj[lab.copy_vertex(i, j)] = lab.lift(i, h.adj[j]) | (1 << i)
    return Graph(lab.order, tuple(adj)), lab
