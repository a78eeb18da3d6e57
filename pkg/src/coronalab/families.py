"""Named graph families and seeded random generators."""

from dataclasses import dataclass
import random

from .errors import GraphError
from .graph import build_graph

FAMILIES = (
    "path",
    "cycle",
    "complete",
    "empty",
    "star",
    "complete-bipartite",
    "random-tree",
    "random-gnp",
)


@dataclass(frozen=True)
class FamilySpec:
    """A family tag, its size parameters and, for random families, a seed.

    ``star`` takes ``(1, t)`` or ``(t,)`` and builds K_{1,t};
    ``random-gnp`` takes ``(n, p)`` with ``p`` a float in [0, 1].
    """

    family: str
    params: tuple
    seed: int | None = None

    @property
    def name(self):
        p = self.params
        if self.family == "path":
            return f"P{p[0]}"
        if self.family == "cycle":
            return f"C{p[0]}"
        if self.family == "complete":
            return f"K{p[0]}"
        if self.family == "empty":
            return f"N{p[0]}"
        if self.family == "star":
            return f"K_{{1,{p[-1]}}}"
        if self.family == "complete-bipartite":
            return f"K_{{{p[0]},{p[1]}}}"
        if self.family == "random-tree":
            return f"T{p[0]}[seed={self.seed}]"
        if self.family == "random-gnp":
            return f"G({p[0]},{p[1]})[seed={self.seed}]"
        return f"{self.family}{p}"


def path(n):
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty(n):
    if n < 1:
        raise GraphError(f"empty graph needs n >= 1, got {n}")
    return build_graph(n, [])


def star(t):
    """K_{1,t} with the center at vertex 0."""
    if t < 1:
        raise GraphError(f"star needs t >= 1 leaves, got {t}")
    return build_graph(t + 1, [(0, i) for i in range(1, t + 1)])


def complete_bipartite(s, t):
    if s < 1 or t < 1:
        raise GraphError(f"complete bipartite graph needs s, t >= 1, got {s}, {t}")
    return build_graph(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def random_tree(n, seed):
    """Uniform labelled tree on ``n`` vertices decoded from a random Prüfer sequence."""
    if n < 1:
        raise GraphError(f"tree needs n >= 1, got {n}")
    if n <= 2:
        return path(n)
    rng = random.Random(seed)
    code = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in code:
        degree[x] += 1
    edges = []
    for x in code:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [w for w in range(n) if degree[w] == 1]
    edges.append((u, v))
    return build_graph(n, edges)


def random_gnp(n, p, seed):
    if n < 1 or not 0.0 <= p <= 1.0:
        raise GraphError(f"G(n, p) needs n >= 1 and 0 <= p <= 1, got {n}, {p}")
    rng = random.Random(seed)
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def generate(spec):
    """Build the graph described by a :class:`FamilySpec`."""
    p = spec.params
    if spec.family == "path":
        return path(*p)
    if spec.family == "cycle":
        return cycle(*p)
    if spec.family == "complete":
        return complete(*p)
    if spec.family == "empty":
        return empty(*p)
    if spec.family == "star":
        if len(p) == 2 and p[0] != 1:
            raise GraphError(f"star parameters must be (1, t), got {p}")
        return star(p[-1])
    if spec.family == "complete-bipartite":
        return complete_bipartite(*p)
    if spec.family in ("random-tree", "random-gnp"):
        if spec.seed is None:
            raise GraphError(f"{spec.family} needs a seed")
        if spec.family == "random-tree":
            return random_tree(p[0], spec.seed)
        return random_gnp(p[0], p[1], spec.seed)
    raise GraphError(f"unknown family {spec.family!r}; expected one of {', '.join(FAMILIES)}")
