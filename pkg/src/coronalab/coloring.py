"""Exact (distance-k) chromatic numbers and corona coloring results.

The solver is a DSATUR branch and bound seeded with an exact maximum
clique. Distance-k coloring is proper coloring of the k-th power, so a
single solver certifies every chromatic value in the package.
"""

from dataclasses import dataclass, field
import random

import numpy as np
from scipy.optimize import linprog

from .cliques import complement_adj, max_clique, max_weight_clique
from .config import DEFAULT_CAPS, check_cap
from .errors import ConstructionError, InapplicableError, MalformedWitnessError
from .graph import INF, ball_mask, bits_to_tuple, corona, girth, iter_bits, power


@dataclass(frozen=True)
class ColorAssignment:
    colors: tuple
    palette_size: int

    @classmethod
    def from_colors(cls, colors):
        colors = tuple(colors)
        return cls(colors, max(colors, default=-1) + 1)

    def canonical(self):
        """Relabel colors in first-use order over increasing vertex ids."""
        relabel = {}
        out = []
        for c in self.colors:
            if c not in relabel:
                relabel[c] = len(relabel)
            out.append(relabel[c])
        return ColorAssignment(tuple(out), len(relabel))

    @property
    def used(self):
        return len(set(self.colors))


@dataclass(frozen=True)
class ChromaticResult:
    value: int
    witness: ColorAssignment
    k: int = 1
    nodes: int = 0

    def to_json(self):
        return {
            "parameter": "chi" if self.k == 1 else "chi_k",
            "k": self.k,
            "value": self.value,
            "colors": list(self.witness.colors),
            "nodes": self.nodes,
        }


@dataclass(frozen=True)
class BoundPair:
    """Lower and upper bound; a bound is ``None`` when its hypothesis fails."""

    lower: int | None
    upper: int | None
    reasons: dict = field(default_factory=dict)

    @property
    def lower_applicable(self):
        return self.lower is not None

    @property
    def upper_applicable(self):
        return self.upper is not None

    def contains(self, value):
        return (self.lower is None or self.lower <= value) and (self.upper is None or value <= self.upper)


TABU_ITERATIONS = 20000


def dsatur_greedy(adj):
    """One DSATUR pass: highest saturation, then highest degree, then lowest id."""
    n = len(adj)
    colors = [-1] * n
    seen = [0] * n
    uncolored = (1 << n) - 1
    while uncolored:
        v = max(iter_bits(uncolored), key=lambda u: (seen[u].bit_count(), (adj[u] & uncolored).bit_count(), -u))
        c = 0
        while seen[v] >> c & 1:
            c += 1
        colors[v] = c
        uncolored &= ~(1 << v)
        for w in iter_bits(adj[v]):
            seen[w] |= 1 << c
    return colors


def _tabucol(adj, k, start, rng, max_iter):
    """Tabu search for a proper k-coloring, starting from ``start`` (colors >= k are redrawn)."""
    n = len(adj)
    nbrs = [bits_to_tuple(adj[v]) for v in range(n)]
    col = [c if c < k else rng.randrange(k) for c in start]
    gamma = [[0] * k for _ in range(n)]
    for v in range(n):
        for u in nbrs[v]:
            gamma[v][col[u]] += 1
    conflicts = sum(gamma[v][col[v]] for v in range(n)) // 2
    best_seen = conflicts
    tabu = [[0] * k for _ in range(n)]
    for it in range(max_iter):
        if conflicts == 0:
            return col
        hot = [v for v in range(n) if gamma[v][col[v]]]
        best_delta = None
        moves = []
        for v in hot:
            row = gamma[v]
            here = row[col[v]]
            for c in range(k):
                if c == col[v]:
                    continue
                delta = row[c] - here
                if tabu[v][c] > it and conflicts + delta >= best_seen:
                    continue
                if best_delta is None or delta < best_delta:
                    best_delta = delta
                    moves = [(v, c)]
                elif delta == best_delta:
                    moves.append((v, c))
        if not moves:
            v = rng.choice(hot)
            c = rng.choice([c for c in range(k) if c != col[v]])
            best_delta = gamma[v][c] - gamma[v][col[v]]
        else:
            v, c = rng.choice(moves)
        old = col[v]
        col[v] = c
        for u in nbrs[v]:
            gamma[u][old] -= 1
            gamma[u][c] += 1
        conflicts += best_delta
        best_seen = min(best_seen, conflicts)
        tabu[v][old] = it + int(0.6 * len(hot)) + rng.randrange(10)
    return col if conflicts == 0 else None


def _maximal_independent(adj, mask, n):
    """Extend an independent vertex mask greedily to a maximal one."""
    blocked = mask
    for v in iter_bits(mask):
        blocked |= adj[v]
    for v in range(n):
        if not blocked >> v & 1:
            mask |= 1 << v
            blocked |= adj[v] | (1 << v)
    return mask


def fractional_lower_bound(adj, columns, target, max_rounds=300):
    """Certified lower bound on the chromatic number from the fractional relaxation.

    Column generation over independent sets. Each round rescales the LP
    duals to integers and prices them with an exact maximum-weight
    independent set, so ``ceil(sum(w) / W)`` is a rigorous bound no matter
    how inexact the LP solve was. Stops once the bound reaches ``target``.
    """
    n = len(adj)
    comp = complement_adj(adj)
    cols = list(dict.fromkeys(_maximal_independent(adj, c, n) for c in columns if c))
    best = 0
    scale = 10**6
    for _ in range(max_rounds):
        a = np.zeros((n, len(cols)))
        for j, c in enumerate(cols):
            for v in iter_bits(c):
                a[v, j] = 1.0
        res = linprog(np.ones(len(cols)), A_ub=-a, b_ub=-np.ones(n), bounds=(0, None), method="highs")
        if res.status != 0:
            break
        y = np.maximum(-res.ineqlin.marginals, 0.0)
        w = [int(x) for x in np.floor(y * scale)]
        mask, heaviest = max_weight_clique(comp, w)
        if heaviest > 0:
            best = max(best, -(-sum(w) // heaviest))
        if best >= target or heaviest <= scale:
            break
        cols.append(_maximal_independent(adj, mask, n))
    return best


def _exact_coloring(adj):
    n = len(adj)
    if n == 0:
        return 0, [], 0
    clique = bits_to_tuple(max_clique(adj))
    alpha = max_clique(complement_adj(adj)).bit_count()
    # each color class is independent, so at least ceil(n / alpha) classes
    lower = max(len(clique), -(-n // alpha))
    greedy = dsatur_greedy(adj)
    best = {"k": max(greedy) + 1, "colors": greedy}
    stats = {"nodes": 0}
    if best["k"] == lower:
        return lower, greedy, 0

    rng = random.Random(0x5EED)
    for k in range(best["k"] - 1, lower - 1, -1):
        found = _tabucol(adj, k, best["colors"], rng, TABU_ITERATIONS)
        if found is None:
            break
        best["k"], best["colors"] = k, found
    if best["k"] == lower:
        return lower, best["colors"], 0

    classes = {}
    for v, c in enumerate(best["colors"]):
        classes[c] = classes.get(c, 0) | (1 << v)
    lower = max(lower, fractional_lower_bound(adj, list(classes.values()), best["k"]))
    if best["k"] == lower:
        return lower, best["colors"], 0

    colors = [-1] * n
    seen = [0] * n
    uncolored = (1 << n) - 1

    def assign(v, c, uncol):
        colors[v] = c
        bit = 1 << c
        changed = []
        for w in iter_bits(adj[v] & uncol):
            if not seen[w] & bit:
                seen[w] |= bit
                changed.append(w)
        return changed

    def unassign(v, c, changed):
        colors[v] = -1
        bit = 1 << c
        for w in changed:
            seen[w] &= ~bit

    # clique vertices take distinct colors up front; breaks palette symmetry
    for c, v in enumerate(clique):
        uncolored &= ~(1 << v)
        assign(v, c, uncolored)

    def search(used, uncol):
        stats["nodes"] += 1
        if not uncol:
            best["k"] = used
            best["colors"] = colors[:]
            return best["k"] == lower
        v = max(iter_bits(uncol), key=lambda u: (seen[u].bit_count(), (adj[u] & uncol).bit_count(), -u))
        rest = uncol & ~(1 << v)
        for c in range(used):
            if seen[v] >> c & 1:
                continue
            changed = assign(v, c, rest)
            done = search(used, rest)
            unassign(v, c, changed)
            if done:
                return True
        if used + 1 < best["k"]:
            changed = assign(v, used, rest)
            done = search(used + 1, rest)
            unassign(v, used, changed)
            if done:
                return True
        return False

    search(len(clique), uncolored)
    return best["k"], best["colors"], stats["nodes"]


def chromatic_number(g, cap=None):
    """Exact chromatic number with a canonical witness coloring."""
    check_cap("chromatic_number", g.n, DEFAULT_CAPS.coloring if cap is None else cap)
    value, colors, nodes = _exact_coloring(g.adj)
    witness = ColorAssignment.from_colors(colors).canonical()
    return ChromaticResult(value, witness, 1, nodes)


def distance_k_chromatic(g, k, cap=None):
    """Exact distance-k chromatic number, solved on the k-th power of ``g``."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    res = chromatic_number(power(g, k), cap=cap)
    if not validate_coloring(g, k, res.witness):
        raise ConstructionError("solver returned an invalid distance-k coloring")
    return ChromaticResult(res.value, res.witness, k, res.nodes)


def validate_coloring(g, k, assignment):
    """True iff every two vertices at distance 1..k receive distinct colors."""
    colors = assignment.colors if isinstance(assignment, ColorAssignment) else tuple(assignment)
    if len(colors) != g.n or any(c is None or c < 0 for c in colors):
        raise MalformedWitnessError(f"coloring covers {len(colors)} entries for {g.n} vertices")
    for v in range(g.n):
        reach = ball_mask(g, v, k) & ~(1 << v)
        for u in iter_bits(reach >> (v + 1) << (v + 1)):
            if colors[u] == colors[v]:
                return False
    return True


def construct_corona_coloring(g, h, k, cap=None):
    """Explicit distance-k coloring of the corona for k in {1, 2, 3}.

    k=1 uses max{chi(G), chi(H)+1} colors, k=2 at most chi_2(G)+n2, and
    k=3 at most chi_3(G)+n2*(Delta(G)+1). The result is validated before
    it is returned.
    """
    if k not in (1, 2, 3):
        raise InapplicableError(f"constructive corona colorings exist for k in 1..3, got {k}")
    cg, lab = corona(g, h)
    n1, n2 = g.n, h.n
    colors = [0] * cg.n
    if k == 1:
        cg_col = chromatic_number(g, cap=cap).witness.colors
        ch = chromatic_number(h, cap=cap).witness.colors
        for i in range(n1):
            colors[i] = cg_col[i]
            for j in range(n2):
                c = ch[j]
                # skip the center's color
                colors[lab.copy_vertex(i, j)] = c if c < cg_col[i] else c + 1
    elif k == 2:
        base = distance_k_chromatic(g, 2, cap=cap)
        for i in range(n1):
            colors[i] = base.witness.colors[i]
        for i in range(n1):
            blocked = {colors[u] for u in iter_bits(g.closed(i))}
            free = (c for c in range(base.value + n2) if c not in blocked)
            for j in range(n2):
                colors[lab.copy_vertex(i, j)] = next(free)
    else:
        base = distance_k_chromatic(g, 3, cap=cap)
        proper = chromatic_number(g, cap=cap).witness.colors
        for i in range(n1):
            colors[i] = base.witness.colors[i]
            for j in range(n2):
                # copies of adjacent centers get disjoint palettes
                colors[lab.copy_vertex(i, j)] = base.value + n2 * proper[i] + j
    witness = ColorAssignment.from_colors(colors).canonical()
    if not validate_coloring(cg, k, witness):
        raise ConstructionError(f"corona coloring for k={k} failed validation")
    return witness


def delta_ij(t):
    """Maximum of deg(u) + deg(v) over the edges uv of ``t``."""
    deg = t.degrees()
    edges = t.edges()
    if not edges:
        raise InapplicableError("delta_ij needs at least one edge")
    return max(deg[u] + deg[v] for u, v in edges)


def _is_tree(g):
    return g.n >= 1 and g.m == g.n - 1 and g.is_connected()


def corona_chromatic_formula(case, *, n2, n1=None, k=None, tree=None):
    """Closed-form distance-k chromatic numbers of particular coronas.

    Cases: ``chi2-path`` (P_{n1}, n1 >= 3), ``chi2-cycle3t`` (C_{n1} with
    3 | n1), ``chi2-tree`` and ``chi3-tree`` (``tree`` is the graph),
    ``chik-path`` (P_{n1}, 2 <= k <= n1).
    """
    if n2 < 0:
        raise InapplicableError(f"n2 must be >= 0, got {n2}")
    if case == "chi2-path":
        if n1 is None or n1 < 3:
            raise InapplicableError(f"chi2-path needs n1 >= 3, got {n1}")
        return n2 + 3
    if case == "chi2-cycle3t":
        if n1 is None or n1 < 3 or n1 % 3:
            raise InapplicableError(f"chi2-cycle3t needs a cycle length divisible by 3, got {n1}")
        return n2 + 3
    if case in ("chi2-tree", "chi3-tree"):
        if tree is None or not _is_tree(tree):
            raise InapplicableError(f"{case} needs a tree")
        if case == "chi2-tree":
            return n2 + tree.max_degree + 1
        if tree.n < 2:
            raise InapplicableError("chi3-tree needs a tree with an edge")
        return 2 * n2 + delta_ij(tree)
    if case == "chik-path":
        if n1 is None or n1 < 2:
            raise InapplicableError(f"chik-path needs n1 >= 2, got {n1}")
        if k is None or not 2 <= k <= n1:
            raise InapplicableError(f"chik-path needs 2 <= k <= n1, got k={k}, n1={n1}")
        if k <= n1 - 1:
            return n2 * (k - 1) + k + 1
        return n2 * (k - 1) + k
    raise InapplicableError(f"unknown formula case {case!r}")


def corona_dist_bounds(g, h, k, cap=None):
    """Bounds on chi_k of the corona for k in {2, 3}."""
    n2 = h.n
    big, small = g.max_degree, g.min_degree
    reasons = {}
    if k == 2:
        lower = big + n2 + 1
        upper = distance_k_chromatic(g, 2, cap=cap).value + n2
    elif k == 3:
        upper = distance_k_chromatic(g, 3, cap=cap).value + n2 * (big + 1)
        if g.m == 0:
            lower = None
            reasons["lower"] = "G has no edge"
        elif girth(g) == 3:
            lower = None
            reasons["lower"] = "G has a triangle"
        else:
            lower = 2 * n2 + big + small
    else:
        raise InapplicableError(f"corona distance bounds exist for k in {{2, 3}}, got {k}")
    return BoundPair(lower, upper, reasons)


def appendix_ball_bound(deg_v, delta, t):
    """Lower bound on |M_t[v]| when the girth is at least 2t+1."""
    if t < 1 or delta < 1:
        raise InapplicableError(f"ball bound needs t >= 1 and delta >= 1, got t={t}, delta={delta}")
    return 1 + deg_v * sum((delta - 1) ** i for i in range(t))


def appendix_edge_ball_bound(delta, t):
    """Lower bound on |M_t[u] | M_t[v]| over an edge uv when the girth is at least 2t+2."""
    if t < 1:
        raise InapplicableError(f"edge-ball bound needs t >= 1, got {t}")
    if t % 2 == 0:
        return 2 + 2 * delta * sum((delta - 1) ** (2 * i - 1) for i in range(1, t // 2 + 1))
    return 2 * delta * sum((delta - 1) ** (2 * i) for i in range((t - 1) // 2 + 1))


def girth_chromatic_lower_bound(g, k):
    """Girth-based lower bound on chi_k(g), or ``None`` when girth < k+1."""
    if k < 2:
        raise InapplicableError(f"girth bound needs k >= 2, got {k}")
    if girth(g) < k + 1:
        return None
    big, small = g.max_degree, g.min_degree
    if k % 2 == 0:
        return 1 + big * sum((small - 1) ** i for i in range(k // 2))
    if g.m == 0:
        # the odd case grows a ball around an edge
        return None
    return appendix_edge_ball_bound(small, (k - 1) // 2)


__all__ = [
    "BoundPair",
    "ChromaticResult",
    "ColorAssignment",
    "INF",
    "appendix_ball_bound",
    "appendix_edge_ball_bound",
    "chromatic_number",
    "construct_corona_coloring",
    "corona_chromatic_formula",
    "corona_dist_bounds",
    "delta_ij",
    "distance_k_chromatic",
    "dsatur_greedy",
    "fractional_lower_bound",
    "girth_chromatic_lower_bound",
    "validate_coloring",
]
