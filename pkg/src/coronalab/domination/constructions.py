"""Explicit optimal witnesses on corona products built from factor witnesses.

Each builder assembles a set, Roman function or partition of G ⊙ H from
exact solutions on G and H, checks it with the naive predicates, and
checks its size against the closed-form value. A mismatch raises
:class:`ConstructionError`, since it would mean a bug.
"""

from dataclasses import dataclass

from ..coloring import chromatic_number
from ..errors import ConstructionError, InapplicableError
from ..graph import bits_to_tuple, corona
from . import predicates
from .basic import (
    distance_k_domination_number,
    domination_number,
    independence_number,
    independent_domination_number,
    k_domination_number,
)
from .location import ld_case_classify
from .partitions import domatic_number, idomatic_number, independent_partition_exists
from .results import RomanAssignment
from .roman import minimum_roman_assignments

KINDS = ("roman-k1", "k-dom", "dist-k-dom", "indep-dom", "ld", "domatic", "idomatic")


@dataclass(frozen=True)
class CoronaWitness:
    """A verified witness on G ⊙ H; ``value`` is its size, weight or class count."""

    kind: str
    value: int
    witness: object
    k: int | None = None


def _lift_all(lab, sets_per_copy):
    out = []
    for i, hset in enumerate(sets_per_copy):
        out.extend(lab.copy_vertex(i, j) for j in hset)
    return out


def _roman_k1(g, h, cg, lab):
    if h.n != 1:
        raise InapplicableError("roman-k1 needs H = K1")
    optima = minimum_roman_assignments(g)
    best = max(optima, key=lambda a: (a.b2, tuple(-x for x in a.values)))
    values = [0] * cg.n
    for i in range(g.n):
        values[i] = best.values[i]
        values[lab.copy_vertex(i, 0)] = 0 if best.values[i] == 2 else 1
    f = RomanAssignment(tuple(values))
    if not predicates.is_roman(cg, f.values):
        raise ConstructionError("roman-k1: assignment fails the Roman condition")
    expected = best.weight + g.n - best.b2
    return f, f.weight, expected


def _k_dom(g, h, cg, lab, k):
    if k is None or k < 2:
        raise InapplicableError("k-dom needs k >= 2")
    if h.n < k:
        raise InapplicableError(f"k-dom needs n2 >= k (n2={h.n}, k={k}): a center must see k copy vertices")
    gk = k_domination_number(h, k)
    gk1 = k_domination_number(h, k - 1)
    if gk.value <= gk1.value + 1:
        chosen = _lift_all(lab, [gk.witness] * g.n)
    else:
        chosen = list(range(g.n)) + _lift_all(lab, [gk1.witness] * g.n)
    s = tuple(sorted(chosen))
    if not predicates.is_k_dominating(cg, s, k):
        raise ConstructionError(f"k-dom: set is not {k}-dominating")
    return s, len(s), g.n * min(gk.value, gk1.value + 1)


def _dist_k_dom(g, h, cg, lab, k):
    if k is None or k < 2:
        raise InapplicableError("dist-k-dom needs k >= 2")
    if not g.is_connected():
        raise InapplicableError("dist-k-dom needs a connected G")
    base = distance_k_domination_number(g, k - 1)
    s = tuple(lab.center(v) for v in base.witness)
    if not predicates.is_distance_k_dominating(cg, s, k):
        raise ConstructionError(f"dist-k-dom: set is not distance-{k} dominating")
    return s, len(s), base.value


def _indep_dom(g, h, cg, lab):
    a = independence_number(g)
    ih = independent_domination_number(h)
    in_a = set(a.witness)
    chosen = [lab.center(v) for v in a.witness]
    chosen += _lift_all(lab, [() if i in in_a else ih.witness for i in range(g.n)])
    s = tuple(sorted(chosen))
    if not (predicates.is_dominating(cg, s) and predicates.is_independent_set(cg, s)):
        raise ConstructionError("indep-dom: set is not independent dominating")
    return s, len(s), g.n * ih.value - a.value * (ih.value - 1)


def _ld(g, h, cg, lab):
    case = ld_case_classify(h)
    if case.case == "I":
        chosen = _lift_all(lab, [case.evidence] * g.n)
        expected = g.n * case.value
    else:
        b = min(case.evidence)
        d = domination_number(g)
        chosen = [lab.center(v) for v in d.witness] + _lift_all(lab, [b] * g.n)
        expected = g.n * case.value + d.value
    s = tuple(sorted(chosen))
    if not predicates.is_locating_dominating(cg, s):
        raise ConstructionError(f"ld: case {case.case} set is not locating-dominating")
    return s, len(s), expected


def _domatic(g, h, cg, lab):
    dh = domatic_number(h)
    parts = [tuple(sorted(_lift_all(lab, [cls] * g.n))) for cls in dh.witness]
    parts.append(tuple(range(g.n)))
    parts = tuple(parts)
    if not predicates.is_domatic_partition(cg, parts):
        raise ConstructionError("domatic: classes are not all dominating")
    return parts, len(parts), dh.value + 1


def _idomatic(g, h, cg, lab):
    dh = idomatic_number(h)
    if dh is None:
        raise InapplicableError("idomatic needs an idomatic H")
    t = dh.value + 1
    if not independent_partition_exists(g, t):
        raise InapplicableError(f"idomatic needs chi(G) <= d_i(H) + 1 = {t}")
    color = chromatic_number(g).witness.colors
    classes = [[] for _ in range(t)]
    for v in range(g.n):
        classes[color[v]].append(lab.center(v))
        others = [c for c in range(t) if c != color[v]]
        for b, target in zip(dh.witness, others):
            classes[target].extend(lab.copy_vertex(v, j) for j in b)
    parts = tuple(tuple(sorted(c)) for c in classes)
    if not predicates.is_idomatic_partition(cg, parts):
        raise ConstructionError("idomatic: classes are not all independent dominating")
    return parts, len(parts), t


def construct_corona_witness(kind, g, h, k=None):
    """Build and verify the witness of ``kind`` on G ⊙ H."""
    if kind not in KINDS:
        raise InapplicableError(f"unknown construction {kind!r}; expected one of {', '.join(KINDS)}")
    cg, lab = corona(g, h)
    if kind == "roman-k1":
        witness, value, expected = _roman_k1(g, h, cg, lab)
    elif kind == "k-dom":
        witness, value, expected = _k_dom(g, h, cg, lab, k)
    elif kind == "dist-k-dom":
        witness, value, expected = _dist_k_dom(g, h, cg, lab, k)
    elif kind == "indep-dom":
        witness, value, expected = _indep_dom(g, h, cg, lab)
    elif kind == "ld":
        witness, value, expected = _ld(g, h, cg, lab)
    elif kind == "domatic":
        witness, value, expected = _domatic(g, h, cg, lab)
    else:
        witness, value, expected = _idomatic(g, h, cg, lab)
    if value != expected:
        raise ConstructionError(f"{kind}: witness size {value} differs from the closed form {expected}")
    return CoronaWitness(kind, value, witness, k)
