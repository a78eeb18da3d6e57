"""Result containers for the domination-type solvers."""

from dataclasses import dataclass

from ..graph import bits_to_tuple


@dataclass(frozen=True)
class RomanAssignment:
    """A map V -> {0, 1, 2} stored as a tuple indexed by vertex id."""

    values: tuple

    @property
    def weight(self):
        return sum(self.values)

    @property
    def b0(self):
        return self.values.count(0)

    @property
    def b1(self):
        return self.values.count(1)

    @property
    def b2(self):
        return self.values.count(2)

    def classes(self):
        """The vertex classes (B0, B1, B2) as sorted tuples."""
        return tuple(tuple(v for v, x in enumerate(self.values) if x == c) for c in (0, 1, 2))

    @classmethod
    def from_twos(cls, g, twos):
        """Minimal assignment with 2 on ``twos`` and 1 on every vertex they leave uncovered."""
        covered = set()
        for w in twos:
            covered.update(bits_to_tuple(g.closed(w)))
        values = [2 if v in twos else (0 if v in covered else 1) for v in range(g.n)]
        return cls(tuple(values))


@dataclass(frozen=True)
class DominationResult:
    """An exact parameter value and a witness certifying it.

    ``witness`` is a sorted vertex tuple for set parameters, a
    :class:`RomanAssignment` for ``gamma_R``, or a tuple of sorted vertex
    tuples for the partition parameters ``domatic`` and ``idomatic``.
    ``certified`` is true when the search ran to exhaustion.
    """

    parameter: str
    value: int
    witness: object
    certified: bool = True
    nodes: int = 0
    k: int | None = None

    def to_json(self):
        out = {"parameter": self.parameter, "value": self.value}
        if self.k is not None:
            out["k"] = self.k
        if isinstance(self.witness, RomanAssignment):
            out["assignment"] = list(self.witness.values)
        elif self.parameter in ("domatic", "idomatic"):
            out["partition"] = [list(part) for part in self.witness]
        else:
            out["set"] = list(self.witness)
        out["certified"] = self.certified
        out["nodes"] = self.nodes
        return out


@dataclass(frozen=True)
class LdCase:
    """Which structural case a graph falls in for locating-dominating sets.

    Case ``"I"``: ``evidence`` is a minimum locating-dominating set A whose
    outside vertices all see a proper subset of A. Case ``"II"``:
    ``evidence`` maps each minimum set B (a tuple) to an outside vertex
    adjacent to all of B.
    """

    case: str
    value: int
    evidence: object

    def to_json(self):
        if self.case == "I":
            ev = list(self.evidence)
        else:
            ev = [{"set": list(b), "vertex": u} for b, u in self.evidence.items()]
        return {"case": self.case, "value": self.value, "evidence": ev}
