"""DIMACS ``p edge`` text format with 1-based vertex ids."""

from .errors import GraphError, GraphFormatError
from .graph import build_graph


def parse_dimacs(text):
    n = m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphFormatError("second problem line", lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise GraphFormatError(f"expected 'p edge <n> <m>', got {line!r}", lineno)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphFormatError(f"non-integer size in {line!r}", lineno) from None
            if n < 0 or m < 0:
                raise GraphFormatError("negative size", lineno)
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError("edge line before the problem line", lineno)
            if len(parts) != 3:
                raise GraphFormatError(f"expected 'e <u> <v>', got {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError(f"non-integer vertex in {line!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"vertex id outside 1..{n} in {line!r}", lineno)
            if u == v:
                raise GraphFormatError(f"self-loop in {line!r}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(f"unknown line type {parts[0]!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'p edge' problem line")
    if len(edges) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(edges)}")
    try:
        return build_graph(n, edges)
    except GraphError as exc:
        raise GraphFormatError(str(exc)) from exc


def read_dimacs(path):
    with open(path, encoding="utf-8") as fh:
        return parse_dimacs(fh.read())


def format_dimacs(g, comment=None):
    edges = g.edges()
    lines = []
    if comment:
        lines.extend(f"c {c}" for c in comment.splitlines())
    lines.append(f"p edge {g.n} {len(edges)}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    return "\n".join(lines) + "\n"


def write_dimacs(g, path, comment=None):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_dimacs(g, comment))
