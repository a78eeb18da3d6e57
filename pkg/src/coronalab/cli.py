"""Command-line front end: gen, corona, param, bounds and verify.

Exit codes: 0 success, 1 verify found a hard failure or a vacuous
check, 2 unreadable or malformed input (and unwritable output), 3 an
instance above a solver cap, 4 a violated precondition.
"""

import argparse
import json
import sys
import time

from . import coloring, domination
from .config import DEFAULT_CAPS
from .dimacs import format_dimacs, parse_dimacs
from .errors import GraphError, GraphFormatError, InapplicableError, PreconditionError, SizeLimitError
from .families import FAMILIES, FamilySpec, generate
from .graph import corona
from .harness import CHECKS, DEFAULT_G, DEFAULT_H, DEFAULT_KS, HARNESS_CAPS, SuiteConfig, report_json, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP, EXIT_PRECONDITION = 0, 1, 2, 3, 4

PARAM_TAGS = (
    "chi", "chi_k", "gamma", "gamma_c", "gamma_k", "gamma_dist_k", "i", "beta0",
    "gamma_R", "dim", "gamma_ld", "gamma_l_d", "domatic", "idomatic",
)
NEEDS_K = {"chi_k", "gamma_k", "gamma_dist_k"}


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _read_graph(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_INPUT) from exc
    try:
        return parse_dimacs(text)
    except GraphFormatError as exc:
        raise CliError(f"{path}: {exc}", EXIT_INPUT) from exc


def _write_text(path, text):
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc.strerror}", EXIT_INPUT) from exc


def _caps(args, base):
    return base.with_overrides(
        coloring=args.cap_coloring,
        subset=args.cap_subset,
        partition=args.cap_partition,
        roman_enum=args.cap_roman_enum,
    )


def _parse_number(text):
    try:
        return int(text)
    except ValueError:
        return float(text)


def compute_param(g, tag, k=None, caps=DEFAULT_CAPS):
    """The JSON result of parameter ``tag`` on ``g``; exactly the library's value."""
    if tag in NEEDS_K and k is None:
        raise PreconditionError(f"parameter {tag} needs --k")
    sub, part = caps.subset, caps.partition
    if tag == "chi":
        return coloring.chromatic_number(g, cap=caps.coloring).to_json()
    if tag == "chi_k":
        return coloring.distance_k_chromatic(g, k, cap=caps.coloring).to_json()
    if tag == "gamma_R":
        with_b2max = g.n <= caps.roman_enum
        res, b2max = domination.roman_domination(g, sub, caps.roman_enum, with_b2max=with_b2max)
        out = res.to_json()
        out["b2max"] = b2max
        return out
    if tag == "idomatic":
        res = domination.idomatic_number(g, part)
        if res is None:
            return {"parameter": "idomatic", "value": None, "partition": None}
        return res.to_json()
    solvers = {
        "gamma": lambda: domination.domination_number(g, sub),
        "gamma_c": lambda: domination.connected_domination_number(g, sub),
        "gamma_k": lambda: domination.k_domination_number(g, k, sub),
        "gamma_dist_k": lambda: domination.distance_k_domination_number(g, k, sub),
        "i": lambda: domination.independent_domination_number(g, sub),
        "beta0": lambda: domination.independence_number(g, sub),
        "dim": lambda: domination.metric_dimension(g, sub),
        "gamma_ld": lambda: domination.resolving_domination_number(g, sub),
        "gamma_l_d": lambda: domination.locating_domination_number(g, sub),
        "domatic": lambda: domination.domatic_number(g, part),
    }
    return solvers[tag]().to_json()


def cmd_gen(args):
    params = tuple(_parse_number(p) for p in args.params)
    try:
        g = generate(FamilySpec(args.family, params, args.seed))
    except (GraphError, TypeError) as exc:
        raise CliError(f"cannot generate {args.family}{list(params)}: {exc}", EXIT_PRECONDITION) from exc
    text = format_dimacs(g, comment=FamilySpec(args.family, params, args.seed).name)
    if args.out:
        _write_text(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_corona(args):
    g = _read_graph(args.g)
    h = _read_graph(args.h)
    if g.n < 1:
        raise CliError("G must have at least one vertex", EXIT_PRECONDITION)
    cg, lab = corona(g, h)
    _write_text(args.out, format_dimacs(cg, comment=f"corona of {args.g} and {args.h}"))
    sidecar = args.labels or args.out + ".labels.json"
    _write_text(sidecar, json.dumps(lab.to_json(), indent=2) + "\n")
    return EXIT_OK


def cmd_param(args):
    g = _read_graph(args.input)
    result = compute_param(g, args.tag, args.k, _caps(args, DEFAULT_CAPS))
    if args.format == "text":
        print(f"{args.tag} = {result['value']}")
    else:
        print(json.dumps(result))
    return EXIT_OK


def cmd_bounds(args):
    g = _read_graph(args.g)
    h = _read_graph(args.h)
    caps = _caps(args, DEFAULT_CAPS)
    b = coloring.corona_dist_bounds(g, h, args.k, cap=caps.coloring)
    out = {"k": args.k, "lower": b.lower, "upper": b.upper, "reasons": b.reasons}
    if args.exact:
        cg, _ = corona(g, h)
        out["exact"] = coloring.distance_k_chromatic(cg, args.k, cap=caps.coloring).value
    if args.format == "text":
        print(f"{b.lower} <= chi_{args.k} <= {b.upper}" + (f" (exact {out['exact']})" if args.exact else ""))
    else:
        print(json.dumps(out))
    return EXIT_OK


def cmd_verify(args):
    checks = tuple(args.check) if args.check else None
    if args.suite != "all" and checks is None:
        checks = tuple(args.suite.split(","))
    config = SuiteConfig(
        seed=args.seed,
        caps=_caps(args, HARNESS_CAPS),
        g_families=tuple(args.g) if args.g else DEFAULT_G,
        h_families=tuple(args.h) if args.h else DEFAULT_H,
        ks=tuple(args.k) if args.k else DEFAULT_KS,
        checks=checks,
        jobs=args.jobs,
    )
    try:
        # fail early on an unwritable path rather than after the run
        with open(args.out, "a", encoding="utf-8"):
            pass
    except OSError as exc:
        raise CliError(f"cannot write {args.out}: {exc.strerror}", EXIT_INPUT) from exc
    try:
        config.families()
        config.selected()
    except (GraphError, ValueError) as exc:
        raise CliError(str(exc), EXIT_INPUT) from exc
    start = time.perf_counter()
    report = run_suite(config)
    elapsed = time.perf_counter() - start
    _write_text(args.out, report_json(report))
    s = report["summary"]
    print(
        f"{len(report['checks'])} checks, {s['hard_failures']} hard failures, "
        f"{len(s['vacuous'])} vacuous, {s['annotations']} annotations; "
        f"{elapsed:.1f} s; report in {args.out}",
        file=sys.stderr,
    )
    return EXIT_OK if s["clean"] else EXIT_FAIL


def _add_caps(p):
    p.add_argument("--cap-coloring", type=int, help="vertex cap for chromatic solves")
    p.add_argument("--cap-subset", type=int, help="vertex cap for subset-search solvers")
    p.add_argument("--cap-partition", type=int, help="vertex cap for domatic/idomatic solvers")
    p.add_argument("--cap-roman-enum", type=int, help="vertex cap for enumerating optimal Roman functions")


def build_parser():
    parser = argparse.ArgumentParser(prog="coronalab", description="Exact graph parameters of corona products.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a graph of a named family in DIMACS format")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("params", nargs="+", help="family size parameters, e.g. 4 for P4 or 3 4 for K_{3,4}")
    p.add_argument("--seed", type=int, help="seed for the random families")
    p.add_argument("--out", help="output path (default: standard output)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("corona", help="build G ⊙ H and a JSON vertex labeling")
    p.add_argument("--g", required=True, help="DIMACS file of G")
    p.add_argument("--h", required=True, help="DIMACS file of H")
    p.add_argument("--out", required=True, help="DIMACS output path")
    p.add_argument("--labels", help="labeling sidecar path (default: OUT.labels.json)")
    p.set_defaults(func=cmd_corona)

    p = sub.add_parser("param", help="compute one exact parameter with a witness")
    p.add_argument("--in", dest="input", required=True, help="DIMACS input file")
    p.add_argument("--tag", required=True, choices=PARAM_TAGS)
    p.add_argument("--k", type=int, help="distance or multiplicity for chi_k, gamma_k, gamma_dist_k")
    p.add_argument("--format", choices=("json", "text"), default="json")
    _add_caps(p)
    p.set_defaults(func=cmd_param)

    p = sub.add_parser("bounds", help="distance-k chromatic bounds of G ⊙ H for k in {2, 3}")
    p.add_argument("--g", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--k", type=int, choices=(2, 3), required=True)
    p.add_argument("--exact", action="store_true", help="also compute the exact value")
    p.add_argument("--format", choices=("json", "text"), default="json")
    _add_caps(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="run the theorem checks and write a JSON report")
    p.add_argument("--suite", default="all", help="'all' or a comma-separated list of check ids")
    p.add_argument("--check", action="append", choices=[c.id for c in CHECKS], help="run only this check (repeatable)")
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--out", default="report.json")
    p.add_argument("--jobs", type=int, default=1, help="at most this many concurrent instance checks")
    p.add_argument("--g", action="append", help="G family token such as P4, C6, K3, K1,3, T5 (repeatable)")
    p.add_argument("--h", action="append", help="H family token (repeatable)")
    p.add_argument("--k", type=int, action="append", help="distance parameter k (repeatable)")
    _add_caps(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (PreconditionError, InapplicableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
