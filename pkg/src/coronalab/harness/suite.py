"""Suite configuration, instance families and the report builder."""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
import hashlib
import json
import re

from ..config import Caps
from ..errors import GraphError
from ..families import FamilySpec, generate
from .checks import CHECKS, CHECKS_BY_ID, Families, Instance, evaluate
from .solvers import Solvers

# Corona orders in the default families reach 40, beyond the library's
# conservative defaults for subset and partition searches.
HARNESS_CAPS = Caps(coloring=64, subset=48, partition=48, roman_enum=14)

DEFAULT_G = (
    "P2", "P3", "P4", "P5", "P6",
    "C3", "C4", "C5", "C6", "C7", "C8",
    "K2", "K3", "K4",
    "K1,3", "K2,3",
    "T5", "T6",
)
DEFAULT_H = ("K1", "K2", "K3", "P3", "C4", "N2")
DEFAULT_KS = (2, 3, 4)

_TOKEN = re.compile(r"^(?:([PCKNT])(\d+)|K_?\{?(\d+),(\d+)\}?)$")


def derived_seed(seed, label):
    """A 63-bit seed for the random family ``label``, fixed by the suite seed."""
    digest = hashlib.sha256(f"{seed}/{label}".encode()).digest()
    return int.from_bytes(digest[:8], "big") >> 1


def parse_family(token, seed):
    """Resolve a family token (P4, C6, K3, N2, K1,3, T5) to ``(name, graph)``.

    ``T<n>`` is a random tree on n vertices whose seed is derived from the
    suite seed, so the same suite seed always yields the same tree.
    """
    m = _TOKEN.match(token.strip())
    if not m:
        raise GraphError(f"unknown family token {token!r}; expected P<n>, C<n>, K<n>, N<n>, K<s>,<t> or T<n>")
    letter, size, s, t = m.groups()
    if letter is None:
        spec = FamilySpec("complete-bipartite", (int(s), int(t)))
        if int(s) == 1:
            spec = FamilySpec("star", (1, int(t)))
        return spec.name, generate(spec)
    n = int(size)
    family = {"P": "path", "C": "cycle", "K": "complete", "N": "empty", "T": "random-tree"}[letter]
    if family == "random-tree":
        spec = FamilySpec(family, (n,), derived_seed(seed, token))
    else:
        spec = FamilySpec(family, (n,))
    return spec.name, generate(spec)


@dataclass(frozen=True)
class SuiteConfig:
    """Everything that determines a suite run; equal configs give identical reports."""

    seed: int = 7
    caps: Caps = HARNESS_CAPS
    g_families: tuple = DEFAULT_G
    h_families: tuple = DEFAULT_H
    ks: tuple = DEFAULT_KS
    checks: tuple | None = None
    jobs: int = 1

    def families(self):
        return Families(
            tuple(parse_family(tok, self.seed) for tok in self.g_families),
            tuple(parse_family(tok, self.seed) for tok in self.h_families),
            tuple(self.ks),
        )

    def selected(self):
        if self.checks is None:
            return CHECKS
        unknown = [c for c in self.checks if c not in CHECKS_BY_ID]
        if unknown:
            raise ValueError(f"unknown check ids {unknown}; expected T1..T{len(CHECKS)}")
        return tuple(c for c in CHECKS if c.id in set(self.checks))


_WORKER = {}


def _work(job):
    check_id, inst, caps = job
    solvers = _WORKER.get(caps)
    if solvers is None:
        solvers = _WORKER[caps] = Solvers(caps)
    return evaluate(CHECKS_BY_ID[check_id], inst, solvers)


def check_instance(check_id, g, h=None, params=None, caps=HARNESS_CAPS, g_name="G", h_name="H"):
    """Evaluate a single check on one instance; returns an Outcome."""
    inst = Instance(g_name, g, h_name if h is not None else None, h, tuple(sorted((params or {}).items())))
    return evaluate(CHECKS_BY_ID[check_id], inst, Solvers(caps))


def run_suite(config=SuiteConfig()):
    """Run the selected checks and return the report as a JSON-ready dict."""
    fam = config.families()
    plan = [(check, check.instances(fam)) for check in config.selected()]
    jobs = [(check.id, inst, config.caps) for check, insts in plan for inst in insts]
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            outcomes = list(pool.map(_work, jobs, chunksize=8))
    else:
        solvers = Solvers(config.caps)
        outcomes = [evaluate(CHECKS_BY_ID[cid], inst, solvers) for cid, inst, _ in jobs]

    entries = []
    pos = 0
    for check, insts in plan:
        outs = outcomes[pos:pos + len(insts)]
        pos += len(insts)
        passed = sum(o.status == "pass" for o in outs)
        failed = sum(o.status == "fail" for o in outs)
        entries.append(
            {
                "id": check.id,
                "anchor": check.anchor,
                "kind": check.kind,
                "title": check.title,
                "instances": passed + failed,
                "pass": passed,
                "fail": failed,
                "skip": sum(o.status == "skip" for o in outs),
                "annotations": sum(o.annotations for o in outs),
                "vacuous": passed + failed == 0,
                "details": [o.to_json(inst) for o, inst in zip(outs, insts)],
            }
        )
    vacuous = [e["id"] for e in entries if e["vacuous"]]
    hard = sum(e["fail"] for e in entries)
    return {
        "suite": {
            "seed": config.seed,
            "caps": config.caps.to_dict(),
            "g_families": [name for name, _ in fam.g],
            "h_families": [name for name, _ in fam.h],
            "ks": list(fam.ks),
            "checks": [check.id for check, _ in plan],
        },
        "checks": entries,
        "summary": {
            "hard_failures": hard,
            "vacuous": vacuous,
            "annotations": sum(e["annotations"] for e in entries),
            "clean": hard == 0 and not vacuous,
        },
    }


def report_json(report):
    """Serialized report; the same report always gives the same bytes."""
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"
