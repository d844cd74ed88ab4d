"""Batch experiment runner: sweeps, advice-size accounting, CSV export.

A sweep config names schemes, tree sources (generator specs or tree-file
globs), and a time rule; every (tree, scheme) pairing either yields a
verified result row or a skip with its reason.  Rows sort canonically so
identical configs reproduce identical CSVs apart from the wall-time
column, which is measurement, not identity.
"""

from __future__ import annotations

import csv
import glob as globlib
import hashlib
import io as iolib
import json
import math
import time
from dataclasses import dataclass

from . import generators
from .io import load_tree
from .oracles import feasible_at, xi
from .schemes import ALL_SCHEMES, AdviceScheme, run_scheme
from .tree import PortTree, canonical_code, centre


CSV_HEADER = ["tree", "n", "diam", "tau", "scheme", "success", "leader", "advice_bits", "xi", "ms"]


def tree_id(tree: PortTree) -> str:
    """Canonical-code hash: re-labelled duplicates collapse in reports."""
    code = canonical_code(tree)
    blob = repr((code.phi, code.psi)).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


@dataclass(frozen=True)
class ResultRow:
    tree: str
    n: int
    diam: int
    tau: int
    scheme: str
    success: bool
    leader: int | None
    advice_bits: int
    xi: int | None
    ms: int

    def as_csv(self) -> list[str]:
        return [
            self.tree,
            str(self.n),
            str(self.diam),
            str(self.tau),
            self.scheme,
            "1" if self.success else "0",
            "" if self.leader is None else str(self.leader),
            str(self.advice_bits),
            "" if self.xi is None else str(self.xi),
            str(self.ms),
        ]


@dataclass(frozen=True)
class Skip:
    tree: str
    scheme: str
    tau: int
    reason: str


GENERATOR_SPECS = {
    "path": lambda p: generators.gen_path(p["k"]),
    "intro_line": lambda p: generators.gen_intro_line(),
    "broom": lambda p: generators.gen_double_broom(p["delta"], p["a"], p["b"], p["d"]),
    "gsigma_odd": lambda p: generators.gen_gsigma_odd(p["n"], p["d"], p.get("sigma", ())),
    "gsigma_even": lambda p: generators.gen_gsigma_even(p["n"], p["d"], p.get("sigma", ())),
    "template": lambda p: generators.gen_template(
        p["n"], p["d"], p["alpha"], {tuple(k): v for k, v in p.get("labeling", [])} or None
    ),
    "confusion": lambda p: generators.gen_confusion(p["delta"], p["h"], p.get("sigma")),
    "random": lambda p: generators.gen_random(p["n"], p["seed"]),
    "random_diam": lambda p: generators.gen_random_with_diameter(
        p["n"], p["d"], p["seed"], p.get("branch_cap")
    ),
    "spider": lambda p: generators.gen_spider(p["legs"], p.get("seed", 0)),
}


def generate_tree(family: str, params: dict) -> PortTree:
    try:
        make = GENERATOR_SPECS[family]
    except KeyError:
        raise generators.BadParametersError(f"unknown family {family!r}") from None
    return make(params)


def resolve_tau(rule: dict, tree: PortTree) -> int:
    """Time rules: absolute value, diam - delta, floor(alpha*diam) or
    ceil(beta*diam)."""
    kind = rule.get("rule", "absolute")
    if kind == "absolute":
        return int(rule["value"])
    d = centre(tree).diameter
    if kind == "diam_minus":
        return d - int(rule["value"])
    if kind == "alpha_floor":
        return math.floor(float(rule["value"]) * d)
    if kind == "beta_ceil":
        return math.ceil(float(rule["value"]) * d)
    raise ValueError(f"unknown tau rule {kind!r}")


def run_single(
    tree: PortTree,
    scheme: AdviceScheme,
    tau: int,
    check_xi: bool = False,
) -> ResultRow | Skip:
    tid = tree_id(tree)
    ok, reason = scheme.applicable(tree, tau)
    if not ok:
        return Skip(tid, scheme.name, tau, reason)
    xi_val = None
    if check_xi:
        result = xi(tree)
        xi_val = result.xi
        if xi_val is None or xi_val > tau:
            return Skip(tid, scheme.name, tau, f"xi={xi_val} exceeds time {tau}")
    start = time.perf_counter()
    try:
        outcome = run_scheme(tree, scheme, tau)
    except Exception as exc:  # noqa: BLE001 - skip reasons are data
        return Skip(tid, scheme.name, tau, f"{type(exc).__name__}: {exc}")
    ms = int((time.perf_counter() - start) * 1000)
    return ResultRow(
        tid,
        tree.n,
        centre(tree).diameter,
        tau,
        scheme.name,
        outcome.ok,
        outcome.leader,
        outcome.advice_bits,
        xi_val,
        ms,
    )


def load_config(path) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def collect_trees(config: dict) -> list[tuple[str, PortTree]]:
    """Trees from generator specs (with optional seed ranges) and globs."""
    out: list[tuple[str, PortTree]] = []
    for spec in config.get("generators", []):
        family = spec["family"]
        params = dict(spec.get("params", {}))
        seeds = spec.get("seeds")
        if seeds is None:
            out.append((family, generate_tree(family, params)))
        else:
            for seed in seeds:
                p = dict(params)
                p["seed"] = seed
                out.append((family, generate_tree(family, p)))
    for pattern in config.get("tree_files", []):
        for path in sorted(globlib.glob(pattern)):
            out.append((path, load_tree(path)))
    return out


def run_sweep(config: dict) -> tuple[list[ResultRow], list[Skip]]:
    schemes = []
    for name in config["schemes"]:
        if name not in ALL_SCHEMES:
            raise ValueError(f"unknown scheme {name!r}")
        schemes.append(ALL_SCHEMES[name]())
    tau_rule = config.get("tau", {"rule": "diam_minus", "value": 0})
    check = bool(config.get("check_xi", False))
    rows: list[ResultRow] = []
    skips: list[Skip] = []
    for _, tree in collect_trees(config):
        tau = resolve_tau(tau_rule, tree)
        for scheme in schemes:
            result = run_single(tree, scheme, tau, check_xi=check)
            if isinstance(result, ResultRow):
                rows.append(result)
            else:
                skips.append(result)
    rows.sort(key=lambda r: (r.tree, r.scheme, r.tau))
    skips.sort(key=lambda s: (s.tree, s.scheme, s.tau))
    return rows, skips


def rows_to_csv(rows) -> str:
    buf = iolib.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.as_csv())
    return buf.getvalue()


def distinct_advice_count(scheme: AdviceScheme, trees, tau_for) -> int:
    """Number of distinct advice strings the oracle emits over a family.

    ``tau_for`` maps a tree to the time the advice is built for.
    """
    seen = set()
    for tree in trees:
        seen.add(scheme.oracle(tree, tau_for(tree)))
    return len(seen)
