"""Command-line interface.

Subcommands: generate, info, elect, sweep, pairbreak.  Exit codes: 0 for
full success, 2 when any election fails, 1 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import generators
from .harness import (
    GENERATOR_SPECS,
    generate_tree,
    load_config,
    rows_to_csv,
    run_single,
    run_sweep,
    tree_id,
)
from .io import dump_tree, load_tree, save_tree
from .oracles import xi
from .pairbreaking import PairColouring, exists_breaker, min_colours
from .schemes import ALL_SCHEMES
from .tree import centre, is_symmetric, validate


def _cmd_generate(args) -> int:
    params = json.loads(args.params) if args.params else {}
    for key, value in (kv.split("=", 1) for kv in args.set or []):
        try:
            params[key] = json.loads(value)
        except json.JSONDecodeError:
            params[key] = value
    tree = generate_tree(args.family, params)
    text = dump_tree(tree)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        sidecar = {"family": args.family, "params": params, "n": tree.n}
        with open(args.out + ".json", "w", encoding="utf-8") as fh:
            json.dump(sidecar, fh, indent=2, sort_keys=True)
            fh.write("\n")
        print(f"wrote {args.out} ({tree.n} nodes)")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_info(args) -> int:
    tree = load_tree(args.tree)
    validate(tree)
    cen = centre(tree)
    info = {
        "tree": tree_id(tree),
        "n": tree.n,
        "diam": cen.diameter,
        "centre": list(cen.nodes),
        "symmetric": is_symmetric(tree),
    }
    if args.xi:
        result = xi(tree)
        info["xi"] = result.xi
        info["xi_leader"] = result.leader
    print(json.dumps(info, indent=2, sort_keys=True))
    return 0


def _cmd_elect(args) -> int:
    tree = load_tree(args.tree)
    if args.scheme not in ALL_SCHEMES:
        print(f"unknown scheme {args.scheme!r}", file=sys.stderr)
        return 1
    scheme = ALL_SCHEMES[args.scheme]()
    tau = args.time if args.time is not None else scheme.default_tau(tree)
    result = run_single(tree, scheme, tau)
    if hasattr(result, "reason"):
        print(json.dumps({"skipped": result.reason, "tau": tau}, indent=2))
        return 2
    record = {
        "tree": result.tree,
        "scheme": result.scheme,
        "tau": result.tau,
        "success": result.success,
        "leader": result.leader,
        "advice_bits": result.advice_bits,
    }
    print(json.dumps(record, indent=2, sort_keys=True))
    return 0 if result.success else 2


def _cmd_sweep(args) -> int:
    config = load_config(args.config)
    rows, skips = run_sweep(config)
    text = rows_to_csv(rows)
    out = config.get("output")
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {out}: {len(rows)} rows, {len(skips)} skipped")
    else:
        sys.stdout.write(text)
    for skip in skips:
        print(f"# skipped {skip.tree} {skip.scheme}@{skip.tau}: {skip.reason}", file=sys.stderr)
    return 0 if all(r.success for r in rows) else 2


def _cmd_pairbreak(args) -> int:
    if args.pb_command == "min-colours":
        value = min_colours(args.z, method=args.method)
        print(json.dumps({"z": args.z, "min_colours": value}))
        return 0
    with open(args.file, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    col = PairColouring(
        data["Z"],
        max(g for _, _, g in data["pairs"]),
        tuple((a, b, g) for a, b, g in data["pairs"]),
    )
    breaker = exists_breaker(col)
    out = {"Z": col.z, "breaker_exists": breaker is not None}
    if breaker is not None:
        out["breaker"] = {f"{v},{g}": bit for (v, g), bit in sorted(breaker.items())}
    print(json.dumps(out, indent=2, sort_keys=True))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="anontree",
        description="Leader election with advice in anonymous port-labelled trees",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a tree from a named family")
    p.add_argument("family", choices=sorted(GENERATOR_SPECS))
    p.add_argument("--params", help="JSON object of generator parameters")
    p.add_argument("--set", action="append", metavar="KEY=VALUE", help="override one parameter")
    p.add_argument("-o", "--out", help="output file (JSON sidecar written next to it)")
    p.set_defaults(fn=_cmd_generate)

    p = sub.add_parser("info", help="n, diameter, centre, symmetry, optional xi")
    p.add_argument("tree")
    p.add_argument("--xi", action="store_true", help="run the brute-force feasibility oracle")
    p.set_defaults(fn=_cmd_info)

    p = sub.add_parser("elect", help="run one scheme on one tree")
    p.add_argument("tree")
    p.add_argument("--scheme", required=True, choices=sorted(ALL_SCHEMES))
    p.add_argument("--time", type=int, help="allocated time (default: scheme's natural time)")
    p.set_defaults(fn=_cmd_elect)

    p = sub.add_parser("sweep", help="run a JSON-configured experiment sweep")
    p.add_argument("--config", required=True)
    p.set_defaults(fn=_cmd_sweep)

    p = sub.add_parser("pairbreak", help="pair-breaking utilities")
    pb = p.add_subparsers(dest="pb_command", required=True)
    q = pb.add_parser("min-colours")
    q.add_argument("--z", type=int, required=True)
    q.add_argument("--method", default="auto", choices=["auto", "exhaustive", "criterion"])
    q = pb.add_parser("check")
    q.add_argument("--file", required=True, help="JSON {Z, pairs: [[a,b,colour]...]}")
    p.set_defaults(fn=_cmd_pairbreak)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except generators.BadParametersError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
