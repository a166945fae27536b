"""Command-line front end.

    eqcobord eta SPACE.json      Stong invariant and point count
    eqcobord null SPACE.json     vanishing decision with a pairing certificate
    eqcobord check SUITE         run a verification suite (or ``all``)

Exit codes: ``null`` returns 0 when the class vanishes and 2 when it does
not; every command returns 1 on bad input or a failed verification.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cobordism import check_dold_equivalence, eta, pairing_witness
from .oracle import (ScaleError, oracle_dold_consistency, oracle_flag_fixed_points,
                     oracle_proj_rep, oracle_tangent_rep)
from .space_ast import SpaceSyntaxError, build, build_base, canonical, parse_flag_spec, parse_proj_spec
from .spaces import as_fixed_point_model, flag_fixed_points, proj_tangent, real_flag_tangent
from .suites import SUITES, run_suite

EXIT_NULL, EXIT_ERROR, EXIT_NON_NULL = 0, 1, 2


def load_space(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SpaceSyntaxError(path, f"invalid JSON: {exc}") from None


def verify_space(node) -> dict[str, bool]:
    """Oracle cross-checks for every flag, projective space and Dold node in ``node``."""
    checks: dict[str, bool] = {}

    def walk(n, path):
        kind = n["kind"]
        if kind in ("real_flag", "complex_flag"):
            spec = parse_flag_spec(n, path)
            try:
                fast = flag_fixed_points(spec)
                checks[f"{path}:fixed_points"] = sorted(fast) == oracle_flag_fixed_points(spec)
                checks[f"{path}:tangents"] = all(
                    real_flag_tangent(spec, p) == oracle_tangent_rep(spec, p) for p in fast)
            except ScaleError:
                checks[f"{path}:oracle_skipped_scale"] = True
        elif kind == "proj":
            spec = parse_proj_spec(n, path)
            try:
                checks[f"{path}:tangents"] = all(
                    oracle_proj_rep(spec, j) == proj_tangent(spec, j)
                    for j in range(1, spec.m + 2))
            except ScaleError:
                checks[f"{path}:oracle_skipped_scale"] = True
        elif kind == "dold":
            proj = parse_proj_spec(n["proj"], f"{path}.proj")
            base = build_base(n["base"], f"{path}.base")
            checks[f"{path}:formula"] = oracle_dold_consistency(proj, base)
            report = check_dold_equivalence(proj, base)
            checks[f"{path}:equivalence"] = report.passed
            walk(n["proj"], f"{path}.proj")
            walk(n["base"], f"{path}.base")
        elif kind in ("product", "disjoint_union"):
            key = "factors" if kind == "product" else "summands"
            for i, child in enumerate(n[key]):
                walk(child, f"{path}.{key}[{i}]")

    walk(node, "$")
    return checks


def space_report(node, verify: bool) -> dict:
    model = as_fixed_point_model(build(node))
    value = eta(model)
    witness = pairing_witness(model)
    checks = {"witness_valid": witness.verify(model),
              "witness_matches_eta": witness.complete == (not value)}
    if verify:
        checks.update(verify_space(node))
    return {
        "space": canonical(node),
        "rank": model.rank,
        "dimension": model.dimension,
        "points": len(model),
        "eta": str(value),
        "null": not value,
        "witness": witness.to_json(),
        "checks": checks,
    }


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def cmd_eta(args) -> int:
    report = space_report(load_space(args.file), args.verify)
    if args.json:
        print(_dump(report))
    else:
        print(report["eta"])
        print(f"points: {report['points']}")
        _print_checks(report["checks"], args.verify)
    return EXIT_ERROR if not all(report["checks"].values()) else 0


def cmd_null(args) -> int:
    report = space_report(load_space(args.file), args.verify)
    if args.json:
        print(_dump(report))
    else:
        print("null" if report["null"] else "non-null")
        for a, b in report["witness"]["pairs"]:
            print(f"pair: {a} <-> {b}")
        for label in report["witness"]["residual"]:
            print(f"residual: {label}")
        _print_checks(report["checks"], args.verify)
    if not all(report["checks"].values()):
        return EXIT_ERROR
    return EXIT_NULL if report["null"] else EXIT_NON_NULL


def _print_checks(checks: dict, verbose: bool):
    if not verbose:
        return
    width = max(map(len, checks))
    for name, ok in checks.items():
        print(f"check {name:<{width}}  {'pass' if ok else 'FAIL'}")


def cmd_check(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = [run_suite(name, seed=args.seed) for name in names]
    ok = all(r.passed for r in results)
    if args.json:
        print(_dump({"passed": ok, "seed": args.seed, "suites": [r.to_json() for r in results]}))
    else:
        width = max(len(r.name) for r in results)
        for r in results:
            print(f"{r.name:<{width}}  {'pass' if r.passed else 'FAIL'}  cases={r.cases}")
            for failure in r.failures[:5]:
                print(f"    {failure}")
    return 0 if ok else EXIT_ERROR


def build_parser() -> argparse.ArgumentParser:
    def flags(default):
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("--json", action="store_true", default=default(False),
                            help="emit JSON instead of text")
        common.add_argument("--verify", action="store_true", default=default(False),
                            help="run oracle cross-checks")
        common.add_argument("--seed", type=int, default=default(0),
                            help="seed for randomized suites")
        return common

    # flags may go before or after the subcommand; the subparser must not
    # overwrite values already set at the top level
    common = flags(lambda _: argparse.SUPPRESS)
    parser = argparse.ArgumentParser(prog="eqcobord", parents=[flags(lambda v: v)],
                                     description="Equivariant cobordism via fixed-point data.")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("eta", parents=[common], help="print the Stong invariant")
    p.add_argument("file", help="space description (JSON), or - for stdin")
    p.set_defaults(func=cmd_eta)
    p = sub.add_parser("null", parents=[common], help="decide null-cobordance")
    p.add_argument("file", help="space description (JSON), or - for stdin")
    p.set_defaults(func=cmd_null)
    p = sub.add_parser("check", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=[*SUITES, "all"])
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else 0
    try:
        return args.func(args)
    except (SpaceSyntaxError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
