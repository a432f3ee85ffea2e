"""Command-line front end.

Subcommands construct a configuration, run the verification pipeline, print a
human-readable summary to stdout, and optionally write the full report as
JSON.  Exit codes: 0 condition verified, 1 condition not established,
2 invalid input or parameters, 3 a computation budget ran out.
"""

from __future__ import annotations

import argparse
import json
import sys

from .configs import (
    Configuration,
    WitnessPair,
    fermat,
    grid_example,
    three_points,
    two_pencils,
)
from .errors import InputError, ResourceLimitError, SymreesError
from .fields import CyclotomicField, Field, FieldSpec, PrimeField, RationalField, make_field
from .ideals import INFINITE
from .parsing import parse_polynomial, parse_scalar
from .points import PointSet, ProjectivePoint, base_ring, symbolic_power_ideal, symbolic_power_membership
from .verifier import VERDICT_VERIFIED, verify

EXIT_VERIFIED = 0
EXIT_NOT_ESTABLISHED = 1
EXIT_INPUT_ERROR = 2
EXIT_RESOURCE = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symrees",
        description="verify finite generation of symbolic Rees rings of planar point configurations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for the generic linear form draw")
    common.add_argument("--cap", type=int, default=None, help="truncation cap for local lengths")
    common.add_argument("--char", type=int, default=0,
                        help="0 for characteristic zero, or a prime p for fast mode over F_p")
    common.add_argument("--json", action="store_true", help="write the report as JSON")
    common.add_argument("--out", type=str, default=None, help="path for the JSON report")

    p = sub.add_parser("verify-fermat", parents=[common],
                       help="the n-th roots grid plus the coordinate triangle")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=str, default=None, help="mixing scalar for n >= 4 (default 2)")

    p = sub.add_parser("verify-grid", parents=[common],
                       help="two pencils of m and n lines from binomial forms")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("verify-three-points", parents=[common],
                       help="three non-collinear points (default: the coordinate triangle)")
    p.add_argument("--input", type=str, default=None, help="point-set JSON file")

    p = sub.add_parser("verify-custom", parents=[common], help="configuration from a JSON file")
    p.add_argument("--input", type=str, required=True)

    p = sub.add_parser("symbolic-power", parents=[common],
                       help="symbolic power membership / generators for a configuration")
    p.add_argument("--input", type=str, required=True, help="configuration JSON file")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--poly", type=str, default=None, help="polynomial to test for membership")
    p.add_argument("--ideal", action="store_true", help="print generators of the full intersection")
    p.add_argument("--budget", type=int, default=64)

    p = sub.add_parser("show-config", parents=[common], help="print a configuration as JSON")
    p.add_argument("--input", type=str, required=True)

    return parser


def _field_for(args, default_root: int | None = None) -> Field | None:
    """Field override from --char; None keeps each constructor's default."""
    if args.char:
        return PrimeField(args.char, root_order=default_root)
    return None


def _point_from_strings(field, coords):
    return ProjectivePoint(field, [parse_scalar(c, field) for c in coords])


def load_configuration(obj, char: int = 0) -> Configuration:
    """Build a configuration from its JSON description."""
    kind = obj.get("kind")
    if kind == "fermat":
        n = int(obj["n"])
        field = PrimeField(char, root_order=n) if char else (
            make_field(FieldSpec.from_json(obj["field"])) if "field" in obj else None
        )
        alpha = None
        if obj.get("alpha") is not None:
            probe = field if field is not None else CyclotomicField(n)
            alpha = parse_scalar(str(obj["alpha"]), probe)
        return fermat(n, alpha=alpha, field=field)
    if kind == "grid":
        m, n = int(obj["m"]), int(obj["n"])
        field = None
        if char:
            from math import gcd

            field = PrimeField(char, root_order=m * n // gcd(m, n))
        elif "field" in obj:
            field = make_field(FieldSpec.from_json(obj["field"]))
        return grid_example(m, n, field=field)
    if kind == "three-points":
        field = _json_field(obj, char)
        pts = [_point_from_strings(field, c) for c in obj["points"]]
        if len(pts) != 3:
            raise InputError("three-points needs exactly three points")
        return three_points(*pts)
    if kind == "two-pencils":
        field = _json_field(obj, char)
        ring = base_ring(field)
        a = _point_from_strings(field, obj["A"])
        b = _point_from_strings(field, obj["B"])
        f_factors = [parse_polynomial(t, ring) for t in obj["f_factors"]]
        g_factors = [parse_polynomial(t, ring) for t in obj["g_factors"]]
        return two_pencils(f_factors, g_factors, a, b)
    if kind == "custom":
        field = _json_field(obj, char)
        ring = base_ring(field)
        pts = PointSet([_point_from_strings(field, c) for c in obj["points"]],
                       obj.get("label", "custom"))
        w = obj["witnesses"]
        witnesses = WitnessPair(
            parse_polynomial(w["xi1"], ring), int(w["r1"]),
            parse_polynomial(w["xi2"], ring), int(w["r2"]),
        )
        cfg = Configuration(obj.get("label", "custom"), field, pts, witnesses, obj)
        return cfg
    raise InputError(f"unknown configuration kind {kind!r}")


def _json_field(obj, char: int) -> Field:
    if char:
        return PrimeField(char)
    if "field" in obj:
        return make_field(FieldSpec.from_json(obj["field"]))
    return RationalField()


def _default_three_points(char: int) -> Configuration:
    field = PrimeField(char) if char else RationalField()
    pts = [ProjectivePoint(field, c) for c in ([1, 0, 0], [0, 1, 0], [0, 0, 1])]
    return three_points(*pts)


def _print_report(report):
    lines = []
    cfg = report.config or {}
    lines.append(f"configuration: {cfg.get('kind', '?')} {_params_of(cfg)} over {_field_str(report.field)}")
    for m in report.memberships:
        lines.append(f"witness {m['witness']} in symbolic power {m['r']}: {'yes' if m['member'] else 'NO'}")
    lines.append(f"method: {report.method}")
    if report.height is not None:
        lines.append(f"height of the witness pair ideal: {report.height}")
    if report.product_check is not None:
        pc = report.product_check
        lines.append(
            f"product check: {pc['d1']}*{pc['d2']} vs {pc['r1']}*{pc['r2']}*{pc['e']}"
            f" -> {'holds' if pc['holds'] else 'fails'}"
        )
    if report.lengths is not None:
        lhs = report.lengths["lhs"]
        lhs = "Infinite" if lhs == INFINITE else lhs
        lines.append(f"lengths: lhs = {lhs}, rhs = {report.lengths['rhs']} (u = {report.u}, seed {report.seed})")
    for note in report.notes:
        lines.append(f"note: {note}")
    lines.append(f"verdict: {report.verdict}")
    lines.append(f"elapsed: {report.timings_ms.get('total', 0)} ms")
    print("\n".join(lines))


def _params_of(cfg):
    keys = [k for k in ("n", "m", "alpha") if k in cfg]
    return " ".join(f"{k}={cfg[k]}" for k in keys)


def _field_str(spec):
    if not spec:
        return "?"
    kind = spec.get("kind")
    if kind == "rational":
        return "Q"
    if kind == "cyclotomic":
        return f"Q(zeta_{spec['n']})"
    return f"F_{spec['p']}"


def _emit_json(report, args):
    if not args.json:
        return
    payload = json.dumps(report.to_json_dict(), indent=2, sort_keys=True) + "\n"
    with open(args.out, "w") as fh:
        fh.write(payload)


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.json and not args.out:
            raise InputError("--json needs --out <path> for the report file")
        if args.command == "verify-fermat":
            field = _field_for(args, default_root=args.n)
            alpha = None
            if args.alpha is not None:
                probe = field if field is not None else CyclotomicField(args.n)
                alpha = parse_scalar(args.alpha, probe)
            cfg = fermat(args.n, alpha=alpha, field=field)
        elif args.command == "verify-grid":
            from math import gcd

            field = _field_for(args, default_root=args.m * args.n // gcd(args.m, args.n))
            cfg = grid_example(args.m, args.n, field=field)
        elif args.command == "verify-three-points":
            if args.input:
                with open(args.input) as fh:
                    obj = json.load(fh)
                if obj.get("kind") is None:
                    obj = {"kind": "three-points", **obj}
                cfg = load_configuration(obj, char=args.char)
            else:
                cfg = _default_three_points(args.char)
        elif args.command == "verify-custom":
            with open(args.input) as fh:
                obj = json.load(fh)
            cfg = load_configuration(obj, char=args.char)
        elif args.command in ("symbolic-power", "show-config"):
            with open(args.input) as fh:
                obj = json.load(fh)
            cfg = load_configuration(obj, char=args.char)
            if args.command == "show-config":
                print(json.dumps(_config_json(cfg), indent=2, sort_keys=True))
                return EXIT_VERIFIED
            return _run_symbolic_power(cfg, args)
        else:  # pragma: no cover - argparse enforces the choices
            raise InputError(f"unknown command {args.command}")

        report = verify(cfg, seed=args.seed, cap=args.cap)
        _print_report(report)
        _emit_json(report, args)
        return EXIT_VERIFIED if report.verdict == VERDICT_VERIFIED else EXIT_NOT_ESTABLISHED
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (SymreesError, OSError, json.JSONDecodeError, ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def _config_json(cfg: Configuration):
    field = cfg.field
    return {
        "label": cfg.label,
        "provenance": cfg.provenance,
        "field": field.spec.to_json(),
        "points": [[field.scalar_str(c) for c in p.coords] for p in cfg.points],
        "witnesses": {
            "xi1": str(cfg.witnesses.xi1),
            "r1": cfg.witnesses.r1,
            "xi2": str(cfg.witnesses.xi2),
            "r2": cfg.witnesses.r2,
        },
    }


def _run_symbolic_power(cfg: Configuration, args) -> int:
    ring = cfg.ring
    if args.poly is None and not args.ideal:
        raise InputError("symbolic-power needs --poly or --ideal")
    if args.poly is not None:
        f = parse_polynomial(args.poly, ring)
        member = symbolic_power_membership(f, cfg.points, args.r)
        print(f"{args.poly} in symbolic power {args.r}: {'yes' if member else 'no'}")
    if args.ideal:
        ideal = symbolic_power_ideal(cfg.points, args.r, ring, budget=args.budget)
        for g in ideal.groebner():
            print(str(g))
    return EXIT_VERIFIED


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
