#!/usr/bin/env python3
"""Run the built-in configurations end to end and write their reports.

Usage:
    python scripts/run_verifications.py [--out-dir reports] [--fast] [--seed N]

``--fast`` keeps only the prime-field runs (seconds instead of minutes).
"""

import argparse
import json
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from symrees.configs import fermat, grid_example, three_points
from symrees.fields import PrimeField, RationalField
from symrees.points import ProjectivePoint
from symrees.verifier import verify


def build_jobs(fast: bool):
    Q = RationalField()
    jobs = [
        ("three-points", lambda: three_points(
            ProjectivePoint(Q, [1, 0, 0]),
            ProjectivePoint(Q, [0, 1, 0]),
            ProjectivePoint(Q, [0, 0, 1]),
        )),
        ("fermat-3", lambda: fermat(3)),
        ("fermat-4-f13", lambda: fermat(4, field=PrimeField(13, root_order=4))),
        ("fermat-5-f31", lambda: fermat(5, field=PrimeField(31, root_order=5))),
        ("grid-2x2", lambda: grid_example(2, 2)),
    ]
    if not fast:
        jobs += [
            ("fermat-4", lambda: fermat(4)),
            ("grid-2x3", lambda: grid_example(2, 3)),
        ]
    return jobs


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default="reports")
    ap.add_argument("--fast", action="store_true")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    outdir = pathlib.Path(args.out_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    rows = []
    for name, make in build_jobs(args.fast):
        t0 = time.monotonic()
        report = verify(make(), seed=args.seed)
        elapsed = round(time.monotonic() - t0, 2)
        path = outdir / f"{name}.json"
        path.write_text(json.dumps(report.to_json_dict(), indent=2, sort_keys=True) + "\n")
        detail = ""
        if report.lengths:
            detail = f"lhs = rhs = {report.lengths['lhs']}"
        elif report.product_check:
            pc = report.product_check
            detail = f"{pc['d1']}*{pc['d2']} = {pc['r1']}*{pc['r2']}*{pc['e']}"
        rows.append((name, report.method, report.verdict, detail, elapsed))
        print(f"{name:16s} {report.method:9s} {report.verdict:28s} {detail:22s} {elapsed:7.2f}s")
    verified = sum(1 for r in rows if r[2] == "condition-verified")
    print(f"\n{verified}/{len(rows)} configurations verified; reports in {outdir}/")


if __name__ == "__main__":
    main()
