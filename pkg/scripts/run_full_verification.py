#!/usr/bin/env python3
"""Run the complete claim-catalog verification and write the JSON report.

Example:

    python scripts/run_full_verification.py --trials 200 --seed 1 --out report.json

Exit code 0 when every check passes, 1 otherwise.
"""

import argparse
import json
import sys
import time

from liejets.checks import run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=100)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", default=None, help="report path (default: stdout)")
    parser.add_argument("--no-timing", action="store_true")
    args = parser.parse_args()

    start = time.perf_counter()
    report = run_suite("all", trials=args.trials, seed=args.seed)
    elapsed = time.perf_counter() - start

    doc = report.to_json(include_timing=not args.no_timing)
    text = json.dumps(doc, indent=2)
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(text + "\n")
    else:
        print(text)

    for check in report.checks:
        print(f"{check.status:>4}  {check.check}", file=sys.stderr)
    print(
        f"{'ok' if report.all_passed else 'FAILED'}: {len(report.checks)} checks "
        f"in {elapsed:.1f}s (seed {args.seed}, {args.trials} trials)",
        file=sys.stderr,
    )
    return 0 if report.all_passed else 1


if __name__ == "__main__":
    sys.exit(main())
