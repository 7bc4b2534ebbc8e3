#!/usr/bin/env python3
"""Run every verification suite over a wider range than the test suite and
print one summary line per suite."""

import argparse
import json
import sys
import time

from polycauchy.cli import main as cli_main


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k-range", default="1-5")
    ap.add_argument("--n-max", type=int, default=None)
    ap.add_argument("--out", default="verify_summary.json")
    args = ap.parse_args()
    argv = ["verify", "all", "--k-range", args.k_range, "--out", args.out]
    if args.n_max is not None:
        argv += ["--n-max", str(args.n_max)]
    t0 = time.perf_counter()
    code = cli_main(argv)
    if code == 2:
        sys.exit(code)
    with open(args.out) as f:
        doc = json.load(f)
    for name, suite in doc["suites"].items():
        print(f"{name:8s} {'PASS' if suite['passed'] else 'FAIL'} {suite['count']:5d} instances")
    print(f"total {time.perf_counter() - t0:.1f}s, summary in {args.out}")
    sys.exit(code)


if __name__ == "__main__":
    main()
