#!/usr/bin/env python3
"""Write numerator/denominator b-files for c_n^(k) and c^_n^(k), for use with
`polycauchy oeis-check` or for comparison with downloaded OEIS b-files."""

import argparse
from pathlib import Path

from polycauchy.bfile import format_bfile, rational_part
from polycauchy.families import sequence


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--n-max", type=int, default=30)
    ap.add_argument("--dir", default="bfiles")
    args = ap.parse_args()
    out = Path(args.dir)
    out.mkdir(exist_ok=True)
    for family in ("first", "second"):
        for k in args.k:
            values = sequence(family, k, args.n_max)
            for part in ("numerator", "denominator"):
                entries = [(n, rational_part(v, part)) for n, v in enumerate(values)]
                path = out / f"{family}_k{k}_{part}.txt"
                path.write_text(format_bfile(entries, f"{family} kind, k={k}, {part}s"))
                print(path)


if __name__ == "__main__":
    main()
