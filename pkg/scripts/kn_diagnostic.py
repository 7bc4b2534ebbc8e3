#!/usr/bin/env python3
"""Print K_n (argmax of the unsigned Stirling row) next to n / ln n."""

import argparse
import math

from polycauchy.stirling import kn_is_tied, max_index_Kn


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=60)
    args = ap.parse_args()
    print(f"{'n':>4} {'K_n':>4} {'n/ln n':>8} {'ratio':>7}")
    for n in range(2, args.n_max + 1):
        k = max_index_Kn(n)
        approx = n / math.log(n)
        flag = "  (tie, smallest index)" if kn_is_tied(n) else ""
        print(f"{n:>4} {k:>4} {approx:>8.3f} {k / approx:>7.3f}{flag}")


if __name__ == "__main__":
    main()
