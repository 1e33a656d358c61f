#!/usr/bin/env python3
"""Exhaustive count vs closed-form bound over a (n, K) grid.

For each point: the number of length-n words containing a square of
half-length >= K against the ceiling n*q^(n+1-K), and the number of
square-free words of length n against the floor q^n*(1-(n-1)*q^(1-K)).

    python3 scripts/bounds_grid.py --q 2 --n 4 16 --K 1 6
"""

import argparse

from dupcode import analysis


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=int, default=2)
    ap.add_argument("--n", type=int, nargs=2, default=(4, 12), metavar=("LO", "HI"))
    ap.add_argument("--K", type=int, nargs=2, default=(1, 4), metavar=("LO", "HI"))
    ap.add_argument("--max-space", type=int, default=None)
    args = ap.parse_args()

    print(f"{'n':>4} {'K':>3} {'bad':>10} {'<= bound':>12} {'free':>10} {'>= bound':>12}")
    for n in range(args.n[0], args.n[1] + 1):
        for K in range(args.K[0], args.K[1] + 1):
            bad = analysis.count_bad_words(args.q, n, K, max_space=args.max_space)
            free = analysis.enumerate_code0(args.q, n, K, max_space=args.max_space)
            assert bad.count + free.count == args.q**n
            print(
                f"{n:>4} {K:>3} {bad.count:>10} {float(bad.bound):>12.1f} "
                f"{free.count:>10} {float(free.bound):>12.1f}"
            )


if __name__ == "__main__":
    main()
