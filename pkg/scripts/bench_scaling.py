#!/usr/bin/env python3
"""Wall-clock scaling sweep for encode/decode/correct.

Doubles n across a range and reports medians, so growth rates can be read
off directly:

    python3 scripts/bench_scaling.py --q 4 --pattern zeros --n-min 1024 --n-max 131072
"""

import argparse
import random
import statistics
import time

from dupcode import codec
from dupcode.channel import apply_duplication
from dupcode.core import derive_params


def message(pattern: str, q: int, n: int, K: int, rng: random.Random):
    if pattern == "zeros":
        return (0,) * n
    if pattern == "random":
        return tuple(rng.randrange(q) for _ in range(n))
    run = 2 * K
    return tuple((j // run) % q for j in range(n))


def timed(fn, reps: int) -> float:
    runs = []
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        runs.append(time.perf_counter() - t0)
    return statistics.median(runs) * 1e3


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=int, default=4)
    ap.add_argument("--pattern", choices=("zeros", "random", "adversarial"), default="zeros")
    ap.add_argument("--n-min", type=int, default=1024)
    ap.add_argument("--n-max", type=int, default=65536)
    ap.add_argument("--reps", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    print(f"{'n':>8} {'K':>4} {'encode ms':>12} {'decode ms':>12} {'correct ms':>12}")
    prev = None
    n = args.n_min
    while n <= args.n_max:
        params = derive_params(args.q, n)
        x = message(args.pattern, args.q, n, params.K, rng)
        y = codec.encode(x, params)
        z = apply_duplication(y, rng.randint(0, n + 1 - params.K), params.K)
        enc = timed(lambda: codec.encode(x, params), args.reps)
        dec = timed(lambda: codec.decode(y, params), args.reps)
        cor = timed(lambda: codec.correct(z, params), args.reps)
        growth = "" if prev is None else f"   (decode x{dec / prev:.2f})"
        print(f"{n:>8} {params.K:>4} {enc:>12.2f} {dec:>12.2f} {cor:>12.2f}{growth}")
        prev = dec
        n *= 2


if __name__ == "__main__":
    main()
