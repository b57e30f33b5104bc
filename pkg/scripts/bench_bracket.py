#!/usr/bin/env python3
"""Timing sweep for the bracket reduction.

Measures wall time against crossing count on two diagram families: two-strand
braid words (worst-case 2^n state tree, no early collapses) and random planar
tangles from the generator used by the test suite.  Run from the repository
root:

    python3 scripts/bench_bracket.py --max-crossings 16
"""

import argparse
import random
import time

from tanglepoly.generate import random_tangle
from tanglepoly.moves import braid_pattern
from tanglepoly.pairing import p_poly
from tanglepoly.skein import bracket


def timed(fn) -> float:
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


def bench_braids(max_crossings: int, rng: random.Random) -> None:
    print(f"{'crossings':>9}  {'bracket (s)':>11}  {'p_poly (s)':>10}")
    n = 2
    while n <= max_crossings:
        signs = [rng.choice((1, -1)) for _ in range(n)]
        d = braid_pattern(*signs)
        t_bracket = timed(lambda: bracket(d))
        t_pairing = timed(lambda: p_poly(d))
        print(f"{n:>9}  {t_bracket:>11.4f}  {t_pairing:>10.4f}")
        n += 2


def bench_random(count: int, max_crossings: int, rng: random.Random) -> None:
    total = 0.0
    worst = 0.0
    for _ in range(count):
        d = random_tangle(rng, max_crossings=max_crossings)
        t = timed(lambda: bracket(d))
        total += t
        worst = max(worst, t)
    print(f"{count} random tangles (<= {max_crossings} crossings): "
          f"total {total:.4f}s, worst {worst:.4f}s")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-crossings", type=int, default=16,
                        help="largest braid word to time (default 16)")
    parser.add_argument("--random-count", type=int, default=200,
                        help="number of random tangles to sweep (default 200)")
    parser.add_argument("--seed", type=int, default=12345)
    args = parser.parse_args()
    rng = random.Random(args.seed)
    bench_braids(args.max_crossings, rng)
    bench_random(args.random_count, 5, rng)


if __name__ == "__main__":
    main()
