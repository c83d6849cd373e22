"""Compare the compiled scan kernels against the pure-Python reference.

Runs full falsifier scans for an expected-utility oracle (which has no
violations, so every scan walks its entire search space) on each
backend and prints one table row per scan.

Usage: python benchmarks/bench_scans.py [--repeat N]
"""

import argparse
import time

from lotpref import _kernels as kernels
from lotpref.grids import GridSpec, dyadic_alphas, enumerate_grid, rationals_between
from lotpref.lotteries import OutcomeSpace
from lotpref.oracles import ExpectedUtilityOracle, UtilityFunction

SPACE = OutcomeSpace.of_size(3)
EU = ExpectedUtilityOracle(UtilityFunction.of(SPACE, [0, 1, 2]))
SPEC = kernels.encode_oracle(EU)


def encoded(bound):
    grid = enumerate_grid(GridSpec(SPACE, bound))
    nums, den = kernels.encode_lotteries(grid)
    return nums, den


def pairs(fracs):
    return [(a.numerator, a.denominator) for a in fracs]


def cases():
    nums6, den6 = encoded(6)
    nums8, den8 = encoded(8)
    from fractions import Fraction as F

    alphas6 = pairs(dyadic_alphas(6))
    candidates6 = pairs(rationals_between(F(0), F(1), 6))
    return [
        ("transitivity d=8", kernels.scan_transitivity, (nums8, den8)),
        ("independence d=6", kernels.scan_independence, (nums6, den6, alphas6)),
        ("convexity d=6", kernels.scan_convexity, (nums6, den6, candidates6)),
        ("line-order d=8", kernels.scan_line_order, (nums8, den8, 8)),
        ("translation d=8", kernels.scan_translation, (nums8, den8)),
    ]


def timed(fn, args, repeat):
    best = None
    for _ in range(repeat):
        start = time.perf_counter()
        hit = fn(SPEC, *args)
        elapsed = time.perf_counter() - start
        assert hit is None, "benchmark oracle should have no violations"
        best = elapsed if best is None else min(best, elapsed)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3,
                        help="timing repetitions per cell (default 3)")
    args = parser.parse_args()

    if not kernels.have_compiled():
        print("compiled extension not available; nothing to compare")
        return

    rows = []
    for label, fn, fn_args in cases():
        compiled = timed(fn, fn_args, args.repeat)
        kernels.set_force_pure(True)
        try:
            pure = timed(fn, fn_args, max(1, args.repeat // 3))
        finally:
            kernels.set_force_pure(False)
        rows.append((label, compiled, pure))

    width = max(len(r[0]) for r in rows)
    print(f"{'scan':<{width}}  {'compiled':>10}  {'pure':>10}  {'speedup':>8}")
    for label, compiled, pure in rows:
        ratio = pure / compiled if compiled else float("inf")
        print(f"{label:<{width}}  {compiled:>9.4f}s  {pure:>9.4f}s  {ratio:>7.1f}x")


if __name__ == "__main__":
    main()
