"""Integer encodings of grids and oracles for the scan kernels.

The axiom scans run over a fixed grid, so every lottery is rescaled to
one common integer denominator and every built-in oracle reduces to a
small integer recipe.  Comparisons then happen by cross-multiplication
in plain integers; the pure backend uses Python's unbounded ints, and
the compiled backend uses 128-bit intermediates, so ``envelope_ok``
computes a conservative bound on every product a given scan can form
and refuses the compiled path when it could overflow.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from ..lotteries import Lottery
from ..oracles import (
    ExpectedUtilityOracle,
    HybridExampleOracle,
    LexicographicOracle,
    MajorityOracle,
    PreferenceOracle,
    RepresentedOracle,
)

__all__ = [
    "encode_lotteries",
    "encode_oracle",
    "oracle_scale",
    "envelope_ok",
    "INT128_SAFE",
    "INT64_SAFE",
]

# Compiled kernels multiply (utility scale) x (denominator)^2; staying
# a few bits below 2^127 leaves room for one subtraction and sums.
INT128_SAFE = 1 << 120
INT64_SAFE = 1 << 62


def encode_lotteries(lotteries) -> tuple[list[tuple[int, ...]], int]:
    """Rescale lotteries to one common denominator; returns (nums, den)."""
    den = 1
    for lot in lotteries:
        for w in lot.weights:
            den = lcm(den, w.denominator)
    nums = [
        tuple(int(w * den) for w in lot.weights)
        for lot in lotteries
    ]
    return nums, den


def encode_oracle(oracle: PreferenceOracle):
    """(kind, params) integer recipe, or None when not encodable.

    eu: params are integer payoffs (common denominator cleared; scale
    does not change comparisons).  A represented oracle is the same
    thing through its gauge utility.  lex carries the priority order;
    hybrid and majority need no parameters.

    Exact type checks on purpose: a subclass may override compare or
    solve, and encoding it with the parent's recipe would let the scans
    answer for the wrong ranking.  Unknown types run through the
    callback path instead.
    """
    if type(oracle) is ExpectedUtilityOracle:
        scale = lcm(*(v.denominator for v in oracle.utility.values))
        return ("eu", tuple(int(v * scale) for v in oracle.utility.values))
    if type(oracle) is RepresentedOracle:
        values = (Fraction(0),) + tuple(
            oracle.orientation * c for c in oracle.hyperplane.normal)
        scale = lcm(*(v.denominator for v in values))
        return ("eu", tuple(int(v * scale) for v in values))
    if type(oracle) is HybridExampleOracle:
        return ("hybrid", ())
    if type(oracle) is LexicographicOracle:
        return ("lex", tuple(oracle.priority))
    if type(oracle) is MajorityOracle:
        return ("majority", ())
    return None


def oracle_scale(spec) -> int:
    """Largest payoff magnitude the comparison can multiply in."""
    kind, params = spec
    if kind == "eu":
        return max(1, max(abs(v) for v in params))
    return 1


def worst_denominator(scan: str, den: int, *,
                      max_alpha_den: int = 1,
                      max_t_den: int = 1,
                      depth: int = 0,
                      u_scale: int = 1) -> int:
    """Largest (unreduced) denominator any lottery in the scan can carry."""
    if scan in ("transitivity", "translation"):
        return den
    if scan in ("independence", "betweenness", "convexity"):
        return den * max_alpha_den
    if scan == "line_order":
        return den * max_t_den
    if scan == "solvability_scan":
        return den * max_alpha_den
    if scan == "solvability_solve":
        # alpha = ratio of two dot differences, each within 2*u*den.
        return den * (2 * u_scale * den)
    if scan == "mixture":
        return den * max_alpha_den * (1 << depth)
    if scan in ("archimedean", "openness"):
        return den * (1 << depth)
    raise ValueError(f"unknown scan {scan!r}")


def envelope_ok(spec, scan: str, den: int, **limits) -> bool:
    """True when every value and product the compiled scan can form
    fits its storage: payoffs and denominators in 64 bits, cross
    products in 128."""
    u = oracle_scale(spec)
    m = worst_denominator(scan, den, u_scale=u, **limits)
    return u < INT64_SAFE and m < INT64_SAFE and u * m * m < INT128_SAFE
