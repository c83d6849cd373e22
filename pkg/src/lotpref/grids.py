"""Finite lottery grids and candidate-weight enumerations.

The checkers in this package are exhaustive over finite grids, so every
enumeration here has one pinned deterministic order:

* grid lotteries: ascending denominator, then lexicographic numerators,
  with reduced duplicates dropped (a lottery appears once, at the
  smallest denominator that expresses it);
* rational candidates in an interval: ascending denominator, then
  ascending numerator, reduced forms only;
* dyadic mixing weights: ascending value.

"First violation found" is only meaningful because these orders never
change.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .lotteries import Lottery, OutcomeSpace

__all__ = [
    "GridSpec",
    "enumerate_grid",
    "fixed_denominator_lattice",
    "dyadic_alphas",
    "rationals_between",
]


@dataclass(frozen=True)
class GridSpec:
    """All lotteries over ``space`` with some common denominator <= bound."""

    space: OutcomeSpace
    denominator_bound: int

    def __post_init__(self):
        if self.denominator_bound < 1:
            raise ValueError(
                f"denominator bound must be positive, got {self.denominator_bound}")


def _compositions(total: int, parts: int):
    """All tuples of ``parts`` nonnegative ints summing to ``total``,
    in ascending lexicographic order."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_grid(spec: GridSpec) -> tuple[Lottery, ...]:
    """Every lottery with denominator <= the bound, each listed once."""
    out = []
    size = spec.space.size
    for k in range(1, spec.denominator_bound + 1):
        for nums in _compositions(k, size):
            g = 0
            for a in nums:
                g = gcd(g, a)
            if g != 1:
                continue  # already emitted at denominator k/g
            out.append(Lottery(spec.space, tuple(Fraction(a, k) for a in nums)))
    return tuple(out)


def fixed_denominator_lattice(space: OutcomeSpace, denominator: int) -> tuple[Lottery, ...]:
    """Every lottery whose weights are multiples of 1/denominator.

    Unlike ``enumerate_grid`` this keeps reducible points (the vertex
    (1,0,0) appears here even though its reduced denominator is 1), so
    the count is the full lattice size.
    """
    if denominator < 1:
        raise ValueError(f"denominator must be positive, got {denominator}")
    return tuple(
        Lottery(space, tuple(Fraction(a, denominator) for a in nums))
        for nums in _compositions(denominator, space.size))


def dyadic_alphas(bound: int, *, interior_only: bool = False) -> tuple[Fraction, ...]:
    """Dyadic rationals in (0, 1] with denominator <= bound, ascending.

    With ``interior_only`` the endpoint 1 is dropped, leaving (0, 1).
    """
    vals = set()
    power = 1
    while power <= bound:
        for a in range(1, power + 1):
            vals.add(Fraction(a, power))
        power *= 2
    if interior_only:
        vals.discard(Fraction(1))
    return tuple(sorted(vals))


def rationals_between(lo: Fraction, hi: Fraction, max_denominator: int) -> tuple[Fraction, ...]:
    """Reduced rationals in [lo, hi] with denominator <= max_denominator,
    ordered by ascending denominator then ascending numerator."""
    if max_denominator < 1:
        raise ValueError(f"denominator bound must be positive, got {max_denominator}")
    out = []
    for b in range(1, max_denominator + 1):
        a = -(-(lo.numerator * b) // lo.denominator)  # ceil(lo*b)
        top = (hi.numerator * b) // hi.denominator    # floor(hi*b)
        while a <= top:
            # Reduced forms are unique, so gcd = 1 also deduplicates.
            if gcd(abs(a), b) == 1:
                out.append(Fraction(a, b))
            a += 1
    return tuple(out)
