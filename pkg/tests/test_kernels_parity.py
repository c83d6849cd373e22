"""Pure and compiled scan backends must agree hit for hit.

Every scan is run twice on the same encoded grid, once through the
dispatcher (compiled whenever available) and once directly against the
pure reference, for every oracle recipe the C code understands.  First
hits are compared exactly, None included.
"""

from fractions import Fraction

import pytest

from lotpref import _kernels as kernels
from lotpref._kernels import pure
from lotpref.grids import GridSpec, dyadic_alphas, enumerate_grid, rationals_between
from lotpref.lotteries import OutcomeSpace

F = Fraction
SPACE = OutcomeSpace.of_size(3)

SPECS = [
    ("eu", (0, 1, 2)),
    ("eu", (3, -1, 0)),
    ("lex", (0, 1, 2)),
    ("lex", (2, 0, 1)),
    ("hybrid", ()),
    ("majority", ()),
]

needs_compiled = pytest.mark.skipif(
    not kernels.have_compiled(), reason="compiled extension not built")


def encoded(bound):
    grid = enumerate_grid(GridSpec(SPACE, bound))
    nums, den = kernels.encode_lotteries(grid)
    return nums, den


def pairs(fracs):
    return [(a.numerator, a.denominator) for a in fracs]


@needs_compiled
@pytest.mark.parametrize("spec", SPECS, ids=lambda s: f"{s[0]}{s[1]}")
@pytest.mark.parametrize("bound", [2, 3])
def test_triple_scans_agree(spec, bound):
    nums, den = encoded(bound)
    assert kernels.backend_name(spec, "transitivity", den) == "compiled"
    alphas = pairs(dyadic_alphas(bound))
    candidates = pairs(rationals_between(F(0), F(1), bound))
    cases = [
        ("transitivity", (nums, den)),
        ("independence", (nums, den, alphas)),
        ("betweenness", (nums, den, alphas)),
        ("convexity", (nums, den, candidates)),
        ("translation", (nums, den)),
        ("line_order", (nums, den, bound)),
        ("mixture", (nums, den, candidates, 8)),
        ("archimedean", (nums, den, 8)),
        ("solvability_scan", (nums, den, candidates)),
        ("openness", (nums, den, 8)),
    ]
    for name, args in cases:
        fast_hit = getattr(kernels, f"scan_{name}")(spec, *args)
        pure_hit = getattr(pure, f"scan_{name}")(spec, *args)
        assert fast_hit == pure_hit, f"{name} diverged on {spec}"


@needs_compiled
@pytest.mark.parametrize("utility", [(0, 1, 2), (5, 5, 5), (-2, 7, 1)])
def test_solvability_solve_agrees(utility):
    nums, den = encoded(3)
    fast_hit = kernels.scan_solvability_solve(list(utility), nums, den)
    pure_hit = pure.scan_solvability_solve(list(utility), nums, den)
    assert fast_hit == pure_hit
    # A linear payoff always solves, so the honest answer is no hit.
    assert fast_hit is None


def test_callback_spec_runs_pure():
    # An unencodable oracle arrives as a comparison callback; the
    # dispatcher must route it to the pure backend and still match the
    # integer recipe for the same ranking.
    nums, den = encoded(2)
    utility = (0, 1, 2)

    def cmp(pn, pd, qn, qd):
        dp = sum(u * a for u, a in zip(utility, pn)) * qd
        dq = sum(u * a for u, a in zip(utility, qn)) * pd
        return (dp > dq) - (dp < dq)

    callback_spec = ("callback", (cmp,))
    assert kernels.backend_name(callback_spec, "transitivity", den) == "pure"
    eu_spec = ("eu", utility)
    alphas = pairs(dyadic_alphas(2))
    assert (kernels.scan_independence(callback_spec, nums, den, alphas)
            == pure.scan_independence(eu_spec, nums, den, alphas))
    assert (kernels.scan_transitivity(callback_spec, nums, den)
            == pure.scan_transitivity(eu_spec, nums, den))


@needs_compiled
def test_force_pure_toggle():
    nums, den = encoded(2)
    spec = ("hybrid", ())
    assert kernels.backend_name(spec, "transitivity", den) == "compiled"
    kernels.set_force_pure(True)
    try:
        assert kernels.backend_name(spec, "transitivity", den) == "pure"
        alphas = pairs(dyadic_alphas(2))
        forced = kernels.scan_independence(spec, nums, den, alphas)
    finally:
        kernels.set_force_pure(False)
    assert forced == kernels.scan_independence(spec, nums, den, alphas)


def test_oversized_payoffs_fall_back_to_pure():
    # Payoffs beyond the 64-bit envelope must not reach the C kernels.
    nums, den = encoded(2)
    big = ("eu", (0, 1 << 63, 1 << 64))
    assert kernels.backend_name(big, "transitivity", den) == "pure"
    small = ("eu", (0, 1, 2))
    assert kernels.scan_transitivity(big, nums, den) \
        == kernels.scan_transitivity(small, nums, den)
