"""Scan kernel dispatch: compiled extension when safe, pure otherwise.

Each wrapper here has the same signature and semantics as its twin in
``pure``; the only decision made is which backend runs.  The compiled
path is taken when the extension imported, the oracle encoding is one
the C code knows, and the integer envelope fits 128-bit intermediates.
Set LOTPREF_PURE=1 (or call set_force_pure) to pin the pure backend.
"""

from __future__ import annotations

import os

from . import encoding, pure
from .encoding import encode_lotteries, encode_oracle, envelope_ok

try:
    from . import _fastscan as _fast
except ImportError:
    _fast = None

_KIND_CODES = {"eu": 0, "lex": 1, "hybrid": 2, "majority": 3}
_force_pure = os.environ.get("LOTPREF_PURE") == "1"

__all__ = [
    "encode_lotteries",
    "encode_oracle",
    "envelope_ok",
    "have_compiled",
    "set_force_pure",
    "backend_name",
    "scan_transitivity",
    "scan_independence",
    "scan_betweenness",
    "scan_convexity",
    "scan_translation",
    "scan_line_order",
    "scan_mixture",
    "scan_archimedean",
    "scan_solvability_scan",
    "scan_solvability_solve",
    "scan_openness",
    "LINE_Q_BEATS_POINT",
    "LINE_P_BEATS_POINT",
    "LINE_POINT_BEATS_Q",
    "LINE_POINT_BEATS_P",
    "ARCH_SIDE_BETA",
    "ARCH_SIDE_ALPHA",
]

LINE_Q_BEATS_POINT = pure.LINE_Q_BEATS_POINT
LINE_P_BEATS_POINT = pure.LINE_P_BEATS_POINT
LINE_POINT_BEATS_Q = pure.LINE_POINT_BEATS_Q
LINE_POINT_BEATS_P = pure.LINE_POINT_BEATS_P
ARCH_SIDE_BETA = pure.ARCH_SIDE_BETA
ARCH_SIDE_ALPHA = pure.ARCH_SIDE_ALPHA


def have_compiled() -> bool:
    return _fast is not None


def set_force_pure(flag: bool):
    global _force_pure
    _force_pure = flag


def _can_compile(spec, scan: str, den: int, **limits) -> bool:
    if _fast is None or _force_pure:
        return False
    if spec[0] not in _KIND_CODES:
        return False
    return envelope_ok(spec, scan, den, **limits)


def backend_name(spec, scan: str, den: int, **limits) -> str:
    return "compiled" if _can_compile(spec, scan, den, **limits) else "pure"


def _flat(nums) -> list[int]:
    return [x for row in nums for x in row]


def _flat_pairs(pairs) -> list[int]:
    return [x for pair in pairs for x in pair]


def _fast_args(spec, nums):
    return (_KIND_CODES[spec[0]], list(spec[1]), _flat(nums),
            len(nums), len(nums[0]) if nums else 0)


def _max_den(alphas) -> int:
    return max((b for _, b in alphas), default=1)


def scan_transitivity(spec, nums, den):
    if _can_compile(spec, "transitivity", den):
        kind, params, flat, g, size = _fast_args(spec, nums)
        return _fast.scan_transitivity(kind, params, flat, g, size, den)
    return pure.scan_transitivity(spec, nums, den)


def scan_independence(spec, nums, den, alphas):
    if _can_compile(spec, "independence", den, max_alpha_den=_max_den(alphas)):
        kind, params, flat, g, size = _fast_args(spec, nums)
        return _fast.scan_independence(
            kind, params, flat, g, size, den, _flat_pairs(alphas))
    return pure.scan_independence(spec, nums, den, alphas)


def scan_betweenness(spec, nums, den, alphas):
    if _can_compile(spec, "betweenness", den, max_alpha_den=_max_den(alphas)):
        kind, params, flat, g, size = _fast_args(spec, nums)
        return _fast.scan_betweenness(
            kind, params, flat, g, size, den, _flat_pairs(alphas))
    return pure.scan_betweenness(spec, nums, den, alphas)


def scan_convexity(spec, nums, den, alphas):
    if _can_compile(spec, "convexity", den, max_alpha_den=_max_den(alphas)):
        kind, params, flat, g, size = _fast_args(spec, nums)
        return _fast.scan_convexity(
            kind, params, flat, g, size, den, _flat_pairs(alphas))
    return pure.scan_convexity(spec, nums, den, alphas)


def scan_translation(spec, nums, den):
    if _can_compile(spec, "translation", den):
        kind, params, flat, g, size = _fast_args(spec, nums)
        return _fast.scan_translation(kind, params, flat, g, size, den)
    return pure.scan_translation(spec, nums, den)


def scan_line_order(spec, nums, den, max_t_den):
    if _can_compile(spec, "line_order", den, max_t_den=max_t_den):
        kind, params, flat, g, size = _fast_args(spec, nums)
        return _fast.scan_line_order(kind, params, flat, g, size, den, max_t_den)
    return pure.scan_line_order(spec, nums, den, max_t_den)


def scan_mixture(spec, nums, den, alpha_stars, depth):
    if _can_compile(spec, "mixture", den,
                    max_alpha_den=_max_den(alpha_stars), depth=depth):
        kind, params, flat, g, size = _fast_args(spec, nums)
        return _fast.scan_mixture(
            kind, params, flat, g, size, den, _flat_pairs(alpha_stars), depth)
    return pure.scan_mixture(spec, nums, den, alpha_stars, depth)


def scan_archimedean(spec, nums, den, depth):
    if _can_compile(spec, "archimedean", den, depth=depth):
        kind, params, flat, g, size = _fast_args(spec, nums)
        return _fast.scan_archimedean(kind, params, flat, g, size, den, depth)
    return pure.scan_archimedean(spec, nums, den, depth)


def scan_solvability_scan(spec, nums, den, alphas):
    if _can_compile(spec, "solvability_scan", den, max_alpha_den=_max_den(alphas)):
        kind, params, flat, g, size = _fast_args(spec, nums)
        return _fast.scan_solvability_scan(
            kind, params, flat, g, size, den, _flat_pairs(alphas))
    return pure.scan_solvability_scan(spec, nums, den, alphas)


def scan_solvability_solve(utility, nums, den):
    spec = ("eu", tuple(utility))
    if _can_compile(spec, "solvability_solve", den):
        return _fast.scan_solvability_solve(
            list(utility), _flat(nums), len(nums),
            len(nums[0]) if nums else 0, den)
    return pure.scan_solvability_solve(utility, nums, den)


def scan_openness(spec, nums, den, depth):
    if _can_compile(spec, "openness", den, depth=depth):
        kind, params, flat, g, size = _fast_args(spec, nums)
        return _fast.scan_openness(kind, params, flat, g, size, den, depth)
    return pure.scan_openness(spec, nums, den, depth)
