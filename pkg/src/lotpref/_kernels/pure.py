"""Reference implementations of the axiom-scan kernels.

Pure Python over unbounded integers: always correct, never fast.  The
compiled twin in _fastscan.pyx mirrors these loops statement for
statement; both must visit candidates in the same order and return the
same first hit, and the parity tests hold them to that.

Conventions shared by every scan:

* ``nums`` is the grid as integer weight tuples over one common ``den``;
* comparisons return the sign of "first minus second";
* weights a/b arrive as integer pairs, already in the caller's order;
* a return of None means the scan exhausted its budget without a hit.
"""

from __future__ import annotations

from math import gcd

__all__ = [
    "make_compare",
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
]


def make_compare(spec):
    """Closure comparing (pnums, pden, qnums, qden) -> sign."""
    kind, params = spec

    if kind == "eu":
        utility = params

        def cmp_eu(pn, pd, qn, qd):
            dp = sum(u * a for u, a in zip(utility, pn))
            dq = sum(u * a for u, a in zip(utility, qn))
            diff = dp * qd - dq * pd
            return (diff > 0) - (diff < 0)

        return cmp_eu

    if kind == "lex":
        priority = params

        def cmp_lex(pn, pd, qn, qd):
            for i in priority:
                diff = pn[i] * qd - qn[i] * pd
                if diff != 0:
                    return 1 if diff > 0 else -1
            return 0

        return cmp_lex

    if kind == "hybrid":

        def cmp_hybrid(pn, pd, qn, qd):
            if 2 * pn[0] == pd and 2 * qn[0] == qd:
                return 0
            for i in range(len(pn)):
                diff = pn[i] * qd - qn[i] * pd
                if diff != 0:
                    return 1 if diff > 0 else -1
            return 0

        return cmp_hybrid

    if kind == "majority":

        def cmp_majority(pn, pd, qn, qd):
            wins = losses = 0
            for i in range(len(pn)):
                diff = pn[i] * qd - qn[i] * pd
                if diff > 0:
                    wins += 1
                elif diff < 0:
                    losses += 1
            return (wins > losses) - (wins < losses)

        return cmp_majority

    if kind == "callback":
        return params[0]

    raise ValueError(f"unknown oracle encoding {kind!r}")


def _mix(pn, qn, a, b):
    """Numerators of (a/b)p + (1 - a/b)q; denominator becomes b*den."""
    c = b - a
    return tuple(a * x + c * y for x, y in zip(pn, qn))


def scan_transitivity(spec, nums, den):
    """First (i, j, k) with i >= j >= k but i < k."""
    cmp = make_compare(spec)
    g = len(nums)
    for i in range(g):
        for j in range(g):
            if cmp(nums[i], den, nums[j], den) < 0:
                continue
            for k in range(g):
                if cmp(nums[j], den, nums[k], den) < 0:
                    continue
                if cmp(nums[i], den, nums[k], den) < 0:
                    return (i, j, k)
    return None


def scan_independence(spec, nums, den, alphas):
    """First (i, j, k, alpha index) where mixing with k flips i-vs-j."""
    cmp = make_compare(spec)
    g = len(nums)
    for i in range(g):
        for j in range(g):
            before = cmp(nums[i], den, nums[j], den)
            for k in range(g):
                for ai, (a, b) in enumerate(alphas):
                    mp = _mix(nums[i], nums[k], a, b)
                    mq = _mix(nums[j], nums[k], a, b)
                    if cmp(mp, b * den, mq, b * den) != before:
                        return (i, j, k, ai)
    return None


def scan_betweenness(spec, nums, den, alphas):
    """First (i, j, alpha index) where i >= j but the mixture escapes
    the closed preference interval [j, i]."""
    cmp = make_compare(spec)
    g = len(nums)
    for i in range(g):
        for j in range(g):
            if cmp(nums[i], den, nums[j], den) < 0:
                continue
            for ai, (a, b) in enumerate(alphas):
                m = _mix(nums[i], nums[j], a, b)
                if cmp(nums[i], den, m, b * den) < 0:
                    return (i, j, ai)
                if cmp(m, b * den, nums[j], den) < 0:
                    return (i, j, ai)
    return None


def scan_convexity(spec, nums, den, alphas):
    """First (i, j, k, alpha index) where j ~ i and k ~ i but their
    mixture is not indifferent to i."""
    cmp = make_compare(spec)
    g = len(nums)
    for i in range(g):
        for j in range(g):
            if cmp(nums[j], den, nums[i], den) != 0:
                continue
            for k in range(g):
                if cmp(nums[k], den, nums[i], den) != 0:
                    continue
                for ai, (a, b) in enumerate(alphas):
                    m = _mix(nums[j], nums[k], a, b)
                    if cmp(m, b * den, nums[i], den) != 0:
                        return (i, j, k, ai)
    return None


def scan_translation(spec, nums, den):
    """First (i, j, k) where k ~ i but the translate k + (j - i), when
    it stays a lottery, is not indifferent to j."""
    cmp = make_compare(spec)
    g = len(nums)
    size = len(nums[0]) if nums else 0
    for i in range(g):
        for j in range(g):
            for k in range(g):
                if cmp(nums[k], den, nums[i], den) != 0:
                    continue
                w = tuple(nums[k][c] + nums[j][c] - nums[i][c] for c in range(size))
                if any(x < 0 for x in w):
                    continue
                if cmp(w, den, nums[j], den) != 0:
                    return (i, j, k)
    return None


# Relation codes for line-order witnesses.
LINE_Q_BEATS_POINT = 0   # t < 0: expect q > point
LINE_P_BEATS_POINT = 1   # 0 < t < 1: expect p > point
LINE_POINT_BEATS_Q = 2   # 0 < t < 1: expect point > q
LINE_POINT_BEATS_P = 3   # t > 1: expect point > p


def scan_line_order(spec, nums, den, max_t_den):
    """First (i, j, tnum, tden, relation) violating the expected order
    along the line point(t) = q + t(p - q), given p > q.

    t runs over reduced rationals with denominator <= max_t_den inside
    the exact parameter interval where the point stays a lottery,
    skipping t = 0 and t = 1 (the endpoints themselves).
    """
    cmp = make_compare(spec)
    g = len(nums)
    size = len(nums[0]) if nums else 0
    for i in range(g):
        for j in range(g):
            if cmp(nums[i], den, nums[j], den) <= 0:
                continue
            p, q = nums[i], nums[j]
            d = tuple(p[c] - q[c] for c in range(size))
            for b in range(1, max_t_den + 1):
                # q + t*d >= 0 per coordinate bounds a = t*b between:
                a_lo, a_hi = None, None
                for c in range(size):
                    if d[c] > 0:
                        # ceil(-q*b/d) with q*b >= 0 is -floor(q*b/d)
                        bound = -((q[c] * b) // d[c])
                        if a_lo is None or bound > a_lo:
                            a_lo = bound
                    elif d[c] < 0:
                        bound = (q[c] * b) // (-d[c])
                        if a_hi is None or bound < a_hi:
                            a_hi = bound
                for a in range(a_lo, a_hi + 1):
                    if a == 0 or a == b or gcd(abs(a), b) != 1:
                        continue
                    pt = tuple(b * q[c] + a * d[c] for c in range(size))
                    pden = b * den
                    if a < 0:
                        if cmp(q, den, pt, pden) != 1:
                            return (i, j, a, b, LINE_Q_BEATS_POINT)
                    elif a < b:
                        if cmp(p, den, pt, pden) != 1:
                            return (i, j, a, b, LINE_P_BEATS_POINT)
                        if cmp(pt, pden, q, den) != 1:
                            return (i, j, a, b, LINE_POINT_BEATS_Q)
                    else:
                        if cmp(pt, pden, p, den) != 1:
                            return (i, j, a, b, LINE_POINT_BEATS_P)
    return None


def _mixture_side(cmp, p, r, q, den, a, b, direction, depth):
    """True when every in-range probe alpha +- 1/2^h stays weakly above q."""
    checked = False
    power = 1
    for _ in range(depth):
        power *= 2
        num = a * power + direction * b
        bden = b * power
        if num < 0 or num > bden:
            continue
        m = _mix(p, r, num, bden)
        if cmp(m, bden * den, q, den) < 0:
            return False
        checked = True
    return checked


def scan_mixture(spec, nums, den, alpha_stars, depth):
    """First (i, j, k, alpha index, side) where the weak upper set
    {alpha : mix(p, r, alpha) >= q} excludes a boundary candidate that
    its one-sided dyadic probes all belong to."""
    cmp = make_compare(spec)
    g = len(nums)
    for i in range(g):
        for j in range(g):
            for k in range(g):
                p, q, r = nums[i], nums[j], nums[k]
                for si, (a, b) in enumerate(alpha_stars):
                    m0 = _mix(p, r, a, b)
                    if cmp(m0, b * den, q, den) >= 0:
                        continue  # candidate inside the set; not a boundary gap
                    if _mixture_side(cmp, p, r, q, den, a, b, 1, depth):
                        return (i, j, k, si, 1)
                    if _mixture_side(cmp, p, r, q, den, a, b, -1, depth):
                        return (i, j, k, si, -1)
    return None


ARCH_SIDE_BETA = 0
ARCH_SIDE_ALPHA = 1


def scan_archimedean(spec, nums, den, depth):
    """First (i, j, k, side) with p > q > r where one side of the
    interior-weight requirement fails at every dyadic probe."""
    cmp = make_compare(spec)
    g = len(nums)
    for i in range(g):
        for j in range(g):
            if cmp(nums[i], den, nums[j], den) <= 0:
                continue
            for k in range(g):
                if cmp(nums[j], den, nums[k], den) <= 0:
                    continue
                p, q, r = nums[i], nums[j], nums[k]
                beta_ok = False
                power = 1
                for _ in range(depth):
                    power *= 2
                    m = _mix(p, r, 1, power)
                    if cmp(q, den, m, power * den) > 0:
                        beta_ok = True
                        break
                if not beta_ok:
                    return (i, j, k, ARCH_SIDE_BETA)
                alpha_ok = False
                power = 1
                for _ in range(depth):
                    power *= 2
                    m = _mix(p, r, power - 1, power)
                    if cmp(m, power * den, q, den) > 0:
                        alpha_ok = True
                        break
                if not alpha_ok:
                    return (i, j, k, ARCH_SIDE_ALPHA)
    return None


def scan_solvability_scan(spec, nums, den, alphas):
    """First (i, j, k) with p >= q >= r that no candidate weight solves."""
    cmp = make_compare(spec)
    g = len(nums)
    for i in range(g):
        for j in range(g):
            if cmp(nums[i], den, nums[j], den) < 0:
                continue
            for k in range(g):
                if cmp(nums[j], den, nums[k], den) < 0:
                    continue
                p, q, r = nums[i], nums[j], nums[k]
                solved = False
                for a, b in alphas:
                    m = _mix(p, r, a, b)
                    if cmp(m, b * den, q, den) == 0:
                        solved = True
                        break
                if not solved:
                    return (i, j, k)
    return None


def scan_solvability_solve(utility, nums, den, depth_unused=None):
    """Contract check for linear oracles: the closed-form weight must
    land exactly on q.  Returns (i, j, k, a, b) on the first failure."""
    g = len(nums)
    dots = [sum(u * x for u, x in zip(utility, pn)) for pn in nums]
    spec = ("eu", tuple(utility))
    cmp = make_compare(spec)
    for i in range(g):
        for j in range(g):
            if dots[i] < dots[j]:
                continue
            for k in range(g):
                if dots[j] < dots[k]:
                    continue
                if dots[i] == dots[k]:
                    a, b = 1, 1
                else:
                    a = dots[j] - dots[k]
                    b = dots[i] - dots[k]
                    gg = gcd(a, b)
                    a //= gg
                    b //= gg
                m = _mix(nums[i], nums[k], a, b)
                if cmp(m, b * den, nums[j], den) != 0:
                    return (i, j, k, a, b)
    return None


def scan_openness(spec, nums, den, depth):
    """First (i, j, k): q strictly compares to p, w sits strictly on the
    other side, and every dyadic step from q toward w stays strictly on
    w's side, so q's side fails to be open at q along that segment."""
    cmp = make_compare(spec)
    g = len(nums)
    for i in range(g):
        for j in range(g):
            side = cmp(nums[j], den, nums[i], den)
            if side == 0:
                continue
            for k in range(g):
                if cmp(nums[k], den, nums[i], den) != -side:
                    continue
                q, w = nums[j], nums[k]
                all_opposite = True
                power = 1
                for _ in range(depth):
                    power *= 2
                    probe = _mix(w, q, 1, power)
                    if cmp(probe, power * den, nums[i], den) != -side:
                        all_opposite = False
                        break
                if all_opposite:
                    return (i, j, k)
    return None
