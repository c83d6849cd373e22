# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the scan kernels in pure.py.

Same loops, same candidate order, same first hit; the only difference
is fixed-width arithmetic.  Grid numerators and denominators live in 64
bits, cross products in 128; the caller's envelope check guarantees
nothing here can overflow.  Keep every loop in lockstep with pure.py:
the parity tests compare first hits across backends.

cdivision is safe throughout because every division and modulo in this
file has nonnegative operands, where C truncation equals floor.
"""

from libc.stdlib cimport free, malloc

cdef extern from *:
    ctypedef long long int128 "__int128"

cdef enum:
    # Oracle kind codes (must match _kernels._KIND_CODES).
    KIND_EU = 0
    KIND_LEX = 1
    KIND_HYBRID = 2
    KIND_MAJORITY = 3
    # Relation codes mirrored from pure.py.
    LINE_Q_BEATS_POINT = 0
    LINE_P_BEATS_POINT = 1
    LINE_POINT_BEATS_Q = 2
    LINE_POINT_BEATS_P = 3
    ARCH_SIDE_BETA = 0
    ARCH_SIDE_ALPHA = 1


# ---- plumbing ---------------------------------------------------------------


cdef long long* _copy_list(object values) except NULL:
    cdef Py_ssize_t n = len(values)
    cdef long long* arr = <long long*> malloc(
        (n if n > 0 else 1) * sizeof(long long))
    if arr == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    try:
        for i in range(n):
            arr[i] = values[i]
    except BaseException:
        free(arr)
        raise
    return arr


cdef long long* _buf(int size) except NULL:
    cdef long long* arr = <long long*> malloc(
        (size if size > 0 else 1) * sizeof(long long))
    if arr == NULL:
        raise MemoryError()
    return arr


cdef long long _gcd(long long a, long long b) noexcept nogil:
    cdef long long t
    while b != 0:
        t = a % b
        a = b
        b = t
    return a


cdef int _cmp(int kind, long long* U, int nu,
              long long* pn, long long pd,
              long long* qn, long long qd, int size) noexcept nogil:
    """Sign of p minus q under the encoded oracle."""
    cdef int128 dp, dq, diff
    cdef int i, wins, losses
    cdef long long idx
    if kind == KIND_EU:
        dp = 0
        dq = 0
        for i in range(size):
            dp += <int128> U[i] * pn[i]
            dq += <int128> U[i] * qn[i]
        diff = dp * qd - dq * pd
        if diff > 0:
            return 1
        if diff < 0:
            return -1
        return 0
    if kind == KIND_LEX:
        for i in range(nu):
            idx = U[i]
            diff = <int128> pn[idx] * qd - <int128> qn[idx] * pd
            if diff != 0:
                return 1 if diff > 0 else -1
        return 0
    if kind == KIND_HYBRID:
        if 2 * pn[0] == pd and 2 * qn[0] == qd:
            return 0
        for i in range(size):
            diff = <int128> pn[i] * qd - <int128> qn[i] * pd
            if diff != 0:
                return 1 if diff > 0 else -1
        return 0
    # KIND_MAJORITY
    wins = 0
    losses = 0
    for i in range(size):
        diff = <int128> pn[i] * qd - <int128> qn[i] * pd
        if diff > 0:
            wins += 1
        elif diff < 0:
            losses += 1
    if wins > losses:
        return 1
    if wins < losses:
        return -1
    return 0


cdef void _cmix(long long a, long long b, long long* pn, long long* qn,
                long long* out, int size) noexcept nogil:
    """Numerators of (a/b)p + (1 - a/b)q; denominator becomes b*den."""
    cdef long long c = b - a
    cdef int i
    for i in range(size):
        out[i] = a * pn[i] + c * qn[i]


# ---- scans ------------------------------------------------------------------


cdef int _transitivity(int kind, long long* U, int nu, long long* F,
                       int g, int size, long long den,
                       long long* out) noexcept nogil:
    cdef int i, j, k
    for i in range(g):
        for j in range(g):
            if _cmp(kind, U, nu, F + i * size, den, F + j * size, den, size) < 0:
                continue
            for k in range(g):
                if _cmp(kind, U, nu, F + j * size, den, F + k * size, den, size) < 0:
                    continue
                if _cmp(kind, U, nu, F + i * size, den, F + k * size, den, size) < 0:
                    out[0] = i
                    out[1] = j
                    out[2] = k
                    return 1
    return 0


def scan_transitivity(int kind, params, flat, int g, int size, long long den):
    cdef long long* U = NULL
    cdef long long* F = NULL
    cdef int nu = len(params)
    cdef long long out[3]
    cdef int hit = 0
    try:
        U = _copy_list(params)
        F = _copy_list(flat)
        with nogil:
            hit = _transitivity(kind, U, nu, F, g, size, den, out)
    finally:
        free(U)
        free(F)
    if hit:
        return (out[0], out[1], out[2])
    return None


cdef int _independence(int kind, long long* U, int nu, long long* F,
                       int g, int size, long long den,
                       long long* A, int na,
                       long long* m1, long long* m2,
                       long long* out) noexcept nogil:
    cdef int i, j, k, ai, before
    cdef long long a, b
    for i in range(g):
        for j in range(g):
            before = _cmp(kind, U, nu, F + i * size, den, F + j * size, den, size)
            for k in range(g):
                for ai in range(na):
                    a = A[2 * ai]
                    b = A[2 * ai + 1]
                    _cmix(a, b, F + i * size, F + k * size, m1, size)
                    _cmix(a, b, F + j * size, F + k * size, m2, size)
                    if _cmp(kind, U, nu, m1, b * den, m2, b * den, size) != before:
                        out[0] = i
                        out[1] = j
                        out[2] = k
                        out[3] = ai
                        return 1
    return 0


def scan_independence(int kind, params, flat, int g, int size,
                      long long den, alphas_flat):
    cdef long long* U = NULL
    cdef long long* F = NULL
    cdef long long* A = NULL
    cdef long long* m1 = NULL
    cdef long long* m2 = NULL
    cdef int nu = len(params)
    cdef int na = len(alphas_flat) // 2
    cdef long long out[4]
    cdef int hit = 0
    try:
        U = _copy_list(params)
        F = _copy_list(flat)
        A = _copy_list(alphas_flat)
        m1 = _buf(size)
        m2 = _buf(size)
        with nogil:
            hit = _independence(kind, U, nu, F, g, size, den, A, na, m1, m2, out)
    finally:
        free(U)
        free(F)
        free(A)
        free(m1)
        free(m2)
    if hit:
        return (out[0], out[1], out[2], out[3])
    return None


cdef int _betweenness(int kind, long long* U, int nu, long long* F,
                      int g, int size, long long den,
                      long long* A, int na, long long* m1,
                      long long* out) noexcept nogil:
    cdef int i, j, ai
    cdef long long a, b
    for i in range(g):
        for j in range(g):
            if _cmp(kind, U, nu, F + i * size, den, F + j * size, den, size) < 0:
                continue
            for ai in range(na):
                a = A[2 * ai]
                b = A[2 * ai + 1]
                _cmix(a, b, F + i * size, F + j * size, m1, size)
                if _cmp(kind, U, nu, F + i * size, den, m1, b * den, size) < 0:
                    out[0] = i
                    out[1] = j
                    out[2] = ai
                    return 1
                if _cmp(kind, U, nu, m1, b * den, F + j * size, den, size) < 0:
                    out[0] = i
                    out[1] = j
                    out[2] = ai
                    return 1
    return 0


def scan_betweenness(int kind, params, flat, int g, int size,
                     long long den, alphas_flat):
    cdef long long* U = NULL
    cdef long long* F = NULL
    cdef long long* A = NULL
    cdef long long* m1 = NULL
    cdef int nu = len(params)
    cdef int na = len(alphas_flat) // 2
    cdef long long out[3]
    cdef int hit = 0
    try:
        U = _copy_list(params)
        F = _copy_list(flat)
        A = _copy_list(alphas_flat)
        m1 = _buf(size)
        with nogil:
            hit = _betweenness(kind, U, nu, F, g, size, den, A, na, m1, out)
    finally:
        free(U)
        free(F)
        free(A)
        free(m1)
    if hit:
        return (out[0], out[1], out[2])
    return None


cdef int _convexity(int kind, long long* U, int nu, long long* F,
                    int g, int size, long long den,
                    long long* A, int na, long long* m1,
                    long long* out) noexcept nogil:
    cdef int i, j, k, ai
    cdef long long a, b
    for i in range(g):
        for j in range(g):
            if _cmp(kind, U, nu, F + j * size, den, F + i * size, den, size) != 0:
                continue
            for k in range(g):
                if _cmp(kind, U, nu, F + k * size, den, F + i * size, den, size) != 0:
                    continue
                for ai in range(na):
                    a = A[2 * ai]
                    b = A[2 * ai + 1]
                    _cmix(a, b, F + j * size, F + k * size, m1, size)
                    if _cmp(kind, U, nu, m1, b * den, F + i * size, den, size) != 0:
                        out[0] = i
                        out[1] = j
                        out[2] = k
                        out[3] = ai
                        return 1
    return 0


def scan_convexity(int kind, params, flat, int g, int size,
                   long long den, alphas_flat):
    cdef long long* U = NULL
    cdef long long* F = NULL
    cdef long long* A = NULL
    cdef long long* m1 = NULL
    cdef int nu = len(params)
    cdef int na = len(alphas_flat) // 2
    cdef long long out[4]
    cdef int hit = 0
    try:
        U = _copy_list(params)
        F = _copy_list(flat)
        A = _copy_list(alphas_flat)
        m1 = _buf(size)
        with nogil:
            hit = _convexity(kind, U, nu, F, g, size, den, A, na, m1, out)
    finally:
        free(U)
        free(F)
        free(A)
        free(m1)
    if hit:
        return (out[0], out[1], out[2], out[3])
    return None


cdef int _translation(int kind, long long* U, int nu, long long* F,
                      int g, int size, long long den, long long* w,
                      long long* out) noexcept nogil:
    cdef int i, j, k, c, ok
    for i in range(g):
        for j in range(g):
            for k in range(g):
                if _cmp(kind, U, nu, F + k * size, den, F + i * size, den, size) != 0:
                    continue
                ok = 1
                for c in range(size):
                    w[c] = F[k * size + c] + F[j * size + c] - F[i * size + c]
                    if w[c] < 0:
                        ok = 0
                        break
                if not ok:
                    continue
                if _cmp(kind, U, nu, w, den, F + j * size, den, size) != 0:
                    out[0] = i
                    out[1] = j
                    out[2] = k
                    return 1
    return 0


def scan_translation(int kind, params, flat, int g, int size, long long den):
    cdef long long* U = NULL
    cdef long long* F = NULL
    cdef long long* w = NULL
    cdef int nu = len(params)
    cdef long long out[3]
    cdef int hit = 0
    try:
        U = _copy_list(params)
        F = _copy_list(flat)
        w = _buf(size)
        with nogil:
            hit = _translation(kind, U, nu, F, g, size, den, w, out)
    finally:
        free(U)
        free(F)
        free(w)
    if hit:
        return (out[0], out[1], out[2])
    return None


cdef int _line_order(int kind, long long* U, int nu, long long* F,
                     int g, int size, long long den, long long max_t_den,
                     long long* d, long long* pt,
                     long long* out) noexcept nogil:
    cdef int i, j, c
    cdef long long b, a, a_lo, a_hi, bound, pden
    cdef int has_lo, has_hi
    cdef long long* p
    cdef long long* q
    for i in range(g):
        for j in range(g):
            if _cmp(kind, U, nu, F + i * size, den, F + j * size, den, size) <= 0:
                continue
            p = F + i * size
            q = F + j * size
            for c in range(size):
                d[c] = p[c] - q[c]
            for b in range(1, max_t_den + 1):
                # q + t*d >= 0 per coordinate bounds a = t*b between:
                a_lo = 0
                a_hi = 0
                has_lo = 0
                has_hi = 0
                for c in range(size):
                    if d[c] > 0:
                        # ceil(-q*b/d) with q*b >= 0 is -floor(q*b/d)
                        bound = -((q[c] * b) // d[c])
                        if not has_lo or bound > a_lo:
                            a_lo = bound
                            has_lo = 1
                    elif d[c] < 0:
                        bound = (q[c] * b) // (-d[c])
                        if not has_hi or bound < a_hi:
                            a_hi = bound
                            has_hi = 1
                if not has_lo or not has_hi:
                    continue  # unreachable: p != q and both sum to den
                for a in range(a_lo, a_hi + 1):
                    if a == 0 or a == b:
                        continue
                    if _gcd(a if a >= 0 else -a, b) != 1:
                        continue
                    for c in range(size):
                        pt[c] = <long long> (<int128> b * q[c] + <int128> a * d[c])
                    pden = b * den
                    if a < 0:
                        if _cmp(kind, U, nu, q, den, pt, pden, size) != 1:
                            out[0] = i
                            out[1] = j
                            out[2] = a
                            out[3] = b
                            out[4] = LINE_Q_BEATS_POINT
                            return 1
                    elif a < b:
                        if _cmp(kind, U, nu, p, den, pt, pden, size) != 1:
                            out[0] = i
                            out[1] = j
                            out[2] = a
                            out[3] = b
                            out[4] = LINE_P_BEATS_POINT
                            return 1
                        if _cmp(kind, U, nu, pt, pden, q, den, size) != 1:
                            out[0] = i
                            out[1] = j
                            out[2] = a
                            out[3] = b
                            out[4] = LINE_POINT_BEATS_Q
                            return 1
                    else:
                        if _cmp(kind, U, nu, pt, pden, p, den, size) != 1:
                            out[0] = i
                            out[1] = j
                            out[2] = a
                            out[3] = b
                            out[4] = LINE_POINT_BEATS_P
                            return 1
    return 0


def scan_line_order(int kind, params, flat, int g, int size,
                    long long den, long long max_t_den):
    cdef long long* U = NULL
    cdef long long* F = NULL
    cdef long long* d = NULL
    cdef long long* pt = NULL
    cdef int nu = len(params)
    cdef long long out[5]
    cdef int hit = 0
    try:
        U = _copy_list(params)
        F = _copy_list(flat)
        d = _buf(size)
        pt = _buf(size)
        with nogil:
            hit = _line_order(kind, U, nu, F, g, size, den, max_t_den, d, pt, out)
    finally:
        free(U)
        free(F)
        free(d)
        free(pt)
    if hit:
        return (out[0], out[1], out[2], out[3], out[4])
    return None


cdef int _mixture_side(int kind, long long* U, int nu,
                       long long* p, long long* r, long long* q,
                       long long den, long long a, long long b,
                       int direction, int depth,
                       long long* buf, int size) noexcept nogil:
    """1 when every in-range probe alpha +- 1/2^h stays weakly above q."""
    cdef int checked = 0
    cdef long long power = 1
    cdef long long num, bden
    cdef int h
    for h in range(depth):
        power *= 2
        num = a * power + direction * b
        bden = b * power
        if num < 0 or num > bden:
            continue
        _cmix(num, bden, p, r, buf, size)
        if _cmp(kind, U, nu, buf, bden * den, q, den, size) < 0:
            return 0
        checked = 1
    return checked


cdef int _mixture(int kind, long long* U, int nu, long long* F,
                  int g, int size, long long den,
                  long long* A, int na, int depth,
                  long long* m0, long long* probe,
                  long long* out) noexcept nogil:
    cdef int i, j, k, si
    cdef long long a, b
    cdef long long* p
    cdef long long* q
    cdef long long* r
    for i in range(g):
        for j in range(g):
            for k in range(g):
                p = F + i * size
                q = F + j * size
                r = F + k * size
                for si in range(na):
                    a = A[2 * si]
                    b = A[2 * si + 1]
                    _cmix(a, b, p, r, m0, size)
                    if _cmp(kind, U, nu, m0, b * den, q, den, size) >= 0:
                        continue  # candidate inside the set; not a boundary gap
                    if _mixture_side(kind, U, nu, p, r, q, den, a, b, 1,
                                     depth, probe, size):
                        out[0] = i
                        out[1] = j
                        out[2] = k
                        out[3] = si
                        out[4] = 1
                        return 1
                    if _mixture_side(kind, U, nu, p, r, q, den, a, b, -1,
                                     depth, probe, size):
                        out[0] = i
                        out[1] = j
                        out[2] = k
                        out[3] = si
                        out[4] = -1
                        return 1
    return 0


def scan_mixture(int kind, params, flat, int g, int size,
                 long long den, alphas_flat, int depth):
    cdef long long* U = NULL
    cdef long long* F = NULL
    cdef long long* A = NULL
    cdef long long* m0 = NULL
    cdef long long* probe = NULL
    cdef int nu = len(params)
    cdef int na = len(alphas_flat) // 2
    cdef long long out[5]
    cdef int hit = 0
    try:
        U = _copy_list(params)
        F = _copy_list(flat)
        A = _copy_list(alphas_flat)
        m0 = _buf(size)
        probe = _buf(size)
        with nogil:
            hit = _mixture(kind, U, nu, F, g, size, den, A, na, depth,
                           m0, probe, out)
    finally:
        free(U)
        free(F)
        free(A)
        free(m0)
        free(probe)
    if hit:
        return (out[0], out[1], out[2], out[3], out[4])
    return None


cdef int _archimedean(int kind, long long* U, int nu, long long* F,
                      int g, int size, long long den, int depth,
                      long long* buf, long long* out) noexcept nogil:
    cdef int i, j, k, h, beta_ok, alpha_ok
    cdef long long power
    cdef long long* p
    cdef long long* q
    cdef long long* r
    for i in range(g):
        for j in range(g):
            if _cmp(kind, U, nu, F + i * size, den, F + j * size, den, size) <= 0:
                continue
            for k in range(g):
                if _cmp(kind, U, nu, F + j * size, den, F + k * size, den, size) <= 0:
                    continue
                p = F + i * size
                q = F + j * size
                r = F + k * size
                beta_ok = 0
                power = 1
                for h in range(depth):
                    power *= 2
                    _cmix(1, power, p, r, buf, size)
                    if _cmp(kind, U, nu, q, den, buf, power * den, size) > 0:
                        beta_ok = 1
                        break
                if not beta_ok:
                    out[0] = i
                    out[1] = j
                    out[2] = k
                    out[3] = ARCH_SIDE_BETA
                    return 1
                alpha_ok = 0
                power = 1
                for h in range(depth):
                    power *= 2
                    _cmix(power - 1, power, p, r, buf, size)
                    if _cmp(kind, U, nu, buf, power * den, q, den, size) > 0:
                        alpha_ok = 1
                        break
                if not alpha_ok:
                    out[0] = i
                    out[1] = j
                    out[2] = k
                    out[3] = ARCH_SIDE_ALPHA
                    return 1
    return 0


def scan_archimedean(int kind, params, flat, int g, int size,
                     long long den, int depth):
    cdef long long* U = NULL
    cdef long long* F = NULL
    cdef long long* buf = NULL
    cdef int nu = len(params)
    cdef long long out[4]
    cdef int hit = 0
    try:
        U = _copy_list(params)
        F = _copy_list(flat)
        buf = _buf(size)
        with nogil:
            hit = _archimedean(kind, U, nu, F, g, size, den, depth, buf, out)
    finally:
        free(U)
        free(F)
        free(buf)
    if hit:
        return (out[0], out[1], out[2], out[3])
    return None


cdef int _solvability_scan(int kind, long long* U, int nu, long long* F,
                           int g, int size, long long den,
                           long long* A, int na, long long* buf,
                           long long* out) noexcept nogil:
    cdef int i, j, k, ai, solved
    cdef long long a, b
    for i in range(g):
        for j in range(g):
            if _cmp(kind, U, nu, F + i * size, den, F + j * size, den, size) < 0:
                continue
            for k in range(g):
                if _cmp(kind, U, nu, F + j * size, den, F + k * size, den, size) < 0:
                    continue
                solved = 0
                for ai in range(na):
                    a = A[2 * ai]
                    b = A[2 * ai + 1]
                    _cmix(a, b, F + i * size, F + k * size, buf, size)
                    if _cmp(kind, U, nu, buf, b * den, F + j * size, den, size) == 0:
                        solved = 1
                        break
                if not solved:
                    out[0] = i
                    out[1] = j
                    out[2] = k
                    return 1
    return 0


def scan_solvability_scan(int kind, params, flat, int g, int size,
                          long long den, alphas_flat):
    cdef long long* U = NULL
    cdef long long* F = NULL
    cdef long long* A = NULL
    cdef long long* buf = NULL
    cdef int nu = len(params)
    cdef int na = len(alphas_flat) // 2
    cdef long long out[3]
    cdef int hit = 0
    try:
        U = _copy_list(params)
        F = _copy_list(flat)
        A = _copy_list(alphas_flat)
        buf = _buf(size)
        with nogil:
            hit = _solvability_scan(kind, U, nu, F, g, size, den, A, na, buf, out)
    finally:
        free(U)
        free(F)
        free(A)
        free(buf)
    if hit:
        return (out[0], out[1], out[2])
    return None


cdef int _solvability_solve(long long* U, long long* F, int g, int size,
                            long long den, long long* dots, long long* buf,
                            long long* out) noexcept nogil:
    cdef int i, j, k, c
    cdef long long a, b, gg
    cdef int128 acc
    for i in range(g):
        acc = 0
        for c in range(size):
            acc += <int128> U[c] * F[i * size + c]
        dots[i] = <long long> acc  # bounded by u*den: fits
    for i in range(g):
        for j in range(g):
            if dots[i] < dots[j]:
                continue
            for k in range(g):
                if dots[j] < dots[k]:
                    continue
                if dots[i] == dots[k]:
                    a = 1
                    b = 1
                else:
                    a = dots[j] - dots[k]
                    b = dots[i] - dots[k]
                    gg = _gcd(a, b)
                    a //= gg
                    b //= gg
                _cmix(a, b, F + i * size, F + k * size, buf, size)
                if _cmp(KIND_EU, U, size, buf, b * den,
                        F + j * size, den, size) != 0:
                    out[0] = i
                    out[1] = j
                    out[2] = k
                    out[3] = a
                    out[4] = b
                    return 1
    return 0


def scan_solvability_solve(utility, flat, int g, int size, long long den):
    cdef long long* U = NULL
    cdef long long* F = NULL
    cdef long long* dots = NULL
    cdef long long* buf = NULL
    cdef long long out[5]
    cdef int hit = 0
    try:
        U = _copy_list(utility)
        F = _copy_list(flat)
        dots = _buf(g)
        buf = _buf(size)
        with nogil:
            hit = _solvability_solve(U, F, g, size, den, dots, buf, out)
    finally:
        free(U)
        free(F)
        free(dots)
        free(buf)
    if hit:
        return (out[0], out[1], out[2], out[3], out[4])
    return None


cdef int _openness(int kind, long long* U, int nu, long long* F,
                   int g, int size, long long den, int depth,
                   long long* buf, long long* out) noexcept nogil:
    cdef int i, j, k, h, side, all_opposite
    cdef long long power
    cdef long long* q
    cdef long long* w
    for i in range(g):
        for j in range(g):
            side = _cmp(kind, U, nu, F + j * size, den, F + i * size, den, size)
            if side == 0:
                continue
            for k in range(g):
                if _cmp(kind, U, nu, F + k * size, den, F + i * size, den, size) != -side:
                    continue
                q = F + j * size
                w = F + k * size
                all_opposite = 1
                power = 1
                for h in range(depth):
                    power *= 2
                    _cmix(1, power, w, q, buf, size)
                    if _cmp(kind, U, nu, buf, power * den,
                            F + i * size, den, size) != -side:
                        all_opposite = 0
                        break
                if all_opposite:
                    out[0] = i
                    out[1] = j
                    out[2] = k
                    return 1
    return 0


def scan_openness(int kind, params, flat, int g, int size,
                  long long den, int depth):
    cdef long long* U = NULL
    cdef long long* F = NULL
    cdef long long* buf = NULL
    cdef int nu = len(params)
    cdef long long out[3]
    cdef int hit = 0
    try:
        U = _copy_list(params)
        F = _copy_list(flat)
        buf = _buf(size)
        with nogil:
            hit = _openness(kind, U, nu, F, g, size, den, depth, buf, out)
    finally:
        free(U)
        free(F)
        free(buf)
    if hit:
        return (out[0], out[1], out[2])
    return None
