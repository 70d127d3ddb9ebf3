# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels.

Same signatures as ``_pykernels``. Bitset kernels handle at most 64
elements; ``int_rank`` works in int64 and raises OverflowError when an
intermediate leaves that range. The dispatcher falls back to the Python
kernels in both cases.
"""
from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free

from hibi.errors import LimitExceeded

cdef extern from *:
    """
    static int hibi_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static int hibi_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    int hibi_mul_ovf(long long a, long long b, long long *r) nogil
    int hibi_sub_ovf(long long a, long long b, long long *r) nogil

MAX_BITS = 64


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int lowbit(uint64_t x) nogil:
    return __builtin_ctzll(x)


def lub_table(up):
    cdef Py_ssize_t n = len(up)
    if n > 64:
        raise OverflowError("lub_table: more than 64 elements")
    cdef uint64_t *u = <uint64_t *> malloc(max(n, 1) * sizeof(uint64_t))
    cdef Py_ssize_t x, y
    cdef int z
    cdef uint64_t ub, rest
    out = [-1] * (n * n)
    try:
        for x in range(n):
            u[x] = <uint64_t> up[x]
        for x in range(n):
            for y in range(x, n):
                ub = u[x] & u[y]
                rest = ub
                while rest:
                    z = lowbit(rest)
                    if u[z] & ub == ub:
                        out[x * n + y] = z
                        out[y * n + x] = z
                        break
                    rest &= rest - 1
    finally:
        free(u)
    return out


def distributive_witness(join, meet, Py_ssize_t n):
    cdef int *J = <int *> malloc(max(n * n, 1) * sizeof(int))
    cdef int *M = <int *> malloc(max(n * n, 1) * sizeof(int))
    cdef Py_ssize_t i, x, y, z, xr, yr
    cdef int xy_m, xy_j
    try:
        for i in range(n * n):
            J[i] = join[i]
            M[i] = meet[i]
        for x in range(n):
            xr = x * n
            for y in range(n):
                xy_m = M[xr + y]
                xy_j = J[xr + y]
                yr = y * n
                for z in range(n):
                    if M[xr + J[yr + z]] != J[xy_m * n + M[xr + z]]:
                        return (x, y, z, 1)
                    if J[xr + M[yr + z]] != M[xy_j * n + J[xr + z]]:
                        return (x, y, z, 2)
    finally:
        free(J)
        free(M)
    return None


cdef uint64_t _close(uint64_t mask, uint64_t *skew, uint64_t *main,
                     Py_ssize_t nd) nogil:
    cdef bint changed = True
    cdef Py_ssize_t k
    cdef uint64_t s, t
    while changed:
        changed = False
        for k in range(nd):
            s = skew[k]
            t = main[k]
            if ((mask & s) == s) != ((mask & t) == t):
                mask |= s | t
                changed = True
    return mask


cdef Py_ssize_t _rules(a, b, j, m, uint64_t **skew, uint64_t **main) except -1:
    cdef Py_ssize_t nd = len(a), k
    skew[0] = <uint64_t *> malloc(max(nd, 1) * sizeof(uint64_t))
    main[0] = <uint64_t *> malloc(max(nd, 1) * sizeof(uint64_t))
    for k in range(nd):
        skew[0][k] = (<uint64_t> 1 << <int> a[k]) | (<uint64_t> 1 << <int> b[k])
        main[0][k] = (<uint64_t> 1 << <int> j[k]) | (<uint64_t> 1 << <int> m[k])
    return nd


def embedded_closure(mask, a, b, j, m):
    if mask >> 64:
        raise OverflowError("embedded_closure: more than 64 elements")
    for seq in (a, b, j, m):
        for v in seq:
            if v >= 64:
                raise OverflowError("embedded_closure: more than 64 elements")
    cdef uint64_t *skew = NULL
    cdef uint64_t *main = NULL
    cdef Py_ssize_t nd
    cdef uint64_t res
    try:
        nd = _rules(a, b, j, m, &skew, &main)
        res = _close(<uint64_t> mask, skew, main, nd)
    finally:
        free(skew)
        free(main)
    return res


def enumerate_embedded(Py_ssize_t n, a, b, j, m, cap=None):
    if n > 64:
        raise OverflowError("enumerate_embedded: more than 64 elements")
    cdef uint64_t *skew = NULL
    cdef uint64_t *main = NULL
    cdef Py_ssize_t nd, i
    cdef uint64_t full, current, cand, bit
    cdef long long limit = -1 if cap is None else cap
    cdef long long count
    full = 0xFFFFFFFFFFFFFFFF if n == 64 else ((<uint64_t> 1 << n) - 1)
    out = []
    try:
        nd = _rules(a, b, j, m, &skew, &main)
        current = _close(0, skew, main, nd)
        out.append(current)
        count = 1
        while current != full:
            i = n - 1
            while i >= 0:
                bit = <uint64_t> 1 << i
                if current & bit:
                    current ^= bit
                else:
                    cand = _close(current | bit, skew, main, nd)
                    if ((cand ^ current) & (bit - 1)) == 0:
                        current = cand
                        break
                i -= 1
            out.append(current)
            count += 1
            if limit >= 0 and count > limit:
                raise LimitExceeded(f"more than {cap} embedded sublattices")
    finally:
        free(skew)
        free(main)
    return out


def int_rank(rows):
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0:
        return 0
    cdef Py_ssize_t ncols = len(rows[0])
    cdef long long *a = <long long *> malloc(max(nrows * ncols, 1) * sizeof(long long))
    cdef Py_ssize_t r, c, k, piv, rank = 0
    cdef long long p, f, prev = 1, t1, t2, tmp
    try:
        for r in range(nrows):
            row = rows[r]
            for c in range(ncols):
                a[r * ncols + c] = row[c]
        for c in range(ncols):
            if rank == nrows:
                break
            piv = rank
            while piv < nrows and a[piv * ncols + c] == 0:
                piv += 1
            if piv == nrows:
                continue
            if piv != rank:
                for k in range(ncols):
                    tmp = a[piv * ncols + k]
                    a[piv * ncols + k] = a[rank * ncols + k]
                    a[rank * ncols + k] = tmp
            p = a[rank * ncols + c]
            for r in range(rank + 1, nrows):
                f = a[r * ncols + c]
                for k in range(c + 1, ncols):
                    if hibi_mul_ovf(p, a[r * ncols + k], &t1):
                        raise OverflowError("int_rank: int64 overflow")
                    if hibi_mul_ovf(f, a[rank * ncols + k], &t2):
                        raise OverflowError("int_rank: int64 overflow")
                    if hibi_sub_ovf(t1, t2, &t1):
                        raise OverflowError("int_rank: int64 overflow")
                    a[r * ncols + k] = t1 / prev
                a[r * ncols + c] = 0
            prev = p
            rank += 1
    finally:
        free(a)
    return rank
