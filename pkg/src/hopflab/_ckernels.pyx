# cython: language_level=3
"""Compiled twin of hopflab._kernels_py.

Same signatures, same exact integer arithmetic (coefficients stay
arbitrary-precision Python ints; Cython removes the interpreter loop
overhead, which dominates these small-degree polynomial kernels).
"""

from math import gcd

BACKEND = "c"


def norm_frac(num, den):
    cdef Py_ssize_t i, n
    cdef object g, c
    if den < 0:
        den = -den
        num = [-c for c in num]
    g = den
    for c in num:
        if c:
            g = gcd(g, c)
            if g == 1:
                break
    if g > 1:
        den //= g
        num = [c // g for c in num]
    return tuple(num), den


def poly_mulred(a, b, red):
    cdef Py_ssize_t d = len(a)
    cdef Py_ssize_t i, j, e, k
    cdef list work = [0] * (2 * d - 1)
    cdef object ai, bj, c, rk
    for i in range(d):
        ai = a[i]
        if ai:
            for j in range(d):
                bj = b[j]
                if bj:
                    work[i + j] = work[i + j] + ai * bj
    cdef list out = work[:d]
    for e in range(d, 2 * d - 1):
        c = work[e]
        if c:
            row = red[e - d]
            for k in range(d):
                rk = row[k]
                if rk:
                    out[k] = out[k] + c * rk
    return tuple(out)


def cyc_mul(n1, d1, n2, d2, red):
    if len(n1) == 1:
        return norm_frac([n1[0] * n2[0]], d1 * d2)
    return norm_frac(list(poly_mulred(n1, n2, red)), d1 * d2)


def cyc_add(n1, d1, n2, d2):
    cdef Py_ssize_t i, n
    if d1 == d2:
        if d1 == 1:
            return tuple([a + b for a, b in zip(n1, n2)]), 1
        return norm_frac([a + b for a, b in zip(n1, n2)], d1)
    return norm_frac([a * d2 + b * d1 for a, b in zip(n1, n2)], d1 * d2)


def cyc_scale(n1, d1, p, q, red=None):
    return norm_frac([c * p for c in n1], d1 * q)
