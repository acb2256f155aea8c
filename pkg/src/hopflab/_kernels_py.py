"""Pure-Python arithmetic kernels for cyclotomic scalars.

A scalar in Q(zeta_L) is held as (num, den): `num` a tuple of ints of
length deg(Phi_L) giving the numerator polynomial in the power basis
1, zeta, ..., zeta^(d-1), and `den` a positive int with
gcd(den, *num) == 1.  The functions here are the inner loops of every
structure-constant computation; hopflab._ckernels is a compiled twin
with the same signatures.
"""

from math import gcd

BACKEND = "python"


def norm_frac(num, den):
    """Normalize (num list, den) to lowest terms with den > 0."""
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
    """Multiply integer polynomials a, b (len d) and reduce mod Phi.

    `red` holds, for e = d .. 2d-2, the row of x^e mod Phi as a tuple of
    ints (red[e - d]).  Returns a tuple of length d.
    """
    d = len(a)
    work = [0] * (2 * d - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    work[i + j] += ai * bj
    out = work[:d]
    for e in range(d, 2 * d - 1):
        c = work[e]
        if c:
            row = red[e - d]
            for k, rk in enumerate(row):
                if rk:
                    out[k] += c * rk
    return tuple(out)


def cyc_mul(n1, d1, n2, d2, red):
    """(n1/d1) * (n2/d2) in Q[x]/Phi, normalized."""
    if len(n1) == 1:
        return norm_frac([n1[0] * n2[0]], d1 * d2)
    return norm_frac(list(poly_mulred(n1, n2, red)), d1 * d2)


def cyc_add(n1, d1, n2, d2):
    """(n1/d1) + (n2/d2), normalized."""
    if d1 == d2:
        if d1 == 1:
            return tuple(a + b for a, b in zip(n1, n2)), 1
        return norm_frac([a + b for a, b in zip(n1, n2)], d1)
    return norm_frac([a * d2 + b * d1 for a, b in zip(n1, n2)], d1 * d2)


def cyc_scale(n1, d1, p, q, red=None):
    """(n1/d1) * (p/q) for a plain rational p/q."""
    return norm_frac([c * p for c in n1], d1 * q)
