"""Exact arithmetic in cyclotomic fields Q(zeta_L).

A CycScalar is a residue in Q[x]/Phi_L(x), stored as an integer
numerator polynomial over a common positive denominator.  All
arithmetic is exact; there is no floating point anywhere in the
package.  Values are immutable and safe to share between threads.

q-combinatorics ((n)_q, (n)_q!, Gaussian binomials) live here as well,
since root-of-unity parameters are their only use in this package.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import CoercionError, NotInvertible

from . import _kernels_py

try:  # compiled hot loops; the pure module is the reference implementation
    from . import _ckernels as _K
except ImportError:  # pragma: no cover - depends on build environment
    _K = _kernels_py

_BACKENDS = {"python": _kernels_py}
if _K is not _kernels_py:
    _BACKENDS["c"] = _K


def get_backend() -> str:
    return _K.BACKEND


def set_backend(name: str) -> None:
    """Switch the arithmetic kernel ('python' or 'c').  Used by benchmarks."""
    global _K
    if name not in _BACKENDS:
        raise ValueError("unknown backend %r (have %s)" % (name, sorted(_BACKENDS)))
    _K = _BACKENDS[name]


def _poly_divexact(a, b):
    # exact division of integer polynomials, b monic-leading
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    out = [0] * (len(a) - db)
    for i in range(len(out) - 1, -1, -1):
        c = a[i + db]
        assert c % lb == 0
        q = c // lb
        out[i] = q
        if q:
            for j, bj in enumerate(b):
                a[i + j] -= q * bj
    assert all(c == 0 for c in a)
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(L: int) -> tuple:
    """Integer coefficients of Phi_L, low degree first, monic."""
    assert L >= 1
    if L == 1:
        return (-1, 1)
    num = [0] * (L + 1)
    num[0], num[L] = -1, 1  # x^L - 1
    poly = num
    for d in range(1, L):
        if L % d == 0:
            poly = _poly_divexact(poly, cyclotomic_poly(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _field_degree(L: int) -> int:
    return len(cyclotomic_poly(L)) - 1


@lru_cache(maxsize=None)
def _red_rows(L: int) -> tuple:
    # rows of x^e mod Phi_L for e = d .. 2d-2 (what a product can reach)
    phi = cyclotomic_poly(L)
    d = _field_degree(L)
    top = [-c for c in phi[:d]]  # x^d = top
    rows = [tuple(top)]
    cur = top
    for _ in range(d - 2):
        nxt = [0] + cur[: d - 1]
        c = cur[d - 1]
        if c:
            for k in range(d):
                nxt[k] += c * top[k]
        rows.append(tuple(nxt))
        cur = nxt
    return tuple(rows)


@lru_cache(maxsize=None)
def _power_rows(L: int) -> tuple:
    # x^e mod Phi_L for e = 0 .. L-1, integer rows
    d = _field_degree(L)
    rows = []
    cur = [1] + [0] * (d - 1)
    red = _red_rows(L)
    for _ in range(L):
        rows.append(tuple(cur))
        nxt = [0] + cur[: d - 1]
        c = cur[d - 1]
        if c:
            top = red[0]
            for k in range(d):
                nxt[k] += c * top[k]
        cur = nxt
    return tuple(rows)


def _lcm(a, b):
    return a * b // gcd(a, b)


class CycScalar:
    """An element of Q(zeta_L) in the power basis of Q[x]/Phi_L."""

    __slots__ = ("order", "num", "den")

    def __init__(self, order, num, den):
        # callers must pass normalized data; use the constructors below
        self.order = order
        self.num = num
        self.den = den

    # -- constructors ------------------------------------------------

    @staticmethod
    def rational(p, q=1, order=1):
        if q == 0:
            raise ZeroDivisionError("rational with zero denominator")
        num, den = _K.norm_frac([p] + [0] * (_field_degree(order) - 1), q)
        return CycScalar(order, num, den)

    @staticmethod
    def from_fraction(f: Fraction, order=1):
        return CycScalar.rational(f.numerator, f.denominator, order)

    @staticmethod
    def zero(order=1):
        return CycScalar(order, (0,) * _field_degree(order), 1)

    @staticmethod
    def one(order=1):
        return CycScalar.rational(1, 1, order)

    @staticmethod
    def from_coeffs(order, coeffs):
        """coeffs: map exponent -> Fraction/int, exponents < deg Phi_order."""
        d = _field_degree(order)
        num = [Fraction(0)] * d
        for k, v in coeffs.items():
            k = int(k)
            if not 0 <= k < d:
                raise CoercionError("exponent %d out of range for order %d" % (k, order))
            num[k] = Fraction(v)
        den = 1
        for v in num:
            den = _lcm(den, v.denominator)
        ints, den = _K.norm_frac([int(v * den) for v in num], den)
        return CycScalar(order, ints, den)

    # -- predicates / views -------------------------------------------

    def is_zero(self):
        return not any(self.num)

    def is_one(self):
        return self.den == 1 and self.num[0] == 1 and not any(self.num[1:])

    def is_rational(self):
        return not any(self.num[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise CoercionError("not a rational number: %s" % (self,))
        return Fraction(self.num[0], self.den)

    def coeffs(self):
        """Nonzero basis coefficients as {exponent: Fraction}."""
        return {k: Fraction(c, self.den) for k, c in enumerate(self.num) if c}

    # -- coercion ------------------------------------------------------

    def embed(self, M: int) -> "CycScalar":
        """Image under zeta_L -> zeta_M^(M/L); requires L | M."""
        L = self.order
        if M == L:
            return self
        if M % L != 0:
            raise CoercionError("order %d does not divide %d" % (L, M))
        pows = _power_rows(M)
        step = M // L
        d = _field_degree(M)
        out = [0] * d
        for k, c in enumerate(self.num):
            if c:
                row = pows[(k * step) % M]
                for j, rj in enumerate(row):
                    if rj:
                        out[j] += c * rj
        num, den = _K.norm_frac(out, self.den)
        return CycScalar(M, num, den)

    def _pair(self, other):
        if isinstance(other, int):
            other = CycScalar.rational(other)
        elif isinstance(other, Fraction):
            other = CycScalar.from_fraction(other)
        elif not isinstance(other, CycScalar):
            return None, None
        if self.order == other.order:
            return self, other
        M = _lcm(self.order, other.order)
        return self.embed(M), other.embed(M)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        if type(other) is CycScalar and other.order == self.order:
            if self.den == 1 and other.den == 1:
                return CycScalar(self.order,
                                 tuple(x + y for x, y in zip(self.num, other.num)), 1)
            num, den = _K.cyc_add(self.num, self.den, other.num, other.den)
            return CycScalar(self.order, num, den)
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        num, den = _K.cyc_add(a.num, a.den, b.num, b.den)
        return CycScalar(a.order, num, den)

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.order, tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if type(other) is CycScalar and other.order == self.order:
            o = self.order
            if o == 1:
                if self.den == 1 and other.den == 1:
                    return CycScalar(1, (self.num[0] * other.num[0],), 1)
                return CycScalar(1, *_K.norm_frac([self.num[0] * other.num[0]],
                                                  self.den * other.den))
            return CycScalar(o, *_K.cyc_mul(self.num, self.den,
                                            other.num, other.den, _red_rows(o)))
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        if a.order == 1:
            return CycScalar(1, *_K.norm_frac([a.num[0] * b.num[0]], a.den * b.den))
        num, den = _K.cyc_mul(a.num, a.den, b.num, b.den, _red_rows(a.order))
        return CycScalar(a.order, num, den)

    __rmul__ = __mul__

    def inv(self) -> "CycScalar":
        """Multiplicative inverse; exact, via extended Euclid mod Phi_L."""
        if self.is_zero():
            raise ZeroDivisionError("inverting zero cyclotomic scalar")
        L = self.order
        if self.is_rational():
            num, den = _K.norm_frac(
                [self.den] + [0] * (_field_degree(L) - 1), self.num[0])
            return CycScalar(L, num, den)
        phi = [Fraction(c) for c in cyclotomic_poly(L)]
        a = [Fraction(c, self.den) for c in self.num]
        # extended Euclid: find u with u*a = 1 mod phi
        r0, r1 = phi, a
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            while r1 and r1[-1] == 0:
                r1.pop()
            if len(r1) == 1:
                c = r1[0]
                inv_coeffs = {k: v / c for k, v in enumerate(s1)}
                return CycScalar.from_coeffs(L, inv_coeffs)
            q, rem = _poly_divmod_frac(r0, r1)
            s_new = _poly_sub(s0, _poly_mul_frac(q, s1))
            r0, r1 = r1, rem
            s0, s1 = s1, s_new

    def __truediv__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a * b.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        out = CycScalar.one(self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparison / display ---------------------------------------------

    def __eq__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a.num == b.num and a.den == b.den

    def __bool__(self):
        return not self.is_zero()

    __hash__ = None  # cross-order equality makes hashing unsafe

    def __repr__(self):
        if self.is_rational():
            f = Fraction(self.num[0], self.den)
            return str(f)
        parts = []
        for k, c in enumerate(self.num):
            if not c:
                continue
            f = Fraction(c, self.den)
            term = "z%d^%d" % (self.order, k) if k else "1"
            parts.append("%s*%s" % (f, term) if k else str(f))
        return "(" + " + ".join(parts) + ")"

    def to_json(self):
        return {"order": self.order,
                "coeffs": {str(k): _frac_str(v) for k, v in sorted(self.coeffs().items())}}

    @staticmethod
    def from_json(obj):
        return CycScalar.from_coeffs(int(obj["order"]),
                                     {int(k): Fraction(v) for k, v in obj["coeffs"].items()})


def _frac_str(f: Fraction) -> str:
    return "%d/%d" % (f.numerator, f.denominator) if f.denominator != 1 else str(f.numerator)


def _poly_divmod_frac(a, b):
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    q = [Fraction(0)] * max(len(a) - db, 1)
    for i in range(len(a) - db - 1, -1, -1):
        c = a[i + db] / lb
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return q, a[:db] if db else [Fraction(0)]


def _poly_mul_frac(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    for j, bj in enumerate(b):
        a[j] -= bj
    return a


# ---------------------------------------------------------------------------
# public module-level API


def root_of_unity(L: int, k: int) -> CycScalar:
    """zeta_L^k in normal form; the result order is minimal (divides L)."""
    assert L >= 1
    k %= L
    g = gcd(k, L) if k else L
    L, k = L // g, k // g
    if L == 1:
        return CycScalar.one()
    if L == 2:
        return CycScalar.rational(-1)
    return CycScalar(L, _power_rows(L)[k], 1)


def embed(s: CycScalar, M: int) -> CycScalar:
    return s.embed(M)


def invert(s: CycScalar) -> CycScalar:
    return s.inv()


def scalar(x, order=1) -> CycScalar:
    """Coerce an int/Fraction/CycScalar into Q(zeta_order)."""
    if isinstance(x, CycScalar):
        return x.embed(_lcm(x.order, order)) if order % x.order == 0 else x
    if isinstance(x, int):
        return CycScalar.rational(x, 1, order)
    if isinstance(x, Fraction):
        return CycScalar.from_fraction(x, order)
    raise CoercionError("cannot coerce %r to a cyclotomic scalar" % (x,))


ZERO = CycScalar.zero()
ONE = CycScalar.one()
MINUS_ONE = CycScalar.rational(-1)


def mult_order(q: CycScalar) -> int:
    """Multiplicative order of a root of unity; NotInvertible otherwise."""
    if q.is_zero():
        raise NotInvertible("zero has no multiplicative order")
    bound = 2 * q.order + 1
    p = q
    for n in range(1, bound + 1):
        if p.is_one():
            return n
        p = p * q
    raise NotInvertible("not a root of unity: %r" % (q,))


def q_number(n: int, q: CycScalar) -> CycScalar:
    """(n)_q = 1 + q + ... + q^(n-1)."""
    assert n >= 0
    out = CycScalar.zero(q.order)
    p = CycScalar.one(q.order)
    for _ in range(n):
        out = out + p
        p = p * q
    return out


def q_factorial(n: int, q: CycScalar) -> CycScalar:
    out = CycScalar.one(q.order)
    for j in range(1, n + 1):
        out = out * q_number(j, q)
    return out


def q_binomial(n: int, k: int, q: CycScalar) -> CycScalar:
    """Gaussian binomial (n)_q! / ((k)_q! (n-k)_q!).

    Raises NotInvertible when a denominator factorial vanishes, which is
    the degenerate root-of-unity case.
    """
    assert 0 <= k <= n
    num = q_factorial(n, q)
    dk, dnk = q_factorial(k, q), q_factorial(n - k, q)
    if dk.is_zero() or dnk.is_zero():
        raise NotInvertible("degenerate q: (%d)_q! or (%d)_q! vanishes" % (k, n - k))
    return num * dk.inv() * dnk.inv()
