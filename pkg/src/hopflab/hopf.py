"""Finite-dimensional Hopf algebras as basis-indexed structure constants.

A HopfData holds multiplication, comultiplication, unit, counit and
(optionally) the antipode of a Hopf algebra over Q(zeta_L), all as
sparse tables.  Verifiers re-check every axiom from the tables; nothing
is trusted.  Dualization transposes the tables on the dual basis and is
an exact involution.

Instances are immutable once construction (including antipode
attachment) finishes; verifiers are pure.
"""

from __future__ import annotations

import itertools

from .scalars import CycScalar, scalar
from .linalg import (SparseMat, algebra_mul, convolution_product,
                     convolution_unit, convolution_inverse, mat_inverse,
                     v_add_into, v_eq, Echelon)
from .errors import NotInvertible, VerificationError


class Check:
    __slots__ = ("name", "ok", "witness")

    def __init__(self, name, ok, witness=None):
        self.name = name
        self.ok = ok
        self.witness = witness

    def __repr__(self):
        tail = "" if self.ok or self.witness is None else " at %r" % (self.witness,)
        return "%s: %s%s" % (self.name, "pass" if self.ok else "FAIL", tail)


class Report:
    """Per-axiom verification outcome; truthy iff everything passed."""

    def __init__(self, title, checks=None):
        self.title = title
        self.checks = list(checks or [])

    def add(self, name, ok, witness=None):
        self.checks.append(Check(name, ok, witness))

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def __bool__(self):
        return self.ok

    def lines(self):
        out = ["%s: %s" % (self.title, "pass" if self.ok else "FAIL")]
        out.extend("  " + repr(c) for c in self.checks)
        return out

    def __repr__(self):
        return "\n".join(self.lines())

    def require(self):
        if not self.ok:
            raise VerificationError(repr(self))
        return self


class HopfData:
    def __init__(self, dim, order, labels, mult, comult, unit, counit,
                 antipode=None, grading=None, generators=None,
                 distinguished=None):
        self.dim = dim
        self.order = order
        self.labels = list(labels)
        self._mult = mult        # (i, j) -> {k: scalar}
        self._comult = comult    # i -> {(j, k): scalar}
        self._unit = dict(unit)  # {i: scalar}
        self._counit = dict(counit)
        self.antipode = antipode            # SparseMat or None
        self._antipode_cols = antipode.cols_dict() if antipode else None
        self.grading = list(grading) if grading is not None else None
        # a deformation can break gradedness on one side only
        self.mult_graded = grading is not None
        self.delta_graded = grading is not None
        self.generators = tuple(generators) if generators is not None else None
        self.distinguished = distinguished  # [(indices tuple, kind str), ...]
        self.aux = {}

    # -- protocol used by linalg ------------------------------------------

    def basis(self):
        return range(self.dim)

    def degree(self, i):
        # algebra-side grading, used by Neumann fast paths
        return self.grading[i] if (self.grading is not None and self.mult_graded) else None

    def max_degree(self):
        return max(self.grading)

    def cograding(self):
        # coalgebra-side grading, used by graded convolution inverses
        return self.grading if (self.grading is not None and self.delta_graded) else None

    def mult(self, i, j) -> dict:
        return self._mult.get((i, j), _EMPTY)

    def comult(self, i) -> dict:
        return self._comult.get(i, _EMPTY)

    def unit(self) -> dict:
        return self._unit

    def counit(self) -> dict:
        return self._counit

    # -- element helpers -----------------------------------------------------

    def product(self, u: dict, v: dict) -> dict:
        return algebra_mul(self, u, v)

    def coproduct(self, u: dict) -> dict:
        out: dict = {}
        for i, c in u.items():
            v_add_into(out, self._comult.get(i, _EMPTY), c)
        return out

    def counit_of(self, u: dict) -> CycScalar:
        acc = scalar(0)
        for i, c in u.items():
            e = self._counit.get(i)
            if e is not None:
                acc = acc + e * c
        return acc

    def antipode_of(self, u: dict) -> dict:
        assert self._antipode_cols is not None, "antipode not attached"
        out: dict = {}
        for i, c in u.items():
            v_add_into(out, self._antipode_cols[i], c)
        return out

    def coproduct_iter(self, u: dict, n: int) -> dict:
        """Iterated coproduct: keys are (n+1)-tuples."""
        cur = {(i,): c for i, c in u.items()}
        for _ in range(n):
            nxt: dict = {}
            for key, c in cur.items():
                for (j, k), d in self._comult.get(key[-1], _EMPTY).items():
                    kk = key[:-1] + (j, k)
                    cur_v = nxt.get(kk)
                    s = c * d if cur_v is None else cur_v + c * d
                    if s.is_zero():
                        nxt.pop(kk, None)
                    else:
                        nxt[kk] = s
            cur = nxt
        return cur

    def basis_label(self, i):
        return self.labels[i]

    def vec_str(self, u: dict) -> str:
        if not u:
            return "0"
        return " + ".join("%r*%s" % (c, self.labels[i]) for i, c in sorted(u.items()))

    def tensor(self, k: int) -> "TensorPower":
        return TensorPower(self, k)

    def __repr__(self):
        return "HopfData(dim=%d, order=%d)" % (self.dim, self.order)


_EMPTY: dict = {}


class TensorPower:
    """H tensor ... tensor H as an algebra; elements keyed by index tuples."""

    def __init__(self, H: HopfData, k: int):
        self.H = H
        self.k = k
        self.dim = H.dim ** k

    def basis(self):
        return itertools.product(range(self.H.dim), repeat=self.k)

    def degree(self, key):
        ds = [self.H.degree(i) for i in key]
        if any(d is None for d in ds):
            return None
        return sum(ds)

    def mult(self, a: tuple, b: tuple) -> dict:
        H = self.H
        out = {(): scalar(1)}
        for s in range(self.k):
            comp = H.mult(a[s], b[s])
            if not comp:
                return {}
            nxt: dict = {}
            for key, c in out.items():
                for m, v in comp.items():
                    cv = c * v
                    if not cv.is_zero():
                        kk = key + (m,)
                        cur = nxt.get(kk)
                        s2 = cv if cur is None else cur + cv
                        if s2.is_zero():
                            nxt.pop(kk, None)
                        else:
                            nxt[kk] = s2
            out = nxt
            if not out:
                return {}
        return out

    def unit(self) -> dict:
        H = self.H
        out = {(): scalar(1)}
        for _ in range(self.k):
            nxt = {}
            for key, c in out.items():
                for m, v in H.unit().items():
                    nxt[key + (m,)] = c * v
            out = nxt
        return out

    def max_degree(self):
        return self.k * max(self.H.grading)


def tensor_elem_product(H: HopfData, k: int, u: dict, v: dict) -> dict:
    """Product of two sparse elements of H^{tensor k}."""
    TP = H.tensor(k)
    out: dict = {}
    for a, ca in u.items():
        for b, cb in v.items():
            c = ca * cb
            if not c.is_zero():
                v_add_into(out, TP.mult(a, b), c)
    return out


# ---------------------------------------------------------------------------
# verification


def _gen_closure_ok(H: HopfData, gens) -> bool:
    ech = Echelon(H.dim)
    ech.add(dict(H.unit()))
    one = scalar(1)
    for g in gens:
        ech.add({g: one})
    frontier = [dict(r) for r in ech.rows]
    while frontier and ech.rank < H.dim:
        new = []
        for vec in frontier:
            for g in gens:
                prod = H.product(vec, {g: one})
                if prod and ech.add(prod):
                    new.append(prod)
        frontier = new
    return ech.rank == H.dim


def verify_bialgebra(H: HopfData, mode: str = "auto") -> Report:
    """Check associativity, coassociativity, (co)unit laws and that the
    coproduct and counit are algebra maps.

    mode 'full' brute-forces every basis tuple.  mode 'gens' checks
    multiplicative identities against declared algebra generators after
    proving they generate (falls back to full if they do not).  'auto'
    picks 'gens' for dim > 32 when generators are declared.
    """
    rep = Report("bialgebra(%s)" % getattr(H, "name", "dim=%d" % H.dim))
    gens = None
    if mode == "auto":
        mode = "gens" if (H.generators and H.dim > 32) else "full"
    if mode == "gens":
        if H.generators and _gen_closure_ok(H, H.generators):
            gens = list(H.generators)
        else:
            mode = "full"

    one = dict(H.unit())

    # unit law
    ok, wit = True, None
    for i in range(H.dim):
        e = {i: scalar(1)}
        if H.product(one, e) != e or H.product(e, one) != e:
            ok, wit = False, H.labels[i]
            break
    rep.add("unit", ok, wit)

    # associativity
    ok, wit = True, None
    third = gens if gens is not None else range(H.dim)
    for i in range(H.dim):
        if not ok:
            break
        for j in range(H.dim):
            if not ok:
                break
            ij = H.mult(i, j)
            for g in third:
                left = H.product(ij, {g: scalar(1)})
                right = H.product({i: scalar(1)}, H.mult(j, g))
                if not v_eq(left, right):
                    ok, wit = False, (H.labels[i], H.labels[j], H.labels[g])
                    break
    rep.add("associativity", ok, wit)

    # counit law: (eps tensor id) Delta = id = (id tensor eps) Delta
    ok, wit = True, None
    for i in range(H.dim):
        left: dict = {}
        right: dict = {}
        for (j, k), d in H.comult(i).items():
            e = H._counit.get(j)
            if e is not None:
                cur = left.get(k)
                s = e * d if cur is None else cur + e * d
                if s.is_zero():
                    left.pop(k, None)
                else:
                    left[k] = s
            e = H._counit.get(k)
            if e is not None:
                cur = right.get(j)
                s = e * d if cur is None else cur + e * d
                if s.is_zero():
                    right.pop(j, None)
                else:
                    right[j] = s
        if left != {i: scalar(1)} or right != {i: scalar(1)}:
            ok, wit = False, H.labels[i]
            break
    rep.add("counit", ok, wit)

    # coassociativity
    ok, wit = True, None
    for i in range(H.dim):
        left: dict = {}
        right: dict = {}
        for (j, k), d in H.comult(i).items():
            for (a, b), e in H.comult(j).items():
                key = (a, b, k)
                cur = left.get(key)
                s = d * e if cur is None else cur + d * e
                if s.is_zero():
                    left.pop(key, None)
                else:
                    left[key] = s
            for (a, b), e in H.comult(k).items():
                key = (j, a, b)
                cur = right.get(key)
                s = d * e if cur is None else cur + d * e
                if s.is_zero():
                    right.pop(key, None)
                else:
                    right[key] = s
        if left != right:
            ok, wit = False, H.labels[i]
            break
    rep.add("coassociativity", ok, wit)

    # bialgebra compatibility
    ok, wit = True, None
    d_one = H.coproduct(one)
    unit2 = {}
    for i, a in one.items():
        for j, b in one.items():
            unit2[(i, j)] = a * b
    if d_one != unit2:
        ok, wit = False, "Delta(1) != 1 tensor 1"
    if ok and not H.counit_of(one).is_one():
        ok, wit = False, "eps(1) != 1"
    second = gens if gens is not None else range(H.dim)
    if ok:
        for i in range(H.dim):
            if not ok:
                break
            di = H.comult(i)
            for j in second:
                dj = H.comult(j)
                lhs = H.coproduct(H.mult(i, j))
                rhs: dict = {}
                for (a, b), c in di.items():
                    for (a2, b2), c2 in dj.items():
                        coef = c * c2
                        if coef.is_zero():
                            continue
                        pa = H.mult(a, a2)
                        pb = H.mult(b, b2)
                        for x, vx in pa.items():
                            for y, vy in pb.items():
                                key = (x, y)
                                add = coef * vx * vy
                                cur = rhs.get(key)
                                s = add if cur is None else cur + add
                                if s.is_zero():
                                    rhs.pop(key, None)
                                else:
                                    rhs[key] = s
                if lhs != rhs:
                    ok, wit = False, (H.labels[i], H.labels[j])
                    break
        # eps multiplicative (cheap, always full)
        if ok:
            for i in range(H.dim):
                for j in range(H.dim):
                    lhs = H.counit_of(H.mult(i, j))
                    ei = H._counit.get(i)
                    ej = H._counit.get(j)
                    rhs = (ei * ej) if (ei is not None and ej is not None) else scalar(0)
                    if lhs != rhs:
                        ok, wit = False, (H.labels[i], H.labels[j])
                        break
                if not ok:
                    break
    rep.add("compatibility", ok, wit)
    return rep


def verify_antipode(H: HopfData) -> Report:
    rep = Report("antipode")
    if H.antipode is None:
        rep.add("present", False, "no antipode attached")
        return rep
    Smat = H.antipode
    idm = SparseMat.identity(H.dim)
    uni = convolution_unit(H, H)
    left = convolution_product(Smat, idm, H, H)
    right = convolution_product(idm, Smat, H, H)
    rep.add("S*id = u.eps", left == uni)
    rep.add("id*S = u.eps", right == uni)
    try:
        mat_inverse(Smat)
        rep.add("bijective", True)
    except NotInvertible:
        rep.add("bijective", False)
    return rep


def verify_hopf(H: HopfData, mode: str = "auto") -> Report:
    rep = verify_bialgebra(H, mode)
    arep = verify_antipode(H)
    rep.checks.extend(arep.checks)
    return rep


def compute_antipode(H: HopfData) -> SparseMat:
    """Antipode as the convolution inverse of the identity; attaches it.

    Raises NotInvertible if the bialgebra is not Hopf.
    """
    if H.antipode is not None:
        verify_antipode(H).require()
        return H.antipode
    idm = SparseMat.identity(H.dim)
    S = convolution_inverse(idm, H, H)
    mat_inverse(S)  # bijectivity (standing assumption); raises if singular
    H.antipode = S
    H._antipode_cols = S.cols_dict()
    return S


def antipode_inverse(H: HopfData) -> SparseMat:
    assert H.antipode is not None
    key = "antipode_inv"
    if key not in H.aux:
        H.aux[key] = mat_inverse(H.antipode)
    return H.aux[key]


def is_cocommutative(H: HopfData) -> bool:
    for i in range(H.dim):
        d = H.comult(i)
        flipped = {(k, j): v for (j, k), v in d.items()}
        if not v_eq(d, flipped):
            return False
    return True


def group_likes_in_basis(H: HopfData) -> list:
    """Basis indices g with Delta g = g tensor g and eps(g) = 1."""
    out = []
    for i in range(H.dim):
        if v_eq(H.comult(i), {(i, i): scalar(1)}):
            e = H._counit.get(i)
            if e is not None and e.is_one():
                out.append(i)
    return out


def dual_hopf(H: HopfData) -> HopfData:
    """The dual Hopf algebra on the dual basis, index-aligned.

    Multiplication of H* is the transpose of Delta_H and comultiplication
    the transpose of m_H with first tensor factors pairing with first:
    (f.g)(x) = f(x_(1)) g(x_(2)) and f_(1)(x) f_(2)(y) = f(xy).
    Applied twice this is the identity on structure constants.
    """
    assert H.antipode is not None, "dualization needs the antipode"
    mult: dict = {}
    for i in range(H.dim):
        for (j, k), v in H.comult(i).items():
            mult.setdefault((j, k), {})[i] = v
    comult: dict = {}
    for (i, j), prod in H._mult.items():
        for k, v in prod.items():
            d = comult.setdefault(k, {})
            cur = d.get((i, j))
            s = v if cur is None else cur + v
            if s.is_zero():
                d.pop((i, j), None)
            else:
                d[(i, j)] = s
    unit = {i: v for i, v in H._counit.items()}
    counit = {i: v for i, v in H._unit.items()}
    S = H.antipode.transpose()
    gens = None
    if H.grading is not None:
        low = [i for i in range(H.dim) if H.grading[i] <= 1]
        if len(low) < H.dim:
            gens = low
    out = HopfData(H.dim, H.order, [l + "*" for l in H.labels],
                   mult, comult, unit, counit, antipode=S,
                   grading=H.grading, generators=gens)
    if H.grading is not None:
        out.mult_graded = H.delta_graded
        out.delta_graded = H.mult_graded
    return out


def hopf_equal(A: HopfData, B: HopfData, bijection=None) -> bool:
    """Structure-constant equality under an optional basis bijection.

    bijection maps A-indices to B-indices; identity by default.  This is
    deliberately not an isomorphism search.
    """
    if A.dim != B.dim:
        return False
    pi = bijection or (lambda i: i)

    def mv(d):
        return {pi(k): v for k, v in d.items()}

    for i in range(A.dim):
        for j in range(A.dim):
            if not v_eq(mv(A.mult(i, j)), B.mult(pi(i), pi(j))):
                return False
    for i in range(A.dim):
        da = {(pi(j), pi(k)): v for (j, k), v in A.comult(i).items()}
        if not v_eq(da, B.comult(pi(i))):
            return False
    if not v_eq(mv(A.unit()), B.unit()):
        return False
    if not v_eq({pi(i): v for i, v in A.counit().items()}, B.counit()):
        return False
    return True
