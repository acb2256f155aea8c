"""Yetter-Drinfeld modules over a HopfData: action + coaction tensors,
the induced braiding, and the three dual structures (dual over the same
base, dual over the dual base, and base change of the module itself to
the dual Hopf algebra).
"""

from __future__ import annotations

from .scalars import scalar
from .hopf import HopfData, Report, dual_hopf, antipode_inverse
from .linalg import SparseMat, v_add_into, v_eq, mat_mul_sparse
from .errors import VerificationError


class YDModuleData:
    def __init__(self, base: HopfData, dim: int, action: dict, coaction: dict,
                 labels=None):
        self.base = base
        self.dim = dim
        # action: (h_index, v_index) -> {v: scalar}; missing = zero
        self.action = {k: dict(v) for k, v in action.items()}
        # coaction: v_index -> {(h_index, v_index): scalar}
        self.coaction = {k: dict(v) for k, v in coaction.items()}
        self.labels = list(labels) if labels else ["v%d" % i for i in range(dim)]

    def act(self, h: int, i: int) -> dict:
        return self.action.get((h, i), {})

    def act_elem(self, helem: dict, v: dict) -> dict:
        out: dict = {}
        for h, ch in helem.items():
            for i, ci in v.items():
                c = ch * ci
                if not c.is_zero():
                    v_add_into(out, self.act(h, i), c)
        return out

    def coact(self, v: dict) -> dict:
        out: dict = {}
        for i, c in v.items():
            v_add_into(out, self.coaction.get(i, {}), c)
        return out

    def __repr__(self):
        return "YDModuleData(dim=%d over dim=%d)" % (self.dim, self.base.dim)


def verify_yd(V: YDModuleData) -> Report:
    """Module axioms, comodule axioms and the Yetter-Drinfeld condition
    delta(h.v) = h1 v(-1) S(h3) tensor h2.v0, checked on all basis pairs."""
    H = V.base
    rep = Report("yetter-drinfeld")
    one = scalar(1)

    ok, wit = True, None
    unit = H.unit()
    for i in range(V.dim):
        if not v_eq(V.act_elem(unit, {i: one}), {i: one}):
            ok, wit = False, V.labels[i]
            break
    rep.add("action unital", ok, wit)

    ok, wit = True, None
    for a in range(H.dim):
        if not ok:
            break
        for b in range(H.dim):
            if not ok:
                break
            prod = H.mult(a, b)
            for i in range(V.dim):
                lhs = V.act_elem(prod, {i: one})
                rhs = V.act_elem({a: one}, V.act(b, i))
                if not v_eq(lhs, rhs):
                    ok, wit = False, (H.labels[a], H.labels[b], V.labels[i])
                    break
    rep.add("action associative", ok, wit)

    ok, wit = True, None
    for i in range(V.dim):
        co = V.coaction.get(i, {})
        acc: dict = {}
        for (h, j), c in co.items():
            e = H.counit().get(h)
            if e is not None:
                cur = acc.get(j)
                s = e * c if cur is None else cur + e * c
                if s.is_zero():
                    acc.pop(j, None)
                else:
                    acc[j] = s
        if acc != {i: one}:
            ok, wit = False, V.labels[i]
            break
    rep.add("coaction counital", ok, wit)

    ok, wit = True, None
    for i in range(V.dim):
        left: dict = {}
        right: dict = {}
        for (h, j), c in V.coaction.get(i, {}).items():
            for (a, b), d in H.comult(h).items():
                key = (a, b, j)
                cur = left.get(key)
                s = c * d if cur is None else cur + c * d
                if s.is_zero():
                    left.pop(key, None)
                else:
                    left[key] = s
            for (h2, j2), d in V.coaction.get(j, {}).items():
                key = (h, h2, j2)
                cur = right.get(key)
                s = c * d if cur is None else cur + c * d
                if s.is_zero():
                    right.pop(key, None)
                else:
                    right[key] = s
        if left != right:
            ok, wit = False, V.labels[i]
            break
    rep.add("coaction coassociative", ok, wit)

    ok, wit = True, None
    S_cols = H.antipode.cols_dict() if H.antipode else None
    if S_cols is None:
        rep.add("yd compatibility", False, "base has no antipode")
        return rep
    for h in range(H.dim):
        if not ok:
            break
        d2 = H.coproduct_iter({h: one}, 2)  # h1 tensor h2 tensor h3
        for i in range(V.dim):
            lhs = V.coact(V.act(h, i))
            rhs: dict = {}
            for (h1, h2, h3), c in d2.items():
                for (vm, v0), cv in V.coaction.get(i, {}).items():
                    coef = c * cv
                    if coef.is_zero():
                        continue
                    # h1 * vm * S(h3) in H
                    left = H.product(H.mult(h1, vm), S_cols[h3])
                    mid = V.act(h2, v0)
                    for hk, cl in left.items():
                        for vk, cm in mid.items():
                            key = (hk, vk)
                            add = coef * cl * cm
                            cur = rhs.get(key)
                            s = add if cur is None else cur + add
                            if s.is_zero():
                                rhs.pop(key, None)
                            else:
                                rhs[key] = s
            if lhs != rhs:
                ok, wit = False, (H.labels[h], V.labels[i])
                break
    rep.add("yd compatibility", ok, wit)
    return rep


def braiding(V: YDModuleData, check: bool = True) -> SparseMat:
    """c(x tensor y) = x_(-1).y tensor x_(0) as a matrix on V tensor V,
    flat index i*dim+j.  Checks invertibility and the braid equation."""
    d = V.dim
    entries = {}
    for i in range(d):
        for j in range(d):
            col = i * d + j
            for (h, v0), c in V.coaction.get(i, {}).items():
                for a, ca in V.act(h, j).items():
                    key = (a * d + v0, col)
                    val = c * ca
                    cur = entries.get(key)
                    s = val if cur is None else cur + val
                    if s.is_zero():
                        entries.pop(key, None)
                    else:
                        entries[key] = s
    c = SparseMat(d * d, d * d, entries)
    if check:
        from .linalg import mat_inverse
        mat_inverse(c)  # raises if not invertible
        if not _braid_equation_holds(c, d):
            raise VerificationError("braid equation fails: YD data inconsistent")
    return c


def _lift_to_cube(c: SparseMat, d: int, pos: int) -> SparseMat:
    """c acting at slots (pos, pos+1) of V^{tensor 3}, pos in {0, 1}."""
    entries = {}
    for (r, col), v in c.entries.items():
        a, b = divmod(r, d)
        i, j = divmod(col, d)
        for k in range(d):
            if pos == 0:
                entries[(a * d * d + b * d + k, i * d * d + j * d + k)] = v
            else:
                entries[(k * d * d + a * d + b, k * d * d + i * d + j)] = v
    return SparseMat(d ** 3, d ** 3, entries)


def _braid_equation_holds(c: SparseMat, d: int) -> bool:
    c1 = _lift_to_cube(c, d, 0)
    c2 = _lift_to_cube(c, d, 1)
    lhs = mat_mul_sparse(mat_mul_sparse(c1, c2), c1)
    rhs = mat_mul_sparse(mat_mul_sparse(c2, c1), c2)
    return lhs == rhs


def yd_dual(V: YDModuleData) -> YDModuleData:
    """V* over the same base: <h.f, v> = <f, S(h).v> and
    f_(-1) <f_(0), v> = S^{-1}(v_(-1)) <f, v_(0)>."""
    H = V.base
    S_cols = H.antipode.cols_dict()
    Sinv_cols = antipode_inverse(H).cols_dict()
    action: dict = {}
    for h in range(H.dim):
        Sh = S_cols[h]
        for j in range(V.dim):
            img: dict = {}  # S(h).x_j
            for hh, c in Sh.items():
                v_add_into(img, V.act(hh, j), c)
            # <h.f_i, x_j> = img[i]  ->  h.f_i gets img[i] at f_j... transpose
            for i, c in img.items():
                action.setdefault((h, i), {})
                cur = action[(h, i)].get(j)
                s = c if cur is None else cur + c
                if s.is_zero():
                    action[(h, i)].pop(j, None)
                else:
                    action[(h, i)][j] = s
    coaction: dict = {}
    for j in range(V.dim):
        for (h, v0), c in V.coaction.get(j, {}).items():
            # delta*(f_{v0}) += c * S^{-1}(e_h) tensor f_j
            d = coaction.setdefault(v0, {})
            for hk, ch in Sinv_cols[h].items():
                key = (hk, j)
                add = c * ch
                cur = d.get(key)
                s = add if cur is None else cur + add
                if s.is_zero():
                    d.pop(key, None)
                else:
                    d[key] = s
    return YDModuleData(H, V.dim, action, coaction,
                        [l + "*" for l in V.labels])


def yd_dual_over_dual(V: YDModuleData, Hdual: HopfData | None = None) -> YDModuleData:
    """V* over H*: the H*-coaction of f encodes the H-action on V and the
    H*-action encodes the H-coaction."""
    H = V.base
    Hd = Hdual if Hdual is not None else dual_hopf(H)
    action: dict = {}
    coaction: dict = {}
    for h in range(H.dim):
        for j in range(V.dim):
            for i, c in V.act(h, j).items():
                # coaction'(f_i) has term c * h* tensor f_j
                d = coaction.setdefault(i, {})
                key = (h, j)
                cur = d.get(key)
                s = c if cur is None else cur + c
                if s.is_zero():
                    d.pop(key, None)
                else:
                    d[key] = s
    for j in range(V.dim):
        for (h, v0), c in V.coaction.get(j, {}).items():
            # h* -> f_i picks <h*, x_j coactions>: h*.f_{v0} += c f_j
            d = action.setdefault((h, v0), {})
            cur = d.get(j)
            s = c if cur is None else cur + c
            if s.is_zero():
                d.pop(j, None)
            else:
                d[j] = s
    return YDModuleData(Hd, V.dim, action, coaction,
                        [l + "*" for l in V.labels])


def yd_base_to_dual(V: YDModuleData, Hdual: HopfData | None = None) -> YDModuleData:
    """V itself as a YD module over H*: alpha.v = <alpha, S(v_(-1))> v_(0)
    and <v_[-1], h> v_[0] = S^{-1}(h).v."""
    H = V.base
    Hd = Hdual if Hdual is not None else dual_hopf(H)
    S_cols = H.antipode.cols_dict()
    Sinv_cols = antipode_inverse(H).cols_dict()
    action: dict = {}
    for i in range(V.dim):
        for (hm, v0), c in V.coaction.get(i, {}).items():
            for hk, ch in S_cols[hm].items():
                d = action.setdefault((hk, i), {})
                add = c * ch
                cur = d.get(v0)
                s = add if cur is None else cur + add
                if s.is_zero():
                    d.pop(v0, None)
                else:
                    d[v0] = s
    coaction: dict = {}
    for i in range(V.dim):
        d = coaction.setdefault(i, {})
        for h in range(H.dim):
            img: dict = {}
            for hk, ch in Sinv_cols[h].items():
                v_add_into(img, V.act(hk, i), ch)
            for j, c in img.items():
                key = (h, j)
                cur = d.get(key)
                s = c if cur is None else cur + c
                if s.is_zero():
                    d.pop(key, None)
                else:
                    d[key] = s
    return YDModuleData(Hd, V.dim, action, coaction, list(V.labels))


class DiagonalRealization:
    """A braided vector space of diagonal type realized by YD-pairs
    (g_i, chi_i) over an abelian group: chi_i(g_j) = q_{ji}."""

    def __init__(self, qmatrix, group, gs, chis, scalar_order=None):
        self.theta = len(qmatrix)
        self.qmatrix = [list(r) for r in qmatrix]
        self.group = group
        self.gs = list(gs)
        self.chis = [list(c) for c in chis]
        if scalar_order is None:
            orders = [1]
            for row in self.chis:
                for v in row:
                    orders.append(v.order)
            from math import lcm
            scalar_order = lcm(*orders)
        self.scalar_order = scalar_order
        for i in range(self.theta):
            for j in range(self.theta):
                if self.chis[i][self.gs[j]] != self.qmatrix[j][i]:
                    raise VerificationError(
                        "chi_%d(g_%d) != q_%d%d" % (i, j, j, i))

    def module(self, H: HopfData | None = None) -> YDModuleData:
        """The diagonal YD module over the group algebra of the group."""
        from .construct.groups_hopf import group_algebra
        base = H if H is not None else group_algebra(self.group, self.scalar_order)
        action = {}
        coaction = {}
        one = scalar(1)
        for i in range(self.theta):
            coaction[i] = {(self.gs[i], i): one}
            for g in range(self.group.n):
                val = self.chis[i][g]
                if not val.is_zero():
                    action[(g, i)] = {i: val}
        return YDModuleData(base, self.theta, action, coaction,
                            ["x%d" % (i + 1) for i in range(self.theta)])
