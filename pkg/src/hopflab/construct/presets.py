"""Ready-made realizations and bosonizations used across the package:
quantum lines, quantum linear spaces, the rank-two q = -1 family and the
transposition Nichols algebra over S_n.
"""

from __future__ import annotations

from functools import lru_cache
from math import lcm

from ..scalars import scalar, root_of_unity, mult_order
from ..groups import cyclic, klein_four, symmetric
from ..hopf import HopfData
from ..yd import DiagonalRealization
from ..errors import ConstructionError
from .groups_hopf import group_algebra, function_algebra
from .nichols import (nichols_algebra, yd_pair_module, transposition_module,
                      rebase, BraidedHopfData)
from .smash import bosonize


def quantum_line_data(N: int, gorder: int):
    """YD pair (g, chi) over C_gorder with chi(g) a primitive N-th root.

    Needs N | gorder.  Returns (H, V, q).
    """
    if gorder % N != 0:
        raise ConstructionError("need N | ord(g) for chi(g) primitive of order N")
    order = lcm(N, gorder)
    q = root_of_unity(N, 1).embed(order)
    G = cyclic(gorder)
    H = group_algebra(G, order)
    chi = [q ** (t % N) for t in range(gorder)]
    V = yd_pair_module(H, 1 if gorder > 1 else 0, chi, label="x")
    return H, V, q


@lru_cache(maxsize=None)
def quantum_line_bosonization(N: int, gorder: int) -> HopfData:
    H, V, q = quantum_line_data(N, gorder)
    R = nichols_algebra(V, max_degree=N + 1)
    assert R.status == "complete" and R.dim == N
    return bosonize(R, H)


def qls_realization(qmatrix) -> DiagonalRealization:
    """Principal realization of a diagonal braiding over the product of
    cyclic groups generated by the g_i."""
    theta = len(qmatrix)
    orders = []
    for j in range(theta):
        o = 1
        for i in range(theta):
            o = lcm(o, mult_order(qmatrix[j][i]))
        orders.append(o)
    G = cyclic(orders[0])
    for j in range(1, theta):
        from ..groups import direct_product
        G = direct_product(G, cyclic(orders[j]))
    # index of g_j: generator of the j-th factor
    def gen_index(j):
        idx = 0
        for k in range(theta):
            size = orders[k]
            digit = 1 if k == j else 0
            idx = idx * size + digit
        return idx
    gs = [gen_index(j) for j in range(theta)]
    # characters: chi_i(g_j) = q_{ji}, extended multiplicatively
    sorder = 1
    for row in qmatrix:
        for v in row:
            sorder = lcm(sorder, v.order)
    chis = []
    for i in range(theta):
        vals = []
        for gidx in range(G.n):
            digits = []
            rem = gidx
            for k in range(theta - 1, -1, -1):
                digits.append(rem % orders[k])
                rem //= orders[k]
            digits.reverse()
            acc = scalar(1, sorder)
            for j, d in enumerate(digits):
                acc = acc * (qmatrix[j][i].embed(sorder) ** d)
            vals.append(acc)
        chis.append(vals)
    return DiagonalRealization(qmatrix, G, gs, chis, sorder)


def qls_nichols(realization: DiagonalRealization, max_degree=None) -> BraidedHopfData:
    V = realization.module()
    if max_degree is None:
        md = 1
        for i in range(realization.theta):
            md += mult_order(realization.qmatrix[i][i]) - 1
        max_degree = md + 1
    return nichols_algebra(V, max_degree=max_degree)


@lru_cache(maxsize=None)
def a2_minus_one_realization() -> DiagonalRealization:
    """Cartan A2 with parameter -1: braiding [[-1, 1], [-1, -1]] realized
    over C2 x C2 with chi_i(g_j) = q_{ji}."""
    m1 = scalar(-1)
    p1 = scalar(1)
    q = [[m1, p1], [m1, m1]]
    G = klein_four()
    # labels: ["e", "g2", "g1", "g1g2"]; g1 = (1,0) -> index 2, g2 -> 1
    g1, g2 = 2, 1
    def char(vg1, vg2):
        out = [None] * 4
        out[0] = p1
        out[g1] = vg1
        out[g2] = vg2
        out[3] = vg1 * vg2
        return out
    # chi_1(g_1) = q_11 = -1, chi_1(g_2) = q_21 = -1
    chi1 = char(m1, m1)
    # chi_2(g_1) = q_12 = 1, chi_2(g_2) = q_22 = -1
    chi2 = char(p1, m1)
    return DiagonalRealization(q, G, [g1, g2], [chi1, chi2], 1)


@lru_cache(maxsize=None)
def a2_nichols_pbw() -> BraidedHopfData:
    """B(V) for A2, q = -1, rebased to the PBW monomials
    x2^a x12^b x1^c with x12 = x1 x2 - x2 x1."""
    real = a2_minus_one_realization()
    R = nichols_algebra(real.module(), max_degree=5)
    assert R.status == "complete" and R.dim == 8
    one = scalar(1)
    x1 = {R.aux["word_index"][(0,)]: one}
    x2 = {R.aux["word_index"][(1,)]: one}
    x12 = R.product(x1, x2)
    for k, v in R.product(x2, x1).items():
        cur = x12.get(k)
        s = -v if cur is None else cur - v
        if s.is_zero():
            x12.pop(k, None)
        else:
            x12[k] = s
    basis = []
    labels = []
    for a in range(2):
        for b in range(2):
            for c in range(2):
                vec = dict(R.unit())
                for _ in range(a):
                    vec = R.product(vec, x2)
                for _ in range(b):
                    vec = R.product(vec, x12)
                for _ in range(c):
                    vec = R.product(vec, x1)
                basis.append(vec)
                labels.append(_pbw_label(a, b, c))
    # sort by degree a + 2b + c, keeping a stable readable order
    degs = [(a + 2 * b + c) for a in range(2) for b in range(2) for c in range(2)]
    perm = sorted(range(8), key=lambda i: (degs[i], i))
    basis = [basis[i] for i in perm]
    labels = [labels[i] for i in perm]
    return rebase(R, basis, labels)


def _pbw_label(a, b, c):
    parts = []
    if a:
        parts.append("x2")
    if b:
        parts.append("x12")
    if c:
        parts.append("x1")
    return ".".join(parts) if parts else "1"


@lru_cache(maxsize=None)
def a2_bosonization() -> HopfData:
    real = a2_minus_one_realization()
    R = a2_nichols_pbw()
    A = bosonize(R, R.base)
    A.aux["realization"] = real
    return A


@lru_cache(maxsize=None)
def fk3_nichols() -> BraidedHopfData:
    H = function_algebra(symmetric(3))
    V = transposition_module(H)
    R = nichols_algebra(V, max_degree=6)
    assert R.status == "complete" and R.dim == 12
    return R


def fk3_bosonization(H: HopfData | None = None) -> HopfData:
    """FK3 # k^{S3} (dim 72), or FK3 # H for an extension H containing
    k^{S3} whose action restricts the transposition module."""
    R = fk3_nichols()
    if H is None:
        return bosonize(R, R.base)
    raise ConstructionError("use fk3_over_extension for extended bases")
