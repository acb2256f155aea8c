"""Group algebras, function algebras and bicrossed extensions k^G # kF."""

from __future__ import annotations

from ..groups import GroupTable
from ..scalars import scalar
from ..hopf import HopfData, verify_hopf
from ..linalg import SparseMat
from ..errors import ConstructionError


def group_algebra(G: GroupTable, scalar_order: int = 1) -> HopfData:
    """kG: basis the group elements, Delta g = g tensor g, S(g) = g^{-1}."""
    one = scalar(1, scalar_order)
    n = G.n
    mult = {(i, j): {G.op(i, j): one} for i in range(n) for j in range(n)}
    comult = {i: {(i, i): one} for i in range(n)}
    unit = {G.e: one}
    counit = {i: one for i in range(n)}
    S = SparseMat(n, n, {(G.inv[i], i): one for i in range(n)})
    H = HopfData(n, scalar_order, list(G.labels), mult, comult, unit, counit,
                 antipode=S, generators=G.generating_set() or [G.e],
                 distinguished=[(tuple(range(n)), "group-like-family")])
    H.aux["group"] = G
    H.aux["kind"] = "group-algebra"
    return H


def function_algebra(G: GroupTable, scalar_order: int = 1) -> HopfData:
    """k^G: orthogonal idempotents d_g, Delta d_g = sum_{ab=g} d_a tensor d_b."""
    one = scalar(1, scalar_order)
    n = G.n
    mult = {(i, i): {i: one} for i in range(n)}
    comult = {}
    for g in range(n):
        comult[g] = {}
    for a in range(n):
        for b in range(n):
            comult[G.op(a, b)][(a, b)] = one
    unit = {i: one for i in range(n)}
    counit = {G.e: one}
    S = SparseMat(n, n, {(G.inv[i], i): one for i in range(n)})
    H = HopfData(n, scalar_order, ["d_" + l for l in G.labels], mult, comult,
                 unit, counit, antipode=S,
                 distinguished=[(tuple(range(n)), "group-like-family")])
    H.aux["group"] = G
    H.aux["kind"] = "function-algebra"
    return H


def _check_right_action(G: GroupTable, F: GroupTable, act) -> None:
    for g in range(G.n):
        if act(g, F.e) != g:
            raise ConstructionError("action not unital at g=%s" % G.labels[g])
    for g in range(G.n):
        for f1 in range(F.n):
            for f2 in range(F.n):
                if act(act(g, f1), f2) != act(g, F.op(f1, f2)):
                    raise ConstructionError(
                        "not a right action at (%s, %s, %s)"
                        % (G.labels[g], F.labels[f1], F.labels[f2]))
    for f in range(F.n):
        for a in range(G.n):
            for b in range(G.n):
                if act(G.op(a, b), f) != G.op(act(a, f), act(b, f)):
                    raise ConstructionError(
                        "action not by automorphisms at (%s, %s, %s)"
                        % (G.labels[a], G.labels[b], F.labels[f]))


def matched_pair_extension(G: GroupTable, F: GroupTable, act=None,
                           verify: bool = True) -> HopfData:
    """The Hopf algebra k^G # kF for a matched pair with trivial cocycles.

    `act(g_idx, f_idx)` is the right action of F on G by group
    automorphisms (conjugation when both sit inside a common group).
    Basis d_eta tensor f; k^G embeds as d_eta tensor e and the algebra
    projects onto kF.
    """
    if act is None:
        raise ConstructionError("an action of F on G is required")
    _check_right_action(G, F, act)
    one = scalar(1)
    nG, nF = G.n, F.n
    n = nG * nF

    def pack(g, f):
        return g * nF + f

    mult = {}
    for g1 in range(nG):
        for f1 in range(nF):
            i = pack(g1, f1)
            for g2 in range(nG):
                # (d_g1 # f1)(d_g2 # f2) = [g1 = g2 <| f1^{-1}] d_g1 # f1 f2
                if act(g2, F.inv[f1]) != g1:
                    continue
                for f2 in range(nF):
                    mult[(i, pack(g2, f2))] = {pack(g1, F.op(f1, f2)): one}
    comult = {}
    for g in range(nG):
        for f in range(nF):
            comult[pack(g, f)] = {}
    for a in range(nG):
        for b in range(nG):
            g = G.op(a, b)
            for f in range(nF):
                comult[pack(g, f)][(pack(a, f), pack(b, f))] = one
    unit = {pack(g, F.e): one for g in range(nG)}
    counit = {pack(G.e, f): one for f in range(nF)}
    S = SparseMat(n, n, {(pack(act(G.inv[g], f), F.inv[f]), pack(g, f)): one
                         for g in range(nG) for f in range(nF)})
    labels = ["d_%s#%s" % (G.labels[g], F.labels[f])
              for g in range(nG) for f in range(nF)]
    H = HopfData(n, 1, labels, mult, comult, unit, counit, antipode=S)
    H.aux["kind"] = "matched-pair"
    H.aux["factors"] = (G, F)
    H.aux["act"] = act
    H.aux["embed_kG"] = lambda g: pack(g, F.e)
    H.aux["pack"] = pack
    if verify:
        verify_hopf(H).require()
    return H


def conjugation_action(G: GroupTable, F: GroupTable, emb) -> callable:
    """Right action g <| f = f^{-1} g f inside G, with emb: F-index -> G-index."""
    def act(g, f):
        fg = emb(f)
        return G.mult[G.mult[G.inv[fg]][g]][fg]
    return act
