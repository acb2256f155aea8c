from fractions import Fraction

import pytest

from hopflab.scalars import scalar, root_of_unity, q_factorial, invert
from hopflab.groups import symmetric
from hopflab.hopf import dual_hopf, hopf_equal, verify_hopf, is_cocommutative
from hopflab.construct import group_algebra, function_algebra
from hopflab.construct.presets import (quantum_line_bosonization, quantum_line_data,
                                       a2_bosonization, fk3_nichols)
from hopflab.twists import (TwistData, CocycleData, verify_twist, apply_twist,
                            verify_cocycle, apply_cocycle, cocycle_on_deformed,
                            twist_from_cocycle_dual, cocycle_from_twist_dual,
                            counit_form, form_convolution,
                            BraidedTwistData, verify_braided_twist,
                            BraidedCocycleData, verify_braided_cocycle,
                            dual_braided, bosonize_twist, restrict_cocycle,
                            bosonize_cocycle, is_h_balanced)
from hopflab.linalg import v_eq
from hopflab.errors import VerificationError


def unit_twist(H):
    elem = {}
    for u, cu in H.unit().items():
        for v, cv in H.unit().items():
            elem[(u, v)] = cu * cv
    return TwistData(H, elem, elem, name="1x1")


def j_xi_element(A, xi):
    """1 tensor 1 + xi sum_k x^k g^{N-k} tensor x^{N-k} / ((N-k)_q! (k)_q!)
    on a quantum line bosonization, from its labels."""
    sp = A.aux["smash"]
    R, H, nH = sp["R"], sp["H"], sp["nH"]
    pack = sp["pack"]
    N = R.dim
    G = H.aux["group"]
    q = None
    # q = chi(g): read from the module action
    V = R.module
    q = V.act(1 if G.n > 1 else 0, 0)[0]
    elem = {}
    for u, cu in H.unit().items():
        for v, cv in H.unit().items():
            elem[(pack(0, u), pack(0, v))] = cu * cv
    for k in range(1, N):
        coef = xi * invert(q_factorial(N - k, q) * q_factorial(k, q))
        # x^k g^{N-k} tensor x^{N-k}: powers of g via the group table
        gpow = G.e
        for _ in range(N - k):
            gpow = G.op(gpow, 1 if G.n > 1 else 0)
        for v, cv in H.unit().items():
            key = (pack(k, gpow), pack(N - k, v))
            elem[key] = elem.get(key, scalar(0)) + coef * cv
    return {k: v for k, v in elem.items() if not v.is_zero()}


def test_unit_twist_passes():
    for H in (group_algebra(symmetric(3)), quantum_line_bosonization(2, 2)):
        rep = verify_twist(unit_twist(H))
        assert rep.ok
        K = apply_twist(H, unit_twist(H))
        assert hopf_equal(K, H)


def test_j_xi_sweedler():
    A = quantum_line_bosonization(2, 2)
    J = TwistData(A, j_xi_element(A, scalar(1)), name="J_xi")
    assert verify_twist(J).ok
    # corrupted elements fail: xg tensor xg breaks the twist identity
    # (the counit still kills it since eps(xg) = 0)
    sp = A.aux["smash"]
    pack = sp["pack"]
    bad = dict(J.element)
    bad[(pack(1, 1), pack(1, 1))] = scalar(1)  # xg tensor xg
    rep = verify_twist(TwistData(A, bad))
    assert not rep.ok
    assert {c.name for c in rep.checks if not c.ok} == {"twist identity"}
    # xg tensor g breaks the counit normalization
    bad2 = dict(J.element)
    bad2[(pack(1, 1), pack(0, 1))] = scalar(1)  # xg tensor g
    rep2 = verify_twist(TwistData(A, bad2))
    failed = {c.name for c in rep2.checks if not c.ok}
    assert "(id x eps)(J) = 1" in failed


def test_j_xi_primal_dichotomy():
    # the printed formula element on the primal bosonization is a twist
    # exactly when g^N = 1; the obstruction is xi (1 - g^N) tensor ...
    for N, n, expect in ((2, 2, True), (3, 3, True), (2, 4, False)):
        A = quantum_line_bosonization(N, n)
        J = TwistData(A, j_xi_element(A, scalar(1)), name="J_xi")
        assert verify_twist(J).ok is expect, (N, n)


def test_apply_twist_roundtrip():
    A = quantum_line_bosonization(3, 3)
    J = TwistData(A, j_xi_element(A, scalar(1)), name="J_xi")
    assert verify_twist(J).ok
    B = apply_twist(A, J)
    assert verify_hopf(B, "full").ok
    Jinv = TwistData(B, dict(J.inverse), dict(J.element), name="J^-1")
    assert verify_twist(Jinv).ok
    C = apply_twist(B, Jinv)
    assert hopf_equal(C, A)
    # comultiplications literally equal
    for i in range(A.dim):
        assert C.comult(i) == A.comult(i)


def test_twist_cocycle_duality_roundtrip():
    A = quantum_line_bosonization(2, 2)
    J = TwistData(A, j_xi_element(A, scalar(1)), name="J_xi")
    Ad = dual_hopf(A)
    s = cocycle_from_twist_dual(J, Ad)
    assert verify_cocycle(s).ok
    J2 = twist_from_cocycle_dual(s, dual_hopf(Ad))
    assert J2.element == J.element and J2.inverse == J.inverse


def test_trivial_cocycle():
    H = group_algebra(symmetric(3))
    s = CocycleData(H, counit_form(H), name="eps.eps")
    assert verify_cocycle(s).ok
    K = apply_cocycle(H, s)
    assert hopf_equal(K, H)


def test_apply_cocycle_lifting_relation():
    # sigma_xi on the quantum line bosonization B itself:
    # sigma(x^i g^t, x^j g^u) = d_{i+j,0} + xi q^{jt} d_{i+j,N}
    for N, n in ((2, 2), (2, 4), (3, 3)):
        A = quantum_line_bosonization(N, n)
        sp = A.aux["smash"]
        R, H, pack = sp["R"], sp["H"], sp["pack"]
        G = H.aux["group"]
        V = R.module
        q = V.act(1 if G.n > 1 else 0, 0)[0]
        xi = scalar(1)
        vals = {}
        for i in range(N):
            for t in range(n):
                for j in range(N):
                    for u in range(n):
                        acc = scalar(0)
                        if i + j == 0:
                            acc = acc + scalar(1)
                        if i + j == N:
                            acc = acc + xi * q ** (j * t)
                        if not acc.is_zero():
                            vals[(pack(i, t), pack(j, u))] = acc
        s = CocycleData(A, vals, name="sigma_xi")
        assert verify_cocycle(s).ok, (N, n)
        B = apply_cocycle(A, s)
        # deformed relation: x .sigma x ... (N times) = xi (1 - g^N)
        x = {pack(1, G.e): scalar(1)}
        acc = x
        for _ in range(N - 1):
            acc = B.product(acc, x)
        gN = G.e
        for _ in range(N):
            gN = G.op(gN, 1 if G.n > 1 else 0)
        expect = {pack(0, G.e): xi}
        cur = expect.get(pack(0, gN), scalar(0))
        expect[pack(0, gN)] = cur - xi
        expect = {k: v for k, v in expect.items() if not v.is_zero()}
        assert v_eq(acc, expect), (N, n)
        # undo with the convolution inverse
        sinv = cocycle_on_deformed(s, B)
        assert verify_cocycle(sinv).ok
        C = apply_cocycle(B, sinv)
        assert hopf_equal(C, A)


def test_sigma_xi_transposes_to_j_xi():
    # the dual of the cocycle above is J_xi built on the dual quantum line
    for N, n in ((2, 2), (2, 4), (3, 3)):
        A = quantum_line_bosonization(N, n)
        sp = A.aux["smash"]
        R, H, pack = sp["R"], sp["H"], sp["pack"]
        G = H.aux["group"]
        V = R.module
        q = V.act(1 if G.n > 1 else 0, 0)[0]
        xi = scalar(1)
        vals = {}
        for i in range(N):
            for t in range(n):
                for j in range(N):
                    for u in range(n):
                        acc = scalar(0)
                        if i + j == 0:
                            acc = acc + scalar(1)
                        if i + j == N:
                            acc = acc + xi * q ** (j * t)
                        if not acc.is_zero():
                            vals[(pack(i, t), pack(j, u))] = acc
        s = CocycleData(A, vals, name="sigma_xi")
        Ad = dual_hopf(A)
        J = twist_from_cocycle_dual(s, Ad)
        assert verify_twist(J).ok, (N, n)
        # independent construction of J_xi on the dual: generators of A*
        # y = sum_t (x g^t)*, ghat = sum_t q^t (g^t)*
        y = {pack(1, t): scalar(1) for t in range(n)}
        ghat = {pack(0, t): q ** t for t in range(n)}
        elem = {}
        one_d = dict(Ad.unit())
        for a, ca in one_d.items():
            for b, cb in one_d.items():
                elem[(a, b)] = ca * cb
        for k in range(1, N):
            coef = xi * invert(q_factorial(N - k, q) * q_factorial(k, q))
            left = dict(one_d)
            for _ in range(k):
                left = Ad.product(left, y)
            for _ in range(N - k):
                left = Ad.product(left, ghat)
            right = dict(one_d)
            for _ in range(N - k):
                right = Ad.product(right, y)
            for a, ca in left.items():
                for b, cb in right.items():
                    key = (a, b)
                    add = coef * ca * cb
                    cur = elem.get(key, scalar(0))
                    elem[key] = cur + add
        elem = {k: v for k, v in elem.items() if not v.is_zero()}
        assert elem == J.element, (N, n)
