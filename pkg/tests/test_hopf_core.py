import copy

import pytest

from hopflab.scalars import scalar, root_of_unity
from hopflab.groups import symmetric, cyclic, klein_four, dihedral
from hopflab.hopf import (verify_bialgebra, verify_hopf, verify_antipode,
                          compute_antipode, dual_hopf, is_cocommutative,
                          group_likes_in_basis, hopf_equal, HopfData)
from hopflab.construct import group_algebra, function_algebra, matched_pair_extension
from hopflab.construct.groups_hopf import conjugation_action
from hopflab.linalg import SparseMat, v_eq
from hopflab.errors import ConstructionError


S3 = symmetric(3)


def test_group_algebra_s3():
    H = group_algebra(S3)
    assert verify_hopf(H, "full").ok
    assert is_cocommutative(H)
    assert sorted(group_likes_in_basis(H)) == list(range(6))


def test_group_algebra_fault_injection():
    H = group_algebra(S3)
    # corrupt one product entry
    i, j = 1, 2
    bad = dict(H._mult)
    bad[(i, j)] = {S3.op(i, j): scalar(2)}
    K = HopfData(H.dim, H.order, H.labels, bad, H._comult, H._unit, H._counit,
                 antipode=H.antipode)
    rep = verify_bialgebra(K, "full")
    assert not rep.ok
    failed = {c.name for c in rep.checks if not c.ok}
    assert failed & {"associativity", "compatibility"}
    wit = [c.witness for c in rep.checks if not c.ok and c.witness]
    assert wit  # a witness tuple is reported


def test_function_algebra_s3():
    H = function_algebra(S3)
    assert verify_hopf(H, "full").ok
    assert not is_cocommutative(H)  # S3 nonabelian
    # sum of the idempotents is 1
    assert v_eq(H.unit(), {i: scalar(1) for i in range(6)})


def test_duality_group_vs_functions():
    kG = group_algebra(S3)
    kGd = dual_hopf(kG)
    fG = function_algebra(S3)
    assert hopf_equal(kGd, fG)
    # involution on the nose
    assert hopf_equal(dual_hopf(kGd), kG)
    assert verify_hopf(kGd, "full").ok


def test_compute_antipode_from_scratch():
    for G in (S3, cyclic(4), klein_four()):
        H = group_algebra(G)
        H.antipode = None
        H._antipode_cols = None
        S = compute_antipode(H)
        expect = SparseMat(G.n, G.n, {(G.inv[i], i): scalar(1) for i in range(G.n)})
        assert S == expect
        assert verify_antipode(H).ok


def test_antipode_properties():
    from hopflab.construct.presets import (quantum_line_bosonization,
                                           a2_bosonization, fk3_bosonization)
    algebras = [group_algebra(S3), function_algebra(S3),
                group_algebra(dihedral(4)), quantum_line_bosonization(3, 3),
                a2_bosonization(), fk3_bosonization()]
    for H in algebras:
        S_cols = H.antipode.cols_dict()
        # S(1) = 1
        one = dict(H.unit())
        assert v_eq(H.antipode_of(one), one)
        # eps(S(x)) = eps(x)
        for i in range(H.dim):
            assert H.counit_of(S_cols[i]) == (H.counit().get(i) or scalar(0))


def test_matched_pair_s3_c2():
    F = cyclic(2)
    # embed C2 = <(12)> in S3
    twelve = next(i for i, p in enumerate(S3.perms) if p == (1, 0, 2))
    emb = lambda f: S3.e if f == 0 else twelve
    act = conjugation_action(S3, F, emb)
    H = matched_pair_extension(S3, F, act)
    assert H.dim == 12
    assert verify_hopf(H, "full").ok
    # contains k^{S3}: the slice f = e multiplies like the function algebra
    pack = H.aux["pack"]
    for a in range(6):
        for b in range(6):
            prod = H.mult(pack(a, 0), pack(b, 0))
            if a == b:
                assert v_eq(prod, {pack(a, 0): scalar(1)})
            else:
                assert prod == {}


def test_matched_pair_s3_c3():
    F = cyclic(3)
    three = next(i for i, p in enumerate(S3.perms) if p == (1, 2, 0))
    def emb(f):
        x = S3.e
        for _ in range(f):
            x = S3.op(x, three)
        return x
    H = matched_pair_extension(S3, F, conjugation_action(S3, F, emb))
    assert H.dim == 18
    assert verify_hopf(H, "full").ok


def test_matched_pair_trivial_f():
    F = cyclic(1)
    H = matched_pair_extension(S3, F, lambda g, f: g)
    assert hopf_equal(H, function_algebra(S3))


def test_matched_pair_rejects_bad_action():
    F = cyclic(2)
    with pytest.raises(ConstructionError):
        matched_pair_extension(S3, F, lambda g, f: (g + f) % 6)
