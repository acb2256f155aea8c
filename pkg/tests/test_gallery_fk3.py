import time

import pytest

from hopflab.scalars import scalar
from hopflab.groups import symmetric, transpositions, perm_sign
from hopflab.hopf import dual_hopf, hopf_equal, verify_hopf, is_cocommutative
from hopflab.construct.presets import fk3_bosonization, fk3_nichols
from hopflab.gallery import (twist_j_n, braided_j_n, sigma_gm, fk3_over_extension,
                             extend_j3, character_convolution_group)
from hopflab.twists import (TwistData, verify_twist, apply_twist, verify_cocycle,
                            twist_from_cocycle_dual, cocycle_from_twist_dual,
                            verify_braided_twist, bosonize_twist, apply_braided_twist,
                            braided_twisted_coproduct, cocycle_on_deformed,
                            apply_cocycle, dual_braided, restrict_cocycle,
                            bosonize_cocycle, is_h_balanced)
from hopflab.construct.smash import smash_r_part
from hopflab.construct import bosonize
from hopflab.linalg import v_eq

S3 = symmetric(3)


@pytest.fixture(scope="module")
def A():
    return fk3_bosonization()


@pytest.fixture(scope="module")
def J3(A):
    return twist_j_n(3, A)


def test_j3_passes(A, J3):
    t0 = time.time()
    rep = verify_twist(J3)
    assert rep.ok, rep
    print("verify_twist(J3) in %.1fs" % (time.time() - t0))


def test_j3_is_bosonized_braided(A, J3):
    # Jb_3 is coinvariant and satisfies the braided identity and counit
    # normalization, but H-invariance (the trivial-action condition)
    # genuinely fails: it is not a braided twist, yet its bosonization
    # is a twist.
    Jb = braided_j_n(3)
    rep = verify_braided_twist(Jb)
    by_name = {c.name: c.ok for c in rep.checks}
    assert by_name["coinvariant"]
    assert by_name["braided twist identity"]
    assert by_name["counit normalization"]
    assert not by_name["invariant"]
    J2 = bosonize_twist(Jb, A)
    assert J2.element == J3.element
    assert J2.inverse == J3.inverse


def test_sigma_gm_duality(A, J3):
    Ad = dual_hopf(A)
    s = sigma_gm(3, A, Ad)
    rep = verify_cocycle(s)
    assert rep.ok, rep
    J = twist_from_cocycle_dual(s)
    assert J.element == J3.element
    # and back
    s2 = cocycle_from_twist_dual(J3, Ad)
    assert s2.values == s.values


def test_twisted_algebra_O(A, J3):
    t0 = time.time()
    O = apply_twist(A, J3)
    print("apply_twist in %.1fs" % (time.time() - t0))
    assert not is_cocommutative(O)
    # roundtrip
    Jinv = TwistData(O, dict(J3.inverse), dict(J3.element), name="J3^-1")
    A2 = apply_twist(O, Jinv, verify=False)
    assert hopf_equal(A2, A)
    # character convolution group is S3: chi_eta * chi_tau = chi_{eta tau}
    chars, table = character_convolution_group(O)
    assert len(chars) == 6
    assert not table.is_abelian()
    # identify each character by the group element whose idempotent it selects
    sp = A.aux["smash"]
    pack = sp["pack"]
    sel = {}
    for t, chi in enumerate(chars):
        picks = [g for g in range(6) if chi.get(pack(0, g), scalar(0)).is_one()]
        assert len(picks) == 1
        sel[t] = picks[0]
    for t1 in range(6):
        for t2 in range(6):
            assert sel[table.op(t1, t2)] == S3.op(sel[t1], sel[t2])


def test_deltaj_cross_check(A, J3):
    """The braided conjugation formula for Delta^J on r # 1 matches the
    plain conjugation in A tensor A.  (Jb_3 is not H-invariant, so the
    full re-bosonization route is not available here; the r # 1 level
    formula holds regardless.)"""
    from hopflab.twists import deltaj_formula_check
    Jb = braided_j_n(3)
    assert deltaj_formula_check(A, Jb)
    # Delta^J restricted to the H-copy is genuinely deformed here: that
    # identity needs H-invariance of the braided element, which Jb_3
    # lacks.  (The braided-twist cases are covered in the acceptance
    # battery for the quantum line and the quantum plane.)
    B2 = apply_twist(A, J3, verify=False)
    sp = A.aux["smash"]
    pack = sp["pack"]
    R = sp["R"]
    changed = [h for h in range(R.base.dim)
               if B2.comult(pack(0, h)) != A.comult(pack(0, h))]
    assert changed


def test_sigma_gm_restriction_roundtrip(A):
    Ad = dual_hopf(A)
    s = sigma_gm(3, A, Ad)
    # the restriction lives on the dual Nichols algebra: build R* and the
    # bosonization of (R*, H*) which is structure-equal to Ad
    R = A.aux["smash"]["R"]
    Hd = dual_hopf(R.base)
    Rd = dual_braided(R, Hd)
    Bd = bosonize(Rd, Hd)
    assert hopf_equal(Bd, Ad)


def test_extension_m2():
    H, V, R, A = fk3_over_extension(2)
    assert A.dim == 144
    J = extend_j3(2)
    rep = verify_twist(J)
    assert rep.ok, rep


def test_extension_m3():
    H, V, R, A = fk3_over_extension(3)
    assert A.dim == 216
    J = extend_j3(3)
    rep = verify_twist(J)
    assert rep.ok, rep


def test_extension_trivial_reduces():
    H, V, R, A = fk3_over_extension(1)
    assert A.dim == 72
    J = extend_j3(1)
    J3 = twist_j_n(3)
    # same element under the index bijection (h, e) -> h
    assert len(J.element) == len(J3.element)
    assert verify_twist(J).ok
