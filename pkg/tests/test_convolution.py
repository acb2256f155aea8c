from hopflab.scalars import scalar
from hopflab.groups import symmetric, cyclic
from hopflab.construct import group_algebra, function_algebra
from hopflab.construct.cleft import cleft_a2
from hopflab.linalg import (SparseMat, convolution_product, convolution_unit,
                            convolution_inverse, v_eq)

S3 = symmetric(3)


def test_convolution_unit_law():
    H = group_algebra(S3)
    idm = SparseMat.identity(H.dim)
    uni = convolution_unit(H, H)
    assert convolution_product(uni, idm, H, H) == idm
    assert convolution_product(idm, uni, H, H) == idm


def test_convolution_square_on_c2():
    H = group_algebra(cyclic(2))
    idm = SparseMat.identity(2)
    sq = convolution_product(idm, idm, H, H)
    # (id * id)(g) = g^2 = 1
    assert sq.col(1) == {0: scalar(1)}
    assert sq.col(0) == {0: scalar(1)}


def test_antipode_convolution_axiom():
    H = group_algebra(S3)
    idm = SparseMat.identity(H.dim)
    assert convolution_product(idm, H.antipode, H, H) == convolution_unit(H, H)


def test_convolution_inverse_of_id_is_group_inversion():
    H = group_algebra(S3)
    S = convolution_inverse(SparseMat.identity(H.dim), H, H)
    expect = SparseMat(6, 6, {(S3.inv[i], i): scalar(1) for i in range(6)})
    assert S == expect


def test_convolution_inverse_involutive():
    H = function_algebra(S3)
    idm = SparseMat.identity(H.dim)
    S = convolution_inverse(idm, H, H)
    back = convolution_inverse(S, H, H)
    assert back == idm


def test_gamma_double_inverse():
    c = cleft_a2((scalar(1), scalar(0), scalar(-1)))
    back = convolution_inverse(c.gamma_inv, c.base, c.E)
    assert back == c.gamma


def test_a_sigma_is_e_via_gamma():
    """The one-sided deformation sigma * m on A is carried onto E by the
    section: gamma(m_(sigma)(x, y)) = gamma(x) gamma(y) on all pairs."""
    from hopflab.twists import cocycle_from_section
    from hopflab.linalg import algebra_mul, v_add_into
    c = cleft_a2((scalar(2), scalar(1), scalar(3)))
    A, E = c.base, c.E
    s = cocycle_from_section(c)
    gam = c.gamma.cols_dict()
    for x in range(A.dim):
        dx = A.comult(x)
        for y in range(A.dim):
            dy = A.comult(y)
            msig = {}
            for (a, a2), ca in dx.items():
                for (b, b2), cb in dy.items():
                    v = s.values.get((a, b))
                    if v is not None:
                        v_add_into(msig, A.mult(a2, b2), v * ca * cb)
            lhs = {}
            for k, cv in msig.items():
                v_add_into(lhs, gam[k], cv)
            rhs = algebra_mul(E, gam[x], gam[y])
            assert v_eq(lhs, rhs), (A.labels[x], A.labels[y])
