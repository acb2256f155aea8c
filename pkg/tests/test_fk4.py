"""The gated S4 checks: the sign-grouped slice verification of the
transposition twist identity, cross-checked against the fully verified
S3 case."""

from hopflab.fk4 import fk4_twist_identity_check, _SignSlice
from hopflab.regress import run_fk4_long


def test_fk4_slice_dims():
    S = _SignSlice(4, max_degree=3)
    assert S.R.graded_dims()[:3] == [1, 6, 19]


def test_fk3_slice_agrees_with_dense_verification():
    ok, detail = fk4_twist_identity_check(3)
    assert ok, detail


def test_fk4_twist_identity():
    ok, detail = fk4_twist_identity_check(4)
    assert ok, detail


def test_long_runner():
    results = run_fk4_long()
    assert all(ok for _, ok, _ in results)
