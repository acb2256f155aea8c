"""Equivalence of the compiled and pure-Python arithmetic kernels."""

import random

import pytest

from hopflab import _kernels_py
from hopflab.scalars import cyclotomic_poly, _red_rows

try:
    from hopflab import _ckernels
except ImportError:
    _ckernels = None

needs_c = pytest.mark.skipif(_ckernels is None,
                             reason="compiled kernels not built")


@needs_c
def test_backends_agree_on_random_inputs():
    rng = random.Random(0)
    for order in (1, 2, 3, 4, 6, 12):
        d = len(cyclotomic_poly(order)) - 1
        red = _red_rows(order) if d > 1 else ()
        for _ in range(300):
            n1 = tuple(rng.randint(-99, 99) for _ in range(d))
            n2 = tuple(rng.randint(-99, 99) for _ in range(d))
            d1 = rng.randint(1, 60)
            d2 = rng.randint(1, 60)
            assert _ckernels.cyc_add(n1, d1, n2, d2) == \
                _kernels_py.cyc_add(n1, d1, n2, d2)
            assert _ckernels.cyc_mul(n1, d1, n2, d2, red) == \
                _kernels_py.cyc_mul(n1, d1, n2, d2, red)
            assert _ckernels.norm_frac(list(n1), d1) == \
                _kernels_py.norm_frac(list(n1), d1)


@needs_c
def test_backend_switch():
    from hopflab.scalars import set_backend, get_backend, root_of_unity
    orig = get_backend()
    try:
        set_backend("python")
        a = root_of_unity(12, 7) * root_of_unity(12, 9)
        set_backend("c")
        b = root_of_unity(12, 7) * root_of_unity(12, 9)
        assert a == b
    finally:
        set_backend(orig)
