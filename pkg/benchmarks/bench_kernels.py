#!/usr/bin/env python3
"""Benchmark: compiled arithmetic kernels against the pure-Python ones.

Three workloads, coarse to fine:
  scalar-mix   tight loop of cyclotomic multiply/add at several field orders
  fk3-verify   the full twist-identity check for the transposition twist
               on the 72-dimensional bosonization
  a2-nichols   quantum symmetrizer construction of the rank-two q=-1
               Nichols algebra (kernel ranks per degree)

Run after `python3 setup.py build_ext --inplace`; without the compiled
module only the python row is printed.
"""

import time

from hopflab.scalars import set_backend, get_backend, root_of_unity, scalar


def timed(fn, *args):
    t0 = time.time()
    fn(*args)
    return time.time() - t0


def scalar_mix():
    vals = []
    for L in (1, 3, 4, 12):
        z = root_of_unity(L, 1)
        vals.append(z + scalar(2))
        vals.append(z * z - scalar(1, L))
    acc = scalar(1)
    for _ in range(4000):
        for v in vals:
            acc = acc * v + v
            if acc.den > 10 ** 6:
                acc = scalar(1)
    return acc


def fk3_verify():
    from hopflab.construct.presets import fk3_bosonization, fk3_nichols
    from hopflab.gallery import twist_j_n
    from hopflab.twists import verify_twist
    fk3_nichols.cache_clear()
    A = fk3_bosonization()
    rep = verify_twist(twist_j_n(3, A))
    assert rep.ok


def a2_nichols():
    from hopflab.construct.presets import a2_nichols_pbw, a2_minus_one_realization
    a2_nichols_pbw.cache_clear()
    a2_minus_one_realization.cache_clear()
    R = a2_nichols_pbw()
    assert R.dim == 8


WORKLOADS = [("scalar-mix", scalar_mix),
             ("fk3-verify", fk3_verify),
             ("a2-nichols", a2_nichols)]


def main():
    backends = ["python"]
    try:
        import hopflab._ckernels  # noqa: F401
        backends.append("c")
    except ImportError:
        print("compiled kernels not available; benchmarking python only")
    rows = {}
    for b in backends:
        set_backend(b)
        for name, fn in WORKLOADS:
            rows.setdefault(name, {})[b] = timed(fn)
    set_backend(backends[-1])
    print("%-12s" % "workload", "".join("%12s" % b for b in backends),
          "%12s" % "speedup" if len(backends) > 1 else "")
    for name, times in rows.items():
        line = "%-12s" % name + "".join("%11.2fs" % times[b] for b in backends)
        if len(backends) > 1 and times["c"] > 0:
            line += "%11.2fx" % (times["python"] / times["c"])
        print(line)


if __name__ == "__main__":
    main()
