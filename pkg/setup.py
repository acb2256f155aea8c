"""Build script: compiles the optional arithmetic kernel when Cython and
a C compiler are present; the pure-Python kernel is used otherwise (the
package selects the backend at import time)."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    ext_modules = cythonize(
        ["src/hopflab/_ckernels.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # no Cython or no compiler: pure Python only
    print("skipping compiled kernels (%s)" % exc)

setup(ext_modules=ext_modules)
