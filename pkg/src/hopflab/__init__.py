"""hopflab: exact structure-constant computations for finite-dimensional
Hopf algebras, their Drinfeld twists, Hopf 2-cocycles, Yetter-Drinfeld
modules, Nichols algebras, bosonizations and cleft objects.

Everything is computed over cyclotomic fields with exact rational
coefficients; every constructor re-verifies the axioms it claims.
"""

from .scalars import (CycScalar, root_of_unity, embed, invert, scalar,
                      q_number, q_factorial, q_binomial, get_backend, set_backend)
from .errors import (HopfLabError, CoercionError, NotInvertible, NoSolution,
                     ConstructionError, VerificationError)

__version__ = "0.1.0"
