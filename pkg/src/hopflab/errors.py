"""Exception types shared across the package."""


class HopfLabError(Exception):
    pass


class CoercionError(HopfLabError):
    """Scalar could not be moved into the requested cyclotomic field."""


class NotInvertible(HopfLabError):
    """Element or map has no (convolution) inverse."""


class NoSolution(HopfLabError):
    """Linear system is inconsistent."""


class ConstructionError(HopfLabError):
    """Constructor input violates a structural precondition."""


class VerificationError(HopfLabError):
    """An axiom check that must hold by construction failed."""
