from .groups_hopf import group_algebra, function_algebra, matched_pair_extension
from .nichols import (BraidedHopfData, nichols_algebra, diagonal_module,
                      yd_pair_module, transposition_module)
from .smash import bosonize, smash_parts, bosonization_theta
from .cleft import CleftData, cleft_a2

__all__ = [
    "group_algebra", "function_algebra", "matched_pair_extension",
    "BraidedHopfData", "nichols_algebra", "diagonal_module",
    "yd_pair_module", "transposition_module",
    "bosonize", "smash_parts", "bosonization_theta",
    "CleftData", "cleft_a2",
]
