"""Sandpile groups of standard representative matrices and their tilings."""

from .sandpile import SandpileLattice, group_order
from .srm import Basis, StandardRepMatrix, dual_matrix, enumerate_bases, full_matrix, matrix_tree_check
from .tiling import ShiftingVector, validate_shifting, w_representatives

__all__ = [
    "Basis",
    "SandpileLattice",
    "ShiftingVector",
    "StandardRepMatrix",
    "dual_matrix",
    "enumerate_bases",
    "full_matrix",
    "group_order",
    "matrix_tree_check",
    "validate_shifting",
    "w_representatives",
]
