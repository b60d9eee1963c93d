"""Exact graded linear algebra: sparse integer matrices, Smith form, cohomology."""

from .complex import (
    BasisIndex,
    DegreeOutOfRange,
    DifferentialSquareError,
    HomologyGroup,
    TruncatedComplex,
    complex_from_maps,
    homology,
    mod_p_dimension_via_uct,
    reduce_mod_p,
)
from .induced import cohomology_basis, induced_matrix
from .snf import is_prime, rank_mod_p, smith_normal_form
from .sparse import SparseIntMatrix

__all__ = [
    "BasisIndex",
    "DegreeOutOfRange",
    "DifferentialSquareError",
    "HomologyGroup",
    "SparseIntMatrix",
    "TruncatedComplex",
    "cohomology_basis",
    "complex_from_maps",
    "homology",
    "induced_matrix",
    "is_prime",
    "mod_p_dimension_via_uct",
    "rank_mod_p",
    "reduce_mod_p",
    "smith_normal_form",
]
