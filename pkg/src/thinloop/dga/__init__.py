"""Presented cochain algebras, bar and cobar constructions, twisting cochains."""

from .algebra import (
    AlgebraValidationError,
    AssociativityError,
    DegreeOneGeneratorError,
    DifferentialError,
    NonCommutativeError,
    PresentedAlgebra,
    sphere,
    truncated_polynomial,
    wedge,
)
from .bar import (
    EMPTY,
    BarElement,
    BarWord,
    bar_degree,
    bar_differential,
    bar_differential_lc,
    deconcatenate,
    format_word,
    shuffle_by_permutations,
    shuffle_lc,
    shuffle_product,
    sz,
    words_of_bar_degree,
)
from .cobar import (
    BarCoalgebra,
    CoalgebraValidationError,
    CobarAlgebra,
    PresentedCoalgebra,
    cobar_differential,
    cobar_differential_lc,
    rank3_test_coalgebra,
)
from .signs import block_swap_sign, koszul_sign, sign_power
from .twisted import (
    TwistingCochainError,
    TwistingCochainSpec,
    cobar_twisting_cochain,
    twisted_differential,
    twisted_tensor,
    zero_twisting_cochain,
)

__all__ = [
    "AlgebraValidationError",
    "AssociativityError",
    "BarCoalgebra",
    "BarElement",
    "BarWord",
    "CoalgebraValidationError",
    "CobarAlgebra",
    "DegreeOneGeneratorError",
    "DifferentialError",
    "EMPTY",
    "NonCommutativeError",
    "PresentedAlgebra",
    "PresentedCoalgebra",
    "TwistingCochainError",
    "TwistingCochainSpec",
    "bar_degree",
    "bar_differential",
    "bar_differential_lc",
    "cobar_differential",
    "cobar_differential_lc",
    "cobar_twisting_cochain",
    "deconcatenate",
    "format_word",
    "rank3_test_coalgebra",
    "shuffle_by_permutations",
    "shuffle_lc",
    "shuffle_product",
    "sphere",
    "sz",
    "truncated_polynomial",
    "twisted_differential",
    "twisted_tensor",
    "wedge",
    "words_of_bar_degree",
    "zero_twisting_cochain",
]
