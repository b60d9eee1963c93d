"""Cubical chains on the circle, the ``T_n`` family, and the orbit complex."""

from .cubes import (
    BASEPOINT,
    T_FAMILY_BOUND,
    CircleCube,
    boundary,
    build_T_family,
    chain,
    chain_degree,
    cube,
    cube_boundary,
    cube_product,
    cube_times,
    diagonal,
    has_linear_terms,
    serre_diagonal,
    sigma,
    sigma_chain,
)
from .orbit import (
    OmegaComplexSpec,
    OmegaRelationError,
    omega_bound,
    orbit_basis,
    orbit_complex,
    orbit_degree,
    orbit_differential,
    orbit_square_components,
    random_omega_spec,
    single_omega0_example,
)
from .tdga import (
    generator_differential,
    realize,
    resolution_differential,
    resolution_differential_lc,
    t_degree,
    t_dga_differential,
    t_dga_differential_lc,
    words_up_to,
)

__all__ = [
    "BASEPOINT",
    "CircleCube",
    "OmegaComplexSpec",
    "OmegaRelationError",
    "T_FAMILY_BOUND",
    "boundary",
    "build_T_family",
    "chain",
    "chain_degree",
    "cube",
    "cube_boundary",
    "cube_product",
    "cube_times",
    "diagonal",
    "generator_differential",
    "has_linear_terms",
    "omega_bound",
    "orbit_basis",
    "orbit_complex",
    "orbit_degree",
    "orbit_differential",
    "orbit_square_components",
    "random_omega_spec",
    "realize",
    "resolution_differential",
    "resolution_differential_lc",
    "serre_diagonal",
    "sigma",
    "sigma_chain",
    "single_omega0_example",
    "t_degree",
    "t_dga_differential",
    "t_dga_differential_lc",
    "words_up_to",
]
