"""Thin models of the free loop space, its homotopy orbits, and mod-2 TC."""

from .fls import (
    FlsBasisElement,
    apply_linear,
    cyclic_S,
    fls_basis,
    fls_degree,
    hochschild_differential,
    left_multiply,
    power_map,
)
from .full import FullLoopModel
from .models import (
    MODELS,
    build_model,
    hos_basis,
    hos_differential,
    model_basis,
    model_differential,
    tc_basis,
    tc_cone_differential,
)

__all__ = [
    "FlsBasisElement",
    "FullLoopModel",
    "MODELS",
    "apply_linear",
    "build_model",
    "cyclic_S",
    "fls_basis",
    "fls_degree",
    "hochschild_differential",
    "hos_basis",
    "hos_differential",
    "left_multiply",
    "model_basis",
    "model_differential",
    "power_map",
    "tc_basis",
    "tc_cone_differential",
]
