"""Homotopy orbits, the tc mapping cone, and assembly into truncated complexes."""

from __future__ import annotations

from ..core.complex import TruncatedComplex, complex_from_maps
from ..dga.algebra import PresentedAlgebra
from ..dga.lincomb import add_term
from .fls import cyclic_S, fls_basis, hochschild_differential, power_map

MODELS = ("fls", "hos", "tc")

# hos basis: (k, y, word) meaning upsilon^k (x) y (x) word, |upsilon| = 2
# tc basis:  ("b", y, word) for the fls summand, ("s", k, y, word) for s(upsilon^k (x) y (x) word)


def hos_basis(A: PresentedAlgebra, n: int) -> tuple:
    return tuple((k, y, w) for k in range(n // 2 + 1) for y, w in fls_basis(A, n - 2 * k))


def hos_differential(e: tuple, A: PresentedAlgebra) -> dict:
    """``upsilon^k (x) d e + upsilon^(k+1) (x) S e``; upsilon is even so no sign."""
    k, y, w = e
    out: dict = {}
    for (z, v), c in hochschild_differential((y, w), A).items():
        add_term(out, (k, z, v), c)
    for (z, v), c in cyclic_S((y, w), A).items():
        add_term(out, (k + 1, z, v), c)
    return out


def tc_basis(A: PresentedAlgebra, n: int) -> tuple:
    """Cone basis in degree ``n``; ``s`` lowers degree by one.

    The degree -1 element ``s(1 (x) 1 (x) 1)`` is a cocycle hitting nothing
    in degree 0 and is left out.
    """
    base = tuple(("b", y, w) for y, w in fls_basis(A, n))
    shifted = tuple(("s",) + h for h in hos_basis(A, n + 1))
    return base + shifted


def tc_cone_differential(e: tuple, A: PresentedAlgebra) -> dict:
    """``D(x (x) c) = d(x (x) c)`` and
    ``D(s(upsilon^k (x) e)) = [k = 0](e - psi chi e) - s(D~(upsilon^k (x) e))``.
    """
    out: dict = {}
    if e[0] == "b":
        _, y, w = e
        for (z, v), c in hochschild_differential((y, w), A).items():
            add_term(out, ("b", z, v), c)
        return out
    _, k, y, w = e
    if k == 0:
        add_term(out, ("b", y, w), 1)
        for (z, v), c in power_map((y, w), A).items():
            add_term(out, ("b", z, v), -c)
    for h, c in hos_differential((k, y, w), A).items():
        add_term(out, ("s",) + h, -c)
    return out


_BASES = {"fls": fls_basis, "hos": hos_basis, "tc": tc_basis}


def _fls_d(e, A):
    return hochschild_differential(e, A)


_DIFFS = {"fls": _fls_d, "hos": hos_differential, "tc": tc_cone_differential}


def model_basis(A: PresentedAlgebra, model: str, n: int) -> tuple:
    return _BASES[_check_model(model)](A, n)


def model_differential(A: PresentedAlgebra, model: str, e) -> dict:
    return _DIFFS[_check_model(model)](e, A)


def _check_model(model: str) -> str:
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}; expected one of {', '.join(MODELS)}")
    return model


def build_model(A: PresentedAlgebra, model: str, max_degree: int) -> TruncatedComplex:
    """Assemble the truncated complex and verify ``d o d = 0`` before returning.

    Raises :class:`~thinloop.core.complex.DifferentialSquareError` naming the
    first basis element on which the square fails.
    """
    _check_model(model)
    if max_degree < 2:
        raise ValueError("max_degree must be at least 2")
    basis = {n: model_basis(A, model, n) for n in range(max_degree + 1)}
    diff = _DIFFS[model]
    cx = complex_from_maps(max_degree, basis, lambda e: diff(e, A), name=f"{model}({A.name})")
    cx.check_d_squared()
    return cx


__all__ = [
    "MODELS",
    "build_model",
    "hos_basis",
    "hos_differential",
    "model_basis",
    "model_differential",
    "tc_basis",
    "tc_cone_differential",
]
