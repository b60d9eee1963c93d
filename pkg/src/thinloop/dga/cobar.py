"""Coalgebras, their cobar constructions, and the cobar algebra as a dga.

A coalgebra here is anything with ``counit``, ``degree``, ``d``,
``reduced_coproduct`` and ``basis_in_degree``; :class:`PresentedCoalgebra`
is a finite table and :class:`BarCoalgebra` wraps the bar construction of a
presented algebra.  Cobar words ``s^-1 c_1 ... s^-1 c_n`` are tuples
``(c_1, ..., c_n)`` with ``|s^-1 c| = |c| + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Mapping, Protocol

from .algebra import PresentedAlgebra
from .bar import EMPTY, bar_degree, bar_differential, words_of_bar_degree
from .lincomb import add_into, add_term
from .signs import sign_power


class CoalgebraValidationError(ValueError):
    """A coalgebra table violates simple connectivity, d^2 = 0, or coassociativity."""


class Coalgebra(Protocol):
    counit: Hashable

    def degree(self, x: Hashable) -> int: ...

    def d(self, x: Hashable) -> dict: ...

    def reduced_coproduct(self, x: Hashable) -> dict: ...

    def basis_in_degree(self, n: int) -> tuple: ...


@dataclass(frozen=True)
class PresentedCoalgebra:
    """Finite coalgebra: basis ``(label, degree)``, one degree-0 counit label.

    ``coproduct`` gives the reduced coproduct ``label -> {(a, b): coeff}``.
    """

    basis: tuple[tuple[str, int], ...]
    differential: Mapping[str, Mapping[str, int]] = field(default_factory=dict)
    coproduct: Mapping[str, Mapping[tuple[str, str], int]] = field(default_factory=dict)
    name: str = ""

    def __post_init__(self):
        basis = tuple((str(a), int(d)) for a, d in self.basis)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "differential", {k: dict(v) for k, v in self.differential.items() if v})
        object.__setattr__(self, "coproduct", {k: {tuple(p): c for p, c in v.items() if c} for k, v in self.coproduct.items()})
        object.__setattr__(self, "_deg", dict(basis))
        self._validate()

    @property
    def counit(self) -> str:
        return next(a for a, d in self.basis if d == 0)

    def degree(self, x: str) -> int:
        return self._deg[x]

    def d(self, x: str) -> dict:
        return dict(self.differential.get(x, {}))

    def reduced_coproduct(self, x: str) -> dict:
        return dict(self.coproduct.get(x, {}))

    def basis_in_degree(self, n: int) -> tuple[str, ...]:
        return tuple(a for a, d in self.basis if d == n)

    def _validate(self) -> None:
        deg = self._deg
        if len(deg) != len(self.basis):
            raise CoalgebraValidationError("duplicate basis labels")
        zeros = [a for a, d in self.basis if d == 0]
        if len(zeros) != 1:
            raise CoalgebraValidationError(f"need exactly one degree-0 element (the counit), got {zeros}")
        for a, d in self.basis:
            if d == 1 or d < 0:
                raise CoalgebraValidationError(f"{a!r} has degree {d}; the coalgebra must be simply connected")
        for x, img in self.differential.items():
            for y in img:
                if deg.get(y) != deg[x] + 1:
                    raise CoalgebraValidationError(f"d({x}) contains {y!r} of the wrong degree")
        counit = zeros[0]
        for x, img in self.coproduct.items():
            for a, b in img:
                if counit in (a, b):
                    raise CoalgebraValidationError(f"reduced coproduct of {x!r} may not involve the counit")
                if deg[a] + deg[b] != deg[x]:
                    raise CoalgebraValidationError(f"coproduct of {x!r} is not degree-preserving")
        for x in deg:
            if lc_d(self, lc_d(self, {x: 1})):
                raise CoalgebraValidationError(f"d^2 != 0 on {x!r}")
            if not is_coassociative_at(self, x):
                raise CoalgebraValidationError(f"reduced coproduct is not coassociative at {x!r}")
            if not is_coderivation_at(self, x):
                raise CoalgebraValidationError(f"d is not a coderivation at {x!r}")


def lc_d(C, elem: Mapping) -> dict:
    out: dict = {}
    for x, c in elem.items():
        add_into(out, C.d(x), c)
    return out


def is_coassociative_at(C, x) -> bool:
    left: dict = {}
    right: dict = {}
    for (a, b), c in C.reduced_coproduct(x).items():
        for (a1, a2), c1 in C.reduced_coproduct(a).items():
            add_term(left, (a1, a2, b), c * c1)
        for (b1, b2), c2 in C.reduced_coproduct(b).items():
            add_term(right, (a, b1, b2), c * c2)
    return left == right


def is_coderivation_at(C, x) -> bool:
    lhs: dict = {}
    for y, c in C.d(x).items():
        add_into(lhs, C.reduced_coproduct(y), c)
    rhs: dict = {}
    for (a, b), c in C.reduced_coproduct(x).items():
        for y, e in C.d(a).items():
            add_term(rhs, (y, b), c * e)
        for y, e in C.d(b).items():
            add_term(rhs, (a, y), c * e * sign_power(C.degree(a)))
    return lhs == rhs


class BarCoalgebra:
    """The bar construction of ``A`` with deconcatenation as a coalgebra."""

    def __init__(self, A: PresentedAlgebra):
        self.A = A
        self.counit = EMPTY

    def degree(self, w) -> int:
        return bar_degree(w, self.A)

    def d(self, w) -> dict:
        return bar_differential(w, self.A)

    def reduced_coproduct(self, w) -> dict:
        return {(w[:i], w[i:]): 1 for i in range(1, len(w))}

    def basis_in_degree(self, n: int) -> tuple:
        return words_of_bar_degree(self.A, n)


# -- the cobar construction -----------------------------------------------


def cobar_degree(word, C) -> int:
    return sum(C.degree(c) + 1 for c in word)


def cobar_generator_differential(c, C) -> dict:
    """``d(s^-1 c) = -s^-1(dc) + sum (-1)^|c'| s^-1 c' . s^-1 c''``."""
    if c == C.counit:
        raise ValueError("the counit does not generate the cobar construction")
    if C.degree(c) < 1:
        raise CoalgebraValidationError(f"{c!r} has degree {C.degree(c)}; cobar generators need positive degree")
    out: dict = {}
    for y, e in C.d(c).items():
        add_term(out, (y,), -e)
    for (a, b), e in C.reduced_coproduct(c).items():
        add_term(out, (a, b), sign_power(C.degree(a)) * e)
    return out


def cobar_differential(word, C) -> dict:
    """Derivation extension over the concatenation product."""
    word = tuple(word)
    out: dict = {}
    pre = 0
    for i, c in enumerate(word):
        sgn = sign_power(pre)
        for w, e in cobar_generator_differential(c, C).items():
            add_term(out, word[:i] + w + word[i + 1 :], sgn * e)
        pre += C.degree(c) + 1
    return out


def cobar_differential_lc(elem: Mapping, C) -> dict:
    out: dict = {}
    for w, c in elem.items():
        add_into(out, cobar_differential(w, C), c)
    return out


class CobarAlgebra:
    """``Omega C`` with the algebra interface used by :func:`twisted_tensor`."""

    def __init__(self, C):
        self.C = C
        self.unit = ()
        self._cache: dict[int, tuple] = {}

    def degree(self, word) -> int:
        return cobar_degree(word, self.C)

    def d(self, word) -> dict:
        return cobar_differential(word, self.C)

    def mul(self, u, v) -> dict:
        return {tuple(u) + tuple(v): 1}

    def basis_in_degree(self, n: int) -> tuple:
        if n in self._cache:
            return self._cache[n]
        if n < 0:
            return ()
        if n == 0:
            return ((),)
        out = []
        for m in range(2, n + 1):
            for c in self.C.basis_in_degree(m - 1):
                out.extend((c,) + rest for rest in self.basis_in_degree(n - m))
        self._cache[n] = tuple(out)
        return self._cache[n]


def rank3_test_coalgebra() -> PresentedCoalgebra:
    """``{1, c2, c4}`` with ``reduced coproduct(c4) = c2 (x) c2``."""
    return PresentedCoalgebra(
        (("1", 0), ("c2", 2), ("c4", 4)),
        coproduct={"c4": {("c2", "c2"): 1}},
        name="rank3",
    )


__all__ = [
    "BarCoalgebra",
    "Coalgebra",
    "CoalgebraValidationError",
    "CobarAlgebra",
    "PresentedCoalgebra",
    "cobar_degree",
    "cobar_differential",
    "cobar_differential_lc",
    "cobar_generator_differential",
    "is_coassociative_at",
    "is_coderivation_at",
    "rank3_test_coalgebra",
]
