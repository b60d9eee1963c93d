"""Finite-type graded-commutative cochain algebras given by tables."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Mapping

from .lincomb import add_into, scaled
from .signs import sign_power


class AlgebraValidationError(ValueError):
    """A presentation violates one of the cochain-algebra invariants."""

    kind = "invalid"


class DegreeOneGeneratorError(AlgebraValidationError):
    kind = "degree-one"


class DifferentialError(AlgebraValidationError):
    """d^2 != 0, wrong degree, or Leibniz failure."""

    kind = "differential"


class NonCommutativeError(AlgebraValidationError):
    kind = "non-commutative"


class AssociativityError(AlgebraValidationError):
    kind = "non-associative"


@dataclass(frozen=True)
class PresentedAlgebra:
    """A cochain algebra with additive basis ``generators`` (label, degree).

    ``differential`` maps a label to ``{label: coeff}``; ``products`` maps an
    ordered pair of positive-degree labels to ``{label: coeff}``.  Pairs not
    listed multiply to zero; a pair listed only as ``(b, a)`` is looked up with
    the graded-commutativity sign.  The unit is the unique degree-0 generator.
    """

    generators: tuple[tuple[str, int], ...]
    differential: Mapping[str, Mapping[str, int]] = field(default_factory=dict)
    products: Mapping[tuple[str, str], Mapping[str, int]] = field(default_factory=dict)
    name: str = ""

    def __post_init__(self):
        gens = tuple((str(label), int(deg)) for label, deg in self.generators)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "_deg", dict(gens))
        object.__setattr__(self, "differential", {k: dict(v) for k, v in self.differential.items() if v})
        object.__setattr__(self, "products", {tuple(k): dict(v) for k, v in self.products.items() if v})
        self._validate()

    # -- structure -------------------------------------------------------

    @property
    def degrees(self) -> dict[str, int]:
        return self._deg

    @property
    def unit(self) -> str:
        return self._unit

    @property
    def positive(self) -> tuple[str, ...]:
        """Positive-degree basis labels in presentation order."""
        return tuple(label for label, deg in self.generators if deg > 0)

    def degree(self, label: str) -> int:
        return self._deg[label]

    def d(self, label: str) -> dict[str, int]:
        return dict(self.differential.get(label, {}))

    def mul(self, a: str, b: str) -> dict[str, int]:
        """Product of two basis elements as a linear combination."""
        unit = self._unit
        if a == unit:
            return {b: 1}
        if b == unit:
            return {a: 1}
        if (a, b) in self.products:
            return dict(self.products[(a, b)])
        if (b, a) in self.products:
            return scaled(self.products[(b, a)], sign_power(self.degree(a) * self.degree(b)))
        return {}

    def mul_lc(self, x: Mapping[str, int], y: Mapping[str, int]) -> dict[str, int]:
        acc: dict[str, int] = {}
        for a, ca in x.items():
            for b, cb in y.items():
                add_into(acc, self.mul(a, b), ca * cb)
        return acc

    def d_lc(self, x: Mapping[str, int]) -> dict[str, int]:
        acc: dict[str, int] = {}
        for a, c in x.items():
            add_into(acc, self.d(a), c)
        return acc

    def basis_in_degree(self, n: int) -> tuple[str, ...]:
        return tuple(label for label, deg in self.generators if deg == n)

    # -- validation ------------------------------------------------------

    def _validate(self) -> None:
        labels = [label for label, _ in self.generators]
        if len(set(labels)) != len(labels):
            raise AlgebraValidationError(f"duplicate generator labels in {labels}")
        deg = dict(self.generators)
        units = [label for label, d in self.generators if d == 0]
        if len(units) != 1:
            raise AlgebraValidationError(f"need exactly one degree-0 generator (the unit), got {units}")
        for label, d in self.generators:
            if d < 0:
                raise AlgebraValidationError(f"generator {label!r} has negative degree {d}")
            if d == 1:
                raise DegreeOneGeneratorError(f"generator {label!r} has degree 1; the algebra must be simply connected")
        unit = units[0]
        object.__setattr__(self, "_unit", unit)

        def check_terms(where: str, terms: Mapping[str, int], want: int, err=AlgebraValidationError) -> None:
            for g in terms:
                if g not in deg:
                    raise AlgebraValidationError(f"{where} refers to unknown generator {g!r}")
                if deg[g] != want:
                    raise err(f"{where} contains {g!r} of degree {deg[g]}, expected {want}")

        for src, img in self.differential.items():
            if src not in deg:
                raise AlgebraValidationError(f"differential of unknown generator {src!r}")
            if src == unit:
                raise DifferentialError("the unit must be a cocycle")
            check_terms(f"d({src})", img, deg[src] + 1, DifferentialError)
        for (a, b), img in self.products.items():
            for g in (a, b):
                if g not in deg:
                    raise AlgebraValidationError(f"product ({a}, {b}) refers to unknown generator {g!r}")
                if g == unit:
                    raise AlgebraValidationError("products with the unit are implicit; do not list them")
            check_terms(f"{a}*{b}", img, deg[a] + deg[b])

        for (a, b), img in self.products.items():
            sgn = sign_power(deg[a] * deg[b])
            if a == b and sgn == -1:
                raise NonCommutativeError(f"{a}*{a} must vanish for odd {a!r} (graded commutativity), got {img}")
            if (b, a) in self.products and self.products[(b, a)] != scaled(img, sgn):
                raise NonCommutativeError(
                    f"{a}*{b} = {img} but {b}*{a} = {self.products[(b, a)]}; expected a sign of {sgn}"
                )

        for g in self.positive:
            dd = self.d_lc(self.d(g))
            if dd:
                raise DifferentialError(f"d(d({g})) = {dd} != 0")

        pos = self.positive
        for a, b in product(pos, repeat=2):
            lhs = self.d_lc(self.mul(a, b))
            rhs = self.mul_lc(self.d(a), {b: 1})
            add_into(rhs, self.mul_lc({a: 1}, self.d(b)), sign_power(deg[a]))
            if lhs != rhs:
                raise DifferentialError(f"Leibniz rule fails on ({a}, {b}): d(ab) = {lhs}, expected {rhs}")
        for a, b, c in product(pos, repeat=3):
            left = self.mul_lc(self.mul(a, b), {c: 1})
            right = self.mul_lc({a: 1}, self.mul(b, c))
            if left != right:
                raise AssociativityError(f"({a}{b}){c} = {left} but {a}({b}{c}) = {right}")


def sphere(n: int) -> PresentedAlgebra:
    """Cochains ``Lambda z`` with ``|z| = n`` and ``z^2 = 0``."""
    if n < 2:
        raise AlgebraValidationError(f"sphere dimension must be >= 2, got {n}")
    return PresentedAlgebra((("1", 0), ("z", n)), name=f"sphere:{n}")


def wedge(degrees: list[int]) -> PresentedAlgebra:
    """Wedge of spheres: one generator per degree, all positive products zero."""
    if not degrees:
        raise AlgebraValidationError("wedge needs at least one sphere")
    gens = [("1", 0)] + [(f"z{i + 1}", d) for i, d in enumerate(degrees)]
    return PresentedAlgebra(tuple(gens), name="wedge:" + ",".join(map(str, degrees)))


def truncated_polynomial(degree: int, height: int) -> PresentedAlgebra:
    """``Z[w]/w^height`` with ``|w| = degree`` (even) and zero differential."""
    if degree % 2 or degree < 2:
        raise AlgebraValidationError("truncated polynomial generator must have even degree >= 2")
    if height < 2:
        raise AlgebraValidationError("height must be >= 2")
    labels = ["1", "w"] + [f"w{k}" for k in range(2, height)]
    gens = [(lab, k * degree) for k, lab in enumerate(labels)]
    prods = {}
    for i in range(1, height):
        for j in range(1, height):
            if i + j < height:
                prods[(labels[i], labels[j])] = {labels[i + j]: 1}
    return PresentedAlgebra(tuple(gens), products=prods, name=f"poly:{degree},{height}")


__all__ = [
    "AlgebraValidationError",
    "AssociativityError",
    "DegreeOneGeneratorError",
    "DifferentialError",
    "NonCommutativeError",
    "PresentedAlgebra",
    "sphere",
    "truncated_polynomial",
    "wedge",
]
