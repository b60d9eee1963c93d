"""Twisting cochains and twisted tensor products ``A (x)_t C``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Mapping

from ..core.complex import TruncatedComplex, complex_from_maps
from .cobar import CobarAlgebra
from .lincomb import add_into, add_term
from .signs import sign_power


class TwistingCochainError(ValueError):
    """``dt + td != mu (t (x) t) Delta`` on a named basis element."""

    def __init__(self, label: Hashable, lhs: Mapping, rhs: Mapping):
        self.label = label
        self.lhs = dict(lhs)
        self.rhs = dict(rhs)
        super().__init__(f"twisting-cochain condition fails on {label!r}: dt + td = {self.lhs}, mu(t(x)t)Delta = {self.rhs}")


@dataclass(frozen=True)
class TwistingCochainSpec:
    """A map ``t: C -> A`` raising degree by one, given on basis elements.

    ``t`` is a callable ``label -> {A-basis: coeff}``; it must vanish on the
    counit.  Call :meth:`verify` before trusting it.
    """

    coalgebra: object
    algebra: object
    t: object

    def __call__(self, x) -> dict:
        if x == self.coalgebra.counit:
            return {}
        return dict(self.t(x))

    def _t_lc(self, elem: Mapping) -> dict:
        out: dict = {}
        for x, c in elem.items():
            add_into(out, self(x), c)
        return out

    def defect(self, x) -> tuple[dict, dict]:
        C, A = self.coalgebra, self.algebra
        lhs: dict = {}
        for a, c in self(x).items():
            add_into(lhs, A.d(a), c)
        add_into(lhs, self._t_lc(C.d(x)))
        rhs: dict = {}
        for (x1, x2), c in C.reduced_coproduct(x).items():
            sgn = sign_power(C.degree(x1))
            for a1, e1 in self(x1).items():
                for a2, e2 in self(x2).items():
                    add_into(rhs, A.mul(a1, a2), sgn * c * e1 * e2)
        return lhs, rhs

    def verify(self, max_degree: int) -> None:
        """Check degrees and the twisting condition on all of ``C`` up to ``max_degree``."""
        C, A = self.coalgebra, self.algebra
        for n in range(1, max_degree + 1):
            for x in C.basis_in_degree(n):
                for a in self(x):
                    if A.degree(a) != n + 1:
                        raise TwistingCochainError(x, {a: "degree"}, {})
                lhs, rhs = self.defect(x)
                if lhs != rhs:
                    raise TwistingCochainError(x, lhs, rhs)


def cobar_twisting_cochain(C) -> TwistingCochainSpec:
    """The universal ``t_Omega: C -> Omega C``, ``c -> s^-1 c``."""
    return TwistingCochainSpec(C, CobarAlgebra(C), lambda x: {(x,): 1})


def zero_twisting_cochain(C, A) -> TwistingCochainSpec:
    return TwistingCochainSpec(C, A, lambda x: {})


def twisted_differential(a, x, t: TwistingCochainSpec) -> dict:
    """``D_t(a (x) x) = da (x) x + (-1)^|a| a (x) dx + (-1)^|a| sum a.t(x') (x) x''``.

    The sum runs over the full coproduct; ``t`` kills the counit so only
    ``x' = x`` and the reduced terms survive.
    """
    C, A = t.coalgebra, t.algebra
    out: dict = {}
    for b, c in A.d(a).items():
        add_term(out, (b, x), c)
    sgn = sign_power(A.degree(a))
    for y, c in C.d(x).items():
        add_term(out, (a, y), sgn * c)
    for b, c in t(x).items():
        for ab, e in A.mul(a, b).items():
            add_term(out, (ab, C.counit), sgn * c * e)
    for (x1, x2), c in C.reduced_coproduct(x).items():
        for b, e in t(x1).items():
            for ab, f in A.mul(a, b).items():
                add_term(out, (ab, x2), sgn * c * e * f)
    return out


def twisted_tensor(t: TwistingCochainSpec, max_degree: int, *, verify: bool = True) -> TruncatedComplex:
    """Materialize ``(A (x) C, D_t)`` on degrees ``0..max_degree``."""
    if verify:
        t.verify(max_degree)
    A, C = t.algebra, t.coalgebra
    basis = {}
    for n in range(max_degree + 1):
        basis[n] = tuple((a, x) for k in range(n + 1) for a in A.basis_in_degree(k) for x in C.basis_in_degree(n - k))
    cx = complex_from_maps(max_degree, basis, lambda e: twisted_differential(e[0], e[1], t), name="twisted tensor")
    cx.check_d_squared()
    return cx


__all__ = [
    "TwistingCochainError",
    "TwistingCochainSpec",
    "cobar_twisting_cochain",
    "twisted_differential",
    "twisted_tensor",
    "zero_twisting_cochain",
]
