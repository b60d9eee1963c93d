"""Cubical chains on the circle with exponent-polynomial cubes.

An ``n``-cube ``T(t_0, ..., t_{n-1}) = exp(2 pi i f)`` is stored through its
exponent ``f``, a multilinear integer polynomial: a frozenset of
``(monomial, coeff)`` pairs with each monomial a sorted tuple of variable
indices.  Integer constants do not change the cube and are dropped, so every
vertex is the base point and the unique 0-cube is the unit.

Degeneracy: ``exp(2 pi i f)`` is independent of ``t_i`` iff ``df/dt_i`` is
identically zero on the cube (continuity plus integrality of the jump), and
for a multilinear ``f`` that happens iff no monomial mentions ``t_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

from ..dga.lincomb import add_into, add_term
from ..dga.signs import koszul_sign, sign_power

Monomial = tuple


def _normalize(terms: Mapping[Monomial, int]) -> frozenset:
    return frozenset((m, c) for m, c in terms.items() if c and m)


@dataclass(frozen=True)
class CircleCube:
    dim: int
    exponent: frozenset  # of (monomial, coeff)

    @classmethod
    def from_terms(cls, dim: int, terms: Mapping[Monomial, int]) -> "CircleCube":
        clean: dict = {}
        for m, c in terms.items():
            m = tuple(sorted(m))
            if len(set(m)) != len(m):
                raise ValueError(f"monomial {m} is not multilinear")
            if any(not 0 <= v < dim for v in m):
                raise ValueError(f"monomial {m} uses a variable outside t_0..t_{dim - 1}")
            add_term(clean, m, c)
        return cls(dim, _normalize(clean))

    @property
    def terms(self) -> dict:
        return dict(self.exponent)

    @property
    def is_degenerate(self) -> bool:
        used = {v for m, _ in self.exponent for v in m}
        return len(used) < self.dim

    def substitute(self, var: int, value: int) -> "CircleCube":
        """Face ``t_var = value`` (0 or 1), renumbering later variables down."""
        out: dict = {}
        for m, c in self.exponent:
            if var in m:
                if value == 0:
                    continue
                m = tuple(v for v in m if v != var)
            m = tuple(v - 1 if v > var else v for v in m)
            add_term(out, m, c)
        return CircleCube(self.dim - 1, _normalize(out))

    def restrict(self, zero: Iterable[int] = (), one: Iterable[int] = ()) -> "CircleCube":
        """Set the given variables to 0 / 1 simultaneously and renumber the rest."""
        zero, one = set(zero), set(one)
        keep = [v for v in range(self.dim) if v not in zero and v not in one]
        new = {v: i for i, v in enumerate(keep)}
        out: dict = {}
        for m, c in self.exponent:
            if any(v in zero for v in m):
                continue
            add_term(out, tuple(new[v] for v in m if v not in one), c)
        return CircleCube(len(keep), _normalize(out))

    def __str__(self) -> str:
        if not self.exponent:
            return "pt" if self.dim == 0 else f"const[{self.dim}]"
        parts = []
        for m, c in sorted(self.exponent, key=lambda mc: (len(mc[0]), mc[0])):
            mono = "*".join(f"t{v}" for v in m)
            parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)


BASEPOINT = CircleCube(0, frozenset())


def cube(dim: int, *monomials: Iterable[int]) -> CircleCube:
    """Shorthand: ``cube(3, (0, 1), (0, 2))`` is ``t0*t1 + t0*t2``."""
    terms: dict = {}
    for m in monomials:
        add_term(terms, tuple(m), 1)
    return CircleCube.from_terms(dim, terms)


# chains are {CircleCube: coeff} with no degenerate keys


def chain(*cubes: CircleCube) -> dict:
    out: dict = {}
    for T in cubes:
        if not T.is_degenerate:
            add_term(out, T, 1)
    return out


def _clean(c: Mapping) -> dict:
    return {T: k for T, k in c.items() if k and not T.is_degenerate}


def chain_degree(c: Mapping) -> int | None:
    dims = {T.dim for T in c}
    if len(dims) > 1:
        raise ValueError(f"chain mixes dimensions {sorted(dims)}")
    return dims.pop() if dims else None


def sigma(T: CircleCube) -> CircleCube | None:
    """``t_0 * f(t_1, ..., t_n)``; ``None`` (zero) on a degenerate input.

    ``sigma`` depends on the lift ``f``, not only on the cube: ``f`` and
    ``f + 1`` give the same cube but ``t_0 f`` and ``t_0 f + t_0`` do not.
    With the normalized lift (no constant term) the identity
    ``d sigma(T) = T - sigma(dT)`` holds whenever no face ``t_i = 1`` of ``T``
    creates a constant, i.e. when ``f`` has no degree-one monomial.  Every
    cube of dimension ``>= 2`` in the family ``T_n`` has that form; products
    such as ``T_0 T_1`` do not.
    """
    if T.is_degenerate:
        return None
    terms = {(0,) + tuple(v + 1 for v in m): c for m, c in T.exponent}
    return CircleCube.from_terms(T.dim + 1, terms)


def sigma_chain(c: Mapping) -> dict:
    out: dict = {}
    for T, k in c.items():
        S = sigma(T)
        if S is not None and not S.is_degenerate:
            add_term(out, S, k)
    return out


def has_linear_terms(T: CircleCube) -> bool:
    return any(len(m) == 1 for m, _ in T.exponent)


def cube_boundary(T: CircleCube) -> dict:
    """``sum_i (-1)^(i+1) (A_i - B_i)`` with ``A_i: t_i = 0`` and ``B_i: t_i = 1``.

    The index ``i`` is 0-based, so the first coordinate contributes ``B - A``.
    This is the convention under which ``d sigma = Id - sigma d`` in
    dimensions ``>= 2``.
    """
    out: dict = {}
    if T.is_degenerate:
        return out
    for i in range(T.dim):
        s = -sign_power(i)
        front, back = T.substitute(i, 0), T.substitute(i, 1)
        if not front.is_degenerate:
            add_term(out, front, s)
        if not back.is_degenerate:
            add_term(out, back, -s)
    return out


def boundary(c: Mapping) -> dict:
    out: dict = {}
    for T, k in c.items():
        add_into(out, cube_boundary(T), k)
    return out


def cube_times(S: CircleCube, T: CircleCube) -> CircleCube:
    terms = dict(S.exponent)
    for m, c in T.exponent:
        add_term(terms, tuple(v + S.dim for v in m), c)
    return CircleCube.from_terms(S.dim + T.dim, terms)


def cube_product(c1: Mapping, c2: Mapping) -> dict:
    """Pointwise product in the group ``S^1``: exponents add on disjoint variables."""
    out: dict = {}
    for S, a in c1.items():
        for T, b in c2.items():
            P = cube_times(S, T)
            if not P.is_degenerate:
                add_term(out, P, a * b)
    return out


def serre_diagonal(T: CircleCube, *, reduced: bool = False) -> dict:
    """``sum over A + B = {0..n-1}`` of ``sign * T|_(B=0) (x) T|_(A=1)``.

    The sign is that of the shuffle putting the ``A`` coordinates before the
    ``B`` coordinates (all of degree one).  Degenerate factors are dropped;
    ``reduced`` also drops the two terms with a 0-cube factor.
    """
    out: dict = {}
    if T.is_degenerate:
        return out
    n = T.dim
    ones = [1] * n
    for r in range(n + 1):
        if reduced and r in (0, n):
            continue
        for A in combinations(range(n), r):
            B = [v for v in range(n) if v not in A]
            front = T.restrict(zero=B)
            back = T.restrict(one=A)
            if front.is_degenerate or back.is_degenerate:
                continue
            add_term(out, (front, back), koszul_sign(ones, list(A) + B))
    return out


def diagonal(c: Mapping, *, reduced: bool = False) -> dict:
    out: dict = {}
    for T, k in c.items():
        add_into(out, serre_diagonal(T, reduced=reduced), k)
    return out


T_FAMILY_BOUND = 5


def build_T_family(n_max: int, *, bound: int = T_FAMILY_BOUND) -> list[dict]:
    """``T_0 = t_0`` and ``T_n = sigma(sum_{i=1}^n T_{i-1} T_{n-i})``."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if n_max > bound:
        raise ValueError(f"n_max = {n_max} exceeds the configured bound {bound}; the cube count grows like the Catalan numbers")
    family = [chain(cube(1, (0,)))]
    for n in range(1, n_max + 1):
        inner: dict = {}
        for i in range(1, n + 1):
            add_into(inner, cube_product(family[i - 1], family[n - i]))
        family.append(sigma_chain(inner))
    return family


__all__ = [
    "BASEPOINT",
    "CircleCube",
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
    "serre_diagonal",
    "has_linear_terms",
    "sigma",
    "sigma_chain",
]
