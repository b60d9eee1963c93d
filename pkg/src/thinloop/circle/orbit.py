"""The abstract homotopy-orbit complex ``Lambda upsilon (x) A`` with ``omega`` operators.

A spec is a truncated cochain complex ``(A, d#)`` plus maps ``omega_k`` of
degree ``-(2k+1)``.  The total differential is

    D#(u^n (x) f) = u^n (x) d#f + sum_k u^(n+k+1) (x) omega_k(f),

with ``|u| = 2``.  Collecting powers of ``u`` in ``D#^2`` gives, at
``u^(n+M+1)``, the operator ``d#omega_M + omega_M d# + sum_{j+k=M-1}
omega_j omega_k``; an ``OmegaComplexSpec`` is valid when these vanish for every ``M`` (up
to ``2K + 1``, where the quadratic part can still be nonzero) and
``d#^2 = 0``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Hashable, Mapping, Sequence

from ..core.complex import TruncatedComplex, complex_from_maps
from ..dga.lincomb import add_into, add_term

LinearMap = Mapping[Hashable, Mapping[Hashable, int]]


class OmegaRelationError(ValueError):
    """A relation fails; ``k`` is the power index (``None`` for ``d#^2``)."""

    def __init__(self, k: int | None, label: Hashable, defect: Mapping):
        self.k, self.label, self.defect = k, label, dict(defect)
        what = "d#^2" if k is None else f"omega relation k={k}"
        super().__init__(f"{what} fails on basis element {label!r}: {self.defect}")


def _apply(f: LinearMap, elem: Mapping) -> dict:
    out: dict = {}
    for x, c in elem.items():
        add_into(out, f.get(x, {}), c)
    return out


@dataclass(frozen=True)
class OmegaComplexSpec:
    """``basis[m]`` lists the labels of ``A^m`` for ``0 <= m <= top``."""

    basis: Mapping[int, Sequence[Hashable]]
    d: LinearMap
    omegas: Sequence[LinearMap] = ()
    name: str = ""
    _deg: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        deg: dict = {}
        for m, labels in self.basis.items():
            if m < 0:
                raise ValueError(f"negative cochain degree {m}")
            for x in labels:
                if x in deg:
                    raise ValueError(f"label {x!r} appears in degrees {deg[x]} and {m}")
                deg[x] = m
        object.__setattr__(self, "_deg", deg)
        self._check_degrees(self.d, 1, "d#")
        for k, w in enumerate(self.omegas):
            self._check_degrees(w, -(2 * k + 1), f"omega_{k}")
        self.validate()

    @property
    def top(self) -> int:
        return max(self.basis, default=-1)

    @property
    def K(self) -> int:
        return len(self.omegas) - 1

    def degree(self, x: Hashable) -> int:
        return self._deg[x]

    def _check_degrees(self, f: LinearMap, shift: int, what: str) -> None:
        for x, img in f.items():
            if x not in self._deg:
                raise ValueError(f"{what} is defined on unknown label {x!r}")
            for y, c in img.items():
                if y not in self._deg:
                    raise ValueError(f"{what}({x!r}) hits unknown label {y!r}")
                if c and self._deg[y] != self._deg[x] + shift:
                    raise ValueError(f"{what}({x!r}) has a term {y!r} of degree {self._deg[y]}, expected {self._deg[x] + shift}")

    def omega(self, k: int, elem: Mapping) -> dict:
        if k > self.K:
            return {}
        return _apply(self.omegas[k], elem)

    def dsharp(self, elem: Mapping) -> dict:
        return _apply(self.d, elem)

    def relation_defect(self, M: int, x: Hashable) -> dict:
        """``(d#omega_M + omega_M d# + sum_{j+k=M-1} omega_j omega_k)(x)``."""
        f = {x: 1}
        out = self.dsharp(self.omega(M, f))
        add_into(out, self.omega(M, self.dsharp(f)))
        for j in range(M):
            add_into(out, self.omega(j, self.omega(M - 1 - j, f)))
        return out

    def validate(self) -> None:
        for x in self._deg:
            dd = self.dsharp(self.dsharp({x: 1}))
            if dd:
                raise OmegaRelationError(None, x, dd)
        for M in range(2 * self.K + 2):
            for x in self._deg:
                defect = self.relation_defect(M, x)
                if defect:
                    raise OmegaRelationError(M, x, defect)


def omega_bound(m: int) -> int:
    """Upper summation index ``ceil((m-1)/2)`` for a cochain of degree ``m``."""
    return math.ceil((m - 1) / 2)


def orbit_degree(e: tuple, spec: OmegaComplexSpec) -> int:
    n, x = e
    return 2 * n + spec.degree(x)


def orbit_differential(spec: OmegaComplexSpec, e: tuple, max_degree: int | None = None) -> dict:
    """``D#`` on the basis element ``e = (n, f)`` standing for ``u^n (x) f``.

    Terms of total degree above ``max_degree`` are dropped.  The index bound
    ``ceil((m-1)/2)`` never cuts a nonzero term: ``omega_k f`` would have
    negative degree beyond it.
    """
    n, x = e
    m = spec.degree(x)
    out: dict = {}
    for y, c in spec.dsharp({x: 1}).items():
        add_term(out, (n, y), c)
    for k in range(min(omega_bound(m), spec.K) + 1):
        for y, c in spec.omega(k, {x: 1}).items():
            add_term(out, (n + k + 1, y), c)
    if max_degree is not None:
        out = {key: c for key, c in out.items() if orbit_degree(key, spec) <= max_degree}
    return out


def orbit_basis(spec: OmegaComplexSpec, t: int) -> list[tuple]:
    return [(n, x) for n in range(t // 2 + 1) for x in spec.basis.get(t - 2 * n, ())]


def orbit_complex(spec: OmegaComplexSpec, max_degree: int) -> TruncatedComplex:
    basis = {t: orbit_basis(spec, t) for t in range(max_degree + 1)}
    C = complex_from_maps(max_degree, basis, lambda e: orbit_differential(spec, e), name=f"orbit({spec.name})")
    C.check_d_squared()
    return C


def orbit_square_components(spec: OmegaComplexSpec, x: Hashable) -> dict:
    """``D#^2(u^0 (x) x)`` grouped by power of ``u``: ``{power: element of A}``."""
    out: dict = {}
    for (n1, y), c in orbit_differential(spec, (0, x)).items():
        for (n2, z), c2 in orbit_differential(spec, (n1, y)).items():
            add_term(out.setdefault(n2, {}), z, c * c2)
    return {p: v for p, v in out.items() if v}


# -- examples -------------------------------------------------------------


def single_omega0_example() -> OmegaComplexSpec:
    """Ranks one in degrees 0..3, ``d#: a0 -> b1, c2 -> e3`` and ``omega_0: c2 -> b1``.

    ``omega_0`` anticommutes with ``d#`` and squares to zero, which is all
    that is needed when it is the only operator.
    """
    basis = {0: ["a0"], 1: ["b1"], 2: ["c2"], 3: ["e3"]}
    d = {"a0": {"b1": 1}, "c2": {"e3": 1}}
    return OmegaComplexSpec(basis, d, [{"c2": {"b1": 1}}], name="single-omega0")


def _random_unimodular(rng: random.Random, n: int, steps: int = 6) -> tuple[list[list[int]], list[list[int]]]:
    """A unimodular matrix and its inverse, built from elementary moves."""
    M = [[int(i == j) for j in range(n)] for i in range(n)]
    Minv = [row[:] for row in M]
    for _ in range(steps if n > 1 else 0):
        i, j = rng.sample(range(n), 2)
        c = rng.choice([-2, -1, 1, 2])
        # M <- M E with E = I + c e_ij; Minv <- E^-1 Minv
        for r in range(n):
            M[r][j] += c * M[r][i]
        for col in range(n):
            Minv[i][col] -= c * Minv[j][col]
    return M, Minv


def random_omega_spec(seed: int, *, top: int = 6, K: int = 2, max_rank: int = 3) -> OmegaComplexSpec:
    """A valid spec obtained by conjugating ``Id (x) d`` by ``Phi = sum u^k phi_k``.

    ``d`` is a sum of elementary pieces ``e -> c e'`` conjugated by random
    unimodular matrices, so ``d^2 = 0``; ``phi_0 = Id`` and ``phi_k`` (degree
    ``-2k``, ``k <= K``) are random.  Because ``Phi`` is ``u``-linear and invertible, the
    conjugate differential is again of the form ``u^n (x) d# + sum u^(n+k+1)
    (x) omega_k`` and squares to zero, so every relation holds.
    """
    rng = random.Random(seed)
    ranks = [rng.randint(1, max_rank) for _ in range(top + 1)]
    basis = {m: [f"e{m}_{i}" for i in range(ranks[m])] for m in range(top + 1)}
    # standard form: pair off basis vectors across adjacent degrees
    d0: dict = {}
    used_src: set = set()
    used_tgt: set = set()
    for m in range(top):
        for i in range(ranks[m]):
            if rng.random() < 0.5:
                continue
            free = [j for j in range(ranks[m + 1]) if (m + 1, j) not in used_tgt]
            if (m, i) in used_tgt or not free:
                continue
            j = rng.choice(free)
            used_src.add((m, i))
            used_tgt.add((m + 1, j))
            d0[basis[m][i]] = {basis[m + 1][j]: rng.choice([1, 2, 3])}
    # conjugate by P = block-diagonal unimodular: d = P d0 P^-1
    P: dict = {}
    Pinv: dict = {}
    for m in range(top + 1):
        M, Minv = _random_unimodular(rng, ranks[m])
        for j, x in enumerate(basis[m]):
            P[x] = {basis[m][i]: M[i][j] for i in range(ranks[m]) if M[i][j]}
            Pinv[x] = {basis[m][i]: Minv[i][j] for i in range(ranks[m]) if Minv[i][j]}
    d = {x: _apply(P, _apply(d0, _apply(Pinv, {x: 1}))) for x in P}

    def rand_map(shift: int) -> dict:
        f: dict = {}
        for m in range(top + 1):
            if not 0 <= m + shift <= top:
                continue
            for x in basis[m]:
                img = {y: rng.randint(-2, 2) for y in basis[m + shift]}
                f[x] = {y: c for y, c in img.items() if c}
        return f

    # psi_k has degree -2k, so it vanishes once 2k > top; the same bounds D'
    J = top // 2 + 1
    phis = [{x: {x: 1} for x in P}] + [rand_map(-2 * k) for k in range(1, K + 1)]
    phis += [{}] * (J + 1 - len(phis))
    # psi = Phi^-1: psi_0 = Id, psi_k = -sum_{i=1}^k phi_i psi_(k-i)
    psi = [phis[0]]
    for k in range(1, J + 1):
        acc: dict = {}
        for x in P:
            img: dict = {}
            for i in range(1, k + 1):
                add_into(img, _apply(phis[i], _apply(psi[k - i], {x: 1})), -1)
            acc[x] = img
        psi.append(acc)

    # D' = Phi (Id (x) d) Psi; the u^j component is sum_{a+b=j} phi_a d psi_b
    def component(j: int) -> dict:
        out: dict = {}
        for x in P:
            img: dict = {}
            for a in range(j + 1):
                add_into(img, _apply(phis[a], _apply(d, _apply(psi[j - a], {x: 1}))))
            if img:
                out[x] = img
        return out

    dsharp = component(0)
    omegas = [component(k + 1) for k in range(J)]
    while omegas and not omegas[-1]:
        omegas.pop()
    return OmegaComplexSpec(basis, dsharp, omegas, name=f"random-{seed}")


__all__ = [
    "OmegaComplexSpec",
    "OmegaRelationError",
    "omega_bound",
    "orbit_basis",
    "orbit_complex",
    "orbit_degree",
    "orbit_differential",
    "orbit_square_components",
    "random_omega_spec",
    "single_omega0_example",
]
