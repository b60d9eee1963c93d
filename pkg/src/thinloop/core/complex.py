"""Truncated cochain complexes and their cohomology."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Mapping, Sequence

from .snf import is_prime, rank_mod_p, smith_normal_form
from .sparse import SparseIntMatrix


class DegreeOutOfRange(ValueError):
    """Requested a degree the truncation cannot answer truthfully."""


class DifferentialSquareError(RuntimeError):
    """``d o d != 0`` somewhere in a constructed complex."""

    def __init__(self, degree: int, label: Hashable, image: Mapping[Hashable, int] | None = None):
        self.degree = degree
        self.label = label
        self.image = dict(image or {})
        super().__init__(f"d^2 != 0 on basis element {label!r} in degree {degree}: {self.image}")


@dataclass(frozen=True)
class BasisIndex:
    degree: int
    ordinal: int
    label: Hashable


@dataclass(frozen=True)
class HomologyGroup:
    """``Z^free_rank + sum Z/d_i`` with ``d_1 | d_2 | ...`` (over a field: torsion is empty)."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"torsion factor {d} < 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {self.torsion} violates divisibility")

    @property
    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class TruncatedComplex:
    """A cochain complex known exactly on degrees ``0..max_degree``.

    ``basis[n]`` lists the labels of degree ``n``; ``differentials[n]`` is the
    matrix of ``d: C^n -> C^{n+1}`` for ``0 <= n < max_degree``.  ``modulus``
    is 0 over the integers or a prime ``p`` for a complex over ``F_p``.
    """

    max_degree: int
    basis: Mapping[int, tuple[Hashable, ...]]
    differentials: Mapping[int, SparseIntMatrix]
    modulus: int = 0
    name: str = ""
    _index: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        N = self.max_degree
        if N < 0:
            raise ValueError("max_degree must be >= 0")
        basis = {n: tuple(self.basis.get(n, ())) for n in range(N + 1)}
        object.__setattr__(self, "basis", basis)
        for n, labels in basis.items():
            if len(set(labels)) != len(labels):
                raise ValueError(f"duplicate labels in degree {n}")
        diffs = {}
        for n in range(N):
            m = self.differentials.get(n)
            if m is None:
                m = SparseIntMatrix.zeros(len(basis[n + 1]), len(basis[n]))
            if m.shape != (len(basis[n + 1]), len(basis[n])):
                raise ValueError(f"d_{n} has shape {m.shape}, expected {(len(basis[n + 1]), len(basis[n]))}")
            diffs[n] = m
        object.__setattr__(self, "differentials", diffs)
        object.__setattr__(self, "_index", {n: {lab: i for i, lab in enumerate(labels)} for n, labels in basis.items()})

    def dim(self, n: int) -> int:
        return len(self.basis.get(n, ()))

    def index_of(self, n: int, label: Hashable) -> BasisIndex:
        return BasisIndex(n, self._index[n][label], label)

    def ordinal(self, n: int, label: Hashable) -> int:
        return self._index[n][label]

    def d_squared_defects(self) -> list[tuple[int, Hashable, dict]]:
        """Basis elements ``e`` (with degree) such that ``d(d(e)) != 0``."""
        bad = []
        for n in range(self.max_degree - 1):
            sq = self.differentials[n + 1] @ self.differentials[n]
            if self.modulus:
                sq = sq.mod(self.modulus)
            by_col: dict[int, dict] = {}
            for (i, j), v in sq.entries.items():
                by_col.setdefault(j, {})[self.basis[n + 2][i]] = v
            for j in sorted(by_col):
                bad.append((n, self.basis[n][j], by_col[j]))
        return bad

    def check_d_squared(self) -> None:
        defects = self.d_squared_defects()
        if defects:
            n, label, image = defects[0]
            raise DifferentialSquareError(n, label, image)

    def _check_degree(self, n: int) -> None:
        if not 0 <= n <= self.max_degree - 1:
            raise DegreeOutOfRange(
                f"H^{n} is not determined by a complex truncated at degree {self.max_degree}"
                f" (valid range 0..{self.max_degree - 1})"
            )

    def _incoming(self, n: int) -> SparseIntMatrix:
        if n == 0:
            return SparseIntMatrix.zeros(self.dim(0), 0)
        return self.differentials[n - 1]

    def homology(self, n: int) -> HomologyGroup:
        """``H^n``; over ``F_p`` the answer is a dimension (``free_rank``)."""
        self._check_degree(n)
        if self.modulus:
            p = self.modulus
            dim = self.dim(n) - rank_mod_p(self.differentials[n], p) - rank_mod_p(self._incoming(n), p)
            return HomologyGroup(dim)
        _, out_rank = smith_normal_form(self.differentials[n])
        factors, in_rank = smith_normal_form(self._incoming(n))
        return HomologyGroup(self.dim(n) - out_rank - in_rank, tuple(d for d in factors if d > 1))

    def homology_table(self) -> list[tuple[int, HomologyGroup]]:
        return [(n, self.homology(n)) for n in range(self.max_degree)]

    def permuted(self, perms: Mapping[int, Sequence[int]]) -> "TruncatedComplex":
        """Reorder bases: label at position ``i`` of degree ``n`` moves to ``perms[n][i]``."""
        basis = {}
        for n, labels in self.basis.items():
            p = perms.get(n, list(range(len(labels))))
            new = [None] * len(labels)
            for i, lab in enumerate(labels):
                new[p[i]] = lab
            basis[n] = tuple(new)
        diffs = {
            n: m.permuted(list(perms.get(n + 1, range(m.rows))), list(perms.get(n, range(m.cols))))
            for n, m in self.differentials.items()
        }
        return TruncatedComplex(self.max_degree, basis, diffs, self.modulus, self.name)


def homology(C: TruncatedComplex, n: int) -> HomologyGroup:
    return C.homology(n)


def reduce_mod_p(C: TruncatedComplex, p: int) -> TruncatedComplex:
    """Same bases, entries reduced modulo the prime ``p``."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if C.modulus and C.modulus != p:
        raise ValueError(f"complex is already over F_{C.modulus}")
    return TruncatedComplex(
        C.max_degree,
        C.basis,
        {n: m.mod(p) for n, m in C.differentials.items()},
        modulus=p,
        name=C.name,
    )


def mod_p_dimension_via_uct(C: TruncatedComplex, n: int, p: int) -> int:
    """``dim H^n(C (x) F_p)`` from integral data by universal coefficients.

    ``H^n(C; F_p) = H^n(C) (x) F_p  +  Tor(H^{n+1}(C), F_p)``; the torsion of
    ``H^{n+1}`` is read off the invariant factors of ``d_n`` directly.
    """
    if C.modulus:
        raise ValueError("expected an integral complex")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    h = C.homology(n)
    out_factors, _ = smith_normal_form(C.differentials[n])
    return h.free_rank + sum(1 for d in h.torsion if d % p == 0) + sum(1 for d in out_factors if d % p == 0)


def complex_from_maps(max_degree: int, basis: Mapping[int, Sequence[Hashable]], apply_d, *, name: str = "") -> TruncatedComplex:
    """Materialize a complex from a basis and a function ``label -> {label: coeff}``.

    Images landing outside the truncation (degree > max_degree) are ignored;
    images naming labels missing from the target basis are an error.
    """
    basis = {n: tuple(basis.get(n, ())) for n in range(max_degree + 1)}
    index = {n: {lab: i for i, lab in enumerate(labels)} for n, labels in basis.items()}
    diffs = {}
    for n in range(max_degree):
        tgt = index[n + 1]
        cols = []
        for lab in basis[n]:
            col = {}
            for img, c in apply_d(lab).items():
                if not c:
                    continue
                try:
                    i = tgt[img]
                except KeyError:
                    raise KeyError(f"d({lab!r}) contains {img!r}, not a basis element of degree {n + 1}") from None
                col[i] = col.get(i, 0) + c
            cols.append(col)
        diffs[n] = SparseIntMatrix.from_columns(len(basis[n + 1]), cols) if cols else SparseIntMatrix.zeros(len(basis[n + 1]), 0)
    return TruncatedComplex(max_degree, basis, diffs, name=name)
