"""Maps induced on rational cohomology by cochain maps."""

from __future__ import annotations

from fractions import Fraction

from .complex import TruncatedComplex
from .sparse import SparseIntMatrix


def _solve_basis(vectors: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Row-reduce ``vectors``; return the reduced rows and the indices kept."""
    reduced: list[list[Fraction]] = []
    pivots: list[int] = []
    kept: list[int] = []
    for idx, v in enumerate(vectors):
        v = list(v)
        for row, pc in zip(reduced, pivots):
            if v[pc]:
                f = v[pc]
                v = [a - f * b for a, b in zip(v, row)]
        pc = next((k for k, a in enumerate(v) if a), None)
        if pc is None:
            continue
        inv = 1 / v[pc]
        v = [a * inv for a in v]
        for r in range(len(reduced)):
            if reduced[r][pc]:
                f = reduced[r][pc]
                reduced[r] = [a - f * b for a, b in zip(reduced[r], v)]
        reduced.append(v)
        pivots.append(pc)
        kept.append(idx)
    return reduced, kept


def _nullspace(M: SparseIntMatrix) -> list[list[Fraction]]:
    rows = [[Fraction(x) for x in r] for r in M.to_dense()]
    ncols = M.cols
    reduced, _ = _solve_basis(rows)
    pivots = [next(k for k, a in enumerate(r) if a) for r in reduced]
    free = [k for k in range(ncols) if k not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, pc in zip(reduced, pivots):
            v[pc] = -r[f]
        basis.append(v)
    return basis


def _apply(M: SparseIntMatrix, v: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * M.rows
    for (i, j), a in M.entries.items():
        if v[j]:
            out[i] += a * v[j]
    return out


def cohomology_basis(C: TruncatedComplex, n: int) -> list[list[Fraction]]:
    """Cocycles whose classes form a basis of ``H^n(C; Q)``."""
    C._check_degree(n)
    boundaries = [list(col) for col in zip(*[[Fraction(x) for x in r] for r in C._incoming(n).to_dense()])] if n else []
    b_reduced, _ = _solve_basis(boundaries)
    cycles = _nullspace(C.differentials[n])
    _, kept = _solve_basis(b_reduced + cycles)
    return [cycles[i - len(b_reduced)] for i in kept if i >= len(b_reduced)]


def induced_matrix(
    source: TruncatedComplex, target: TruncatedComplex, f: SparseIntMatrix, n: int
) -> list[list[Fraction]]:
    """Matrix of ``H^n(f; Q)`` in the bases returned by :func:`cohomology_basis`.

    Column ``j`` holds the coordinates of ``f(z_j)`` modulo coboundaries.
    """
    if f.shape != (target.dim(n), source.dim(n)):
        raise ValueError(f"f has shape {f.shape}, expected {(target.dim(n), source.dim(n))}")
    src = cohomology_basis(source, n)
    tgt = cohomology_basis(target, n)
    boundaries = [list(col) for col in zip(*[[Fraction(x) for x in r] for r in target._incoming(n).to_dense()])] if n else []
    b_reduced, _ = _solve_basis(boundaries)
    k = len(tgt)
    columns = []
    for z in src:
        w = _apply(f, z)
        # solve w = sum c_i t_i + b  by reducing the augmented system
        system = b_reduced + tgt
        coeffs = _express(system, w)
        columns.append(coeffs[len(b_reduced):])
    return [[columns[j][i] for j in range(len(src))] for i in range(k)]


def _express(basis: list[list[Fraction]], w: list[Fraction]) -> list[Fraction]:
    """Coordinates of ``w`` in the linearly independent list ``basis``."""
    m = len(basis)
    dim = len(w)
    # columns = basis vectors; solve A c = w
    aug = [[basis[j][i] for j in range(m)] + [w[i]] for i in range(dim)]
    reduced, _ = _solve_basis(aug)
    coeffs = [Fraction(0)] * m
    for row in reduced:
        pc = next(k for k, a in enumerate(row) if a)
        if pc == m:
            raise ValueError("image is not a cocycle in the span of the chosen basis")
        coeffs[pc] = row[m]
    return coeffs
