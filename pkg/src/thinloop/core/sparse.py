"""Sparse matrices with arbitrary-precision integer entries."""

from __future__ import annotations

from collections import defaultdict
from types import MappingProxyType
from typing import Iterable, Mapping


class SparseIntMatrix:
    """An immutable ``rows x cols`` integer matrix stored as ``{(i, j): value}``.

    Zero entries are never stored.  Matrices act on column vectors, so the
    matrix of a map ``C^n -> C^{n+1}`` has ``dim C^{n+1}`` rows.
    """

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Mapping[tuple[int, int], int] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError(f"negative shape ({rows}, {cols})")
        clean: dict[tuple[int, int], int] = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise IndexError(f"entry ({i}, {j}) outside {rows}x{cols} matrix")
            v = int(v)
            if v:
                clean[(i, j)] = v
        self.rows = rows
        self.cols = cols
        self._entries = MappingProxyType(clean)

    @property
    def entries(self) -> Mapping[tuple[int, int], int]:
        return self._entries

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "SparseIntMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "SparseIntMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def from_dense(cls, rows: Iterable[Iterable[int]]) -> "SparseIntMatrix":
        data = [list(r) for r in rows]
        ncols = len(data[0]) if data else 0
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged dense matrix")
        return cls(len(data), ncols, {(i, j): v for i, r in enumerate(data) for j, v in enumerate(r) if v})

    @classmethod
    def from_columns(cls, rows: int, columns: Iterable[Mapping[int, int]]) -> "SparseIntMatrix":
        """Build from per-column ``{row: value}`` maps."""
        entries = {}
        ncols = 0
        for j, col in enumerate(columns):
            ncols = j + 1
            for i, v in col.items():
                if v:
                    entries[(i, j)] = v
        return cls(rows, ncols, entries)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self._entries.items():
            out[i][j] = v
        return out

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def nnz(self) -> int:
        return len(self._entries)

    def is_zero(self) -> bool:
        return not self._entries

    def row_dicts(self) -> list[dict[int, int]]:
        rows: list[dict[int, int]] = [dict() for _ in range(self.rows)]
        for (i, j), v in self._entries.items():
            rows[i][j] = v
        return rows

    def column(self, j: int) -> dict[int, int]:
        return {i: v for (i, jj), v in self._entries.items() if jj == j}

    def transpose(self) -> "SparseIntMatrix":
        return SparseIntMatrix(self.cols, self.rows, {(j, i): v for (i, j), v in self._entries.items()})

    def __matmul__(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        by_row = defaultdict(list)
        for (k, j), v in other._entries.items():
            by_row[k].append((j, v))
        acc: dict[tuple[int, int], int] = defaultdict(int)
        for (i, k), a in self._entries.items():
            for j, b in by_row.get(k, ()):
                acc[(i, j)] += a * b
        return SparseIntMatrix(self.rows, other.cols, acc)

    def __add__(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        acc = dict(self._entries)
        for key, v in other._entries.items():
            acc[key] = acc.get(key, 0) + v
        return SparseIntMatrix(self.rows, self.cols, acc)

    def __neg__(self) -> "SparseIntMatrix":
        return SparseIntMatrix(self.rows, self.cols, {k: -v for k, v in self._entries.items()})

    def __sub__(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        return self + (-other)

    def scale(self, c: int) -> "SparseIntMatrix":
        return SparseIntMatrix(self.rows, self.cols, {k: c * v for k, v in self._entries.items()})

    def mod(self, p: int) -> "SparseIntMatrix":
        return SparseIntMatrix(self.rows, self.cols, {k: v % p for k, v in self._entries.items()})

    def permuted(self, row_perm: list[int] | None = None, col_perm: list[int] | None = None) -> "SparseIntMatrix":
        """Return the matrix with row ``i`` moved to ``row_perm[i]`` (same for columns)."""
        rp = row_perm or list(range(self.rows))
        cp = col_perm or list(range(self.cols))
        return SparseIntMatrix(self.rows, self.cols, {(rp[i], cp[j]): v for (i, j), v in self._entries.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseIntMatrix):
            return NotImplemented
        return self.shape == other.shape and dict(self._entries) == dict(other._entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, frozenset(self._entries.items())))

    def __repr__(self) -> str:
        return f"SparseIntMatrix({self.rows}, {self.cols}, nnz={self.nnz})"
