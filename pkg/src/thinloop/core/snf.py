"""Smith normal form and exact ranks over the integers and prime fields."""

from __future__ import annotations

from math import gcd

from .sparse import SparseIntMatrix


def _invariant_chain(diagonal: list[int]) -> list[int]:
    """Turn the nonzero diagonal of a diagonalized matrix into invariant factors.

    ``diag(a, b)`` is equivalent to ``diag(gcd, lcm)``; sweeping this over all
    pairs yields the divisibility chain.
    """
    ones = [d for d in diagonal if d == 1]
    rest = sorted(d for d in diagonal if d != 1)
    for i in range(len(rest)):
        for j in range(i + 1, len(rest)):
            a, b = rest[i], rest[j]
            if b % a:
                g = gcd(a, b)
                rest[i], rest[j] = g, a // g * b
    return ones + rest


def diagonalize(M: SparseIntMatrix) -> list[int]:
    """Return the absolute values of a diagonal form of ``M`` (no divisibility).

    Pivots are chosen as entries of smallest absolute value; row and column
    operations are integral and unimodular.
    """
    rows: dict[int, dict[int, int]] = {}
    col_rows: dict[int, set[int]] = {}
    for (i, j), v in M.entries.items():
        rows.setdefault(i, {})[j] = v
        col_rows.setdefault(j, set()).add(i)

    def set_entry(i: int, j: int, v: int) -> None:
        r = rows[i]
        if v:
            r[j] = v
            col_rows.setdefault(j, set()).add(i)
        else:
            r.pop(j, None)
            s = col_rows.get(j)
            if s is not None:
                s.discard(i)
                if not s:
                    del col_rows[j]

    def smallest() -> tuple[int, int, int]:
        best = None
        for i, r in rows.items():
            for j, v in r.items():
                a = abs(v)
                if best is None or a < best[0]:
                    best = (a, i, j)
                    if a == 1:
                        return best
        assert best is not None
        return best

    diag: list[int] = []
    while rows:
        _, r, c = smallest()
        while True:
            p = rows[r][c]
            # clear column c with row operations
            new_pivot = None
            for i in list(col_rows.get(c, ())):
                if i == r:
                    continue
                q = rows[i][c] // p
                if q:
                    for j, v in rows[r].items():
                        set_entry(i, j, rows[i].get(j, 0) - q * v)
                rem = rows[i].get(c, 0)
                if rem and (new_pivot is None or abs(rem) < abs(rows[new_pivot[0]][new_pivot[1]])):
                    new_pivot = (i, c)
            if new_pivot is not None:
                r, c = new_pivot
                continue
            # column c now holds only the pivot; clear row r with column operations
            for j in list(rows[r]):
                if j == c:
                    continue
                q = rows[r][j] // p
                set_entry(r, j, rows[r][j] - q * p)
                rem = rows[r].get(j, 0)
                if rem and (new_pivot is None or abs(rem) < abs(rows[r][new_pivot[1]])):
                    new_pivot = (r, j)
            if new_pivot is not None:
                r, c = new_pivot
                continue
            break
        diag.append(abs(rows[r][c]))
        set_entry(r, c, 0)
        del rows[r]
        for i in [i for i, row in rows.items() if not row]:
            del rows[i]
    return diag


def smith_normal_form(M: SparseIntMatrix) -> tuple[list[int], int]:
    """Invariant factors ``d_1 | d_2 | ... | d_r`` of ``M`` and its rank ``r``."""
    factors = _invariant_chain(diagonalize(M))
    return factors, len(factors)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    k = 3
    while k * k <= p:
        if p % k == 0:
            return False
        k += 2
    return True


def rank_mod_p(M: SparseIntMatrix, p: int) -> int:
    """Rank of ``M`` over the prime field with ``p`` elements."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    pending: dict[int, dict[int, int]] = {}
    for (i, j), v in M.entries.items():
        v %= p
        if v:
            pending.setdefault(i, {})[j] = v
    pivots: dict[int, dict[int, int]] = {}  # pivot column -> normalized row
    rank = 0
    for row in pending.values():
        row = dict(row)
        while row:
            c = min(row)
            if c not in pivots:
                inv = pow(row[c], -1, p)
                pivots[c] = {j: v * inv % p for j, v in row.items()}
                rank += 1
                break
            f = row[c]
            for j, v in pivots[c].items():
                nv = (row.get(j, 0) - f * v) % p
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
    return rank
