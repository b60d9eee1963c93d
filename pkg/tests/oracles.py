"""Independent reference computations, written without the package's engines.

Each oracle recomputes an expected value from first principles (minors,
textbook formulas, enumeration of a closed-form answer) so that tests do not
compare the implementation with itself.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from math import gcd


# -- integer linear algebra ---------------------------------------------------


def det(rows: list[list[int]]) -> int:
    """Laplace expansion; fine for the small matrices used in tests."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j, a in enumerate(rows[0]):
        if a:
            minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
            total += (-1) ** j * a * det(minor)
    return total


def invariant_factors_by_minors(M: list[list[int]]) -> list[int]:
    """``d_k = D_k / D_(k-1)`` with ``D_k`` the gcd of all ``k x k`` minors."""
    if not M or not M[0]:
        return []
    r, c = len(M), len(M[0])
    D = [1]
    for k in range(1, min(r, c) + 1):
        g = 0
        for rows in combinations(range(r), k):
            for cols in combinations(range(c), k):
                g = gcd(g, det([[M[i][j] for j in cols] for i in rows]))
        if g == 0:
            break
        D.append(g)
    return [D[k] // D[k - 1] for k in range(1, len(D))]


def _prime_powers(n: int) -> list[tuple[int, int]]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, p**e))
        p += 1
    if n > 1:
        out.append((n, n))
    return out


def normalize_cyclic(orders: list[int]) -> tuple[int, ...]:
    """Invariant-factor form of ``sum Z/n_i`` via the elementary-divisor decomposition."""
    by_prime: dict[int, list[int]] = {}
    for n in orders:
        for p, q in _prime_powers(n):
            by_prime.setdefault(p, []).append(q)
    for qs in by_prime.values():
        qs.sort(reverse=True)
    length = max((len(qs) for qs in by_prime.values()), default=0)
    factors = []
    for i in range(length):
        f = 1
        for qs in by_prime.values():
            if i < len(qs):
                f *= qs[i]
        factors.append(f)
    return tuple(sorted(factors))


# -- closed-form answers for odd spheres ----------------------------------------


def fls_sphere_ranks(n: int, N: int) -> list[int]:
    """Monomials of ``Lambda z (x) Gamma sz`` by degree, ``|z| = n`` odd, ``|sz| = n - 1``."""
    ranks = [0] * N
    for e in (0, 1):
        m = 0
        while e * n + m * (n - 1) < N:
            ranks[e * n + m * (n - 1)] += 1
            m += 1
    return ranks


def hos_s3_table(N: int) -> list[tuple[int, tuple[int, ...]]]:
    """``Lambda u + Gamma sz + sum_{k,m>=1} Z/m (u^k sz(m))`` for ``S^3`` as ``(free, torsion)`` per degree.

    The unit is counted once (``u^0``); ``Z/1`` summands are trivial.
    """
    free = Counter()
    torsion: dict[int, list[int]] = {}
    for k in range(N):
        if 2 * k < N:
            free[2 * k] += 1  # u^k, including the unit
    for m in range(1, N):
        if 2 * m < N:
            free[2 * m] += 1  # sz(m)
    for k in range(1, N):
        for m in range(1, N):
            deg = 2 * k + 2 * m
            if deg < N and m > 1:
                torsion.setdefault(deg, []).append(m)
    return [(free[d], normalize_cyclic(torsion.get(d, []))) for d in range(N)]


def tc_s3_mod2_dims(N: int) -> list[int]:
    """Degreewise count of the closing mod-2 basis for ``TC(S^3; 2)`` plus the unit in degree 0.

    ``s(u^k sz(2m))`` (k >= 1, m >= 0), ``s(u^k z sz(2m+1))`` (k >= 1, m >= 0),
    ``s(u sz(2m+1))`` (m >= 0); ``s`` lowers degree by one, ``|u| = |sz| = 2``, ``|z| = 3``.
    """
    dims = [0] * N
    dims[0] += 1
    for k in range(1, N):
        for m in range(N):
            for deg in (2 * k + 4 * m - 1, 2 * k + 3 + 2 * (2 * m + 1) - 1):
                if 0 <= deg < N:
                    dims[deg] += 1
    for m in range(N):
        deg = 2 + 2 * (2 * m + 1) - 1
        if deg < N:
            dims[deg] += 1
    return dims


# -- Hochschild complex of Z[w]/w^h, textbook form --------------------------------


def poly_labels(height: int) -> list[str]:
    return ["1", "w"] + [f"w{k}" for k in range(2, height)]


def textbook_hochschild(a0: int, letters: tuple[int, ...], height: int) -> dict:
    """Normalized Hochschild ``b`` on ``w^a0 [w^a1 | ... | w^an]`` for ``Z[w]/w^height``.

    ``b = sum_{i<n} (-1)^i (... a_i a_(i+1) ...) + (-1)^n a_n a_0 [a_1|...|a_(n-1)]``;
    letters equal to 1 never occur (normalized complex) and zero products drop.
    Keys are exponent tuples ``(a0, (a1, ..., ))``.
    """
    out: dict = {}

    def add(key, c):
        out[key] = out.get(key, 0) + c
        if out[key] == 0:
            del out[key]

    seq = (a0,) + letters
    n = len(letters)
    for i in range(n):
        e = seq[i] + seq[i + 1]
        if e >= height:
            continue
        new = seq[:i] + (e,) + seq[i + 2 :]
        add((new[0], new[1:]), (-1) ** i)
    if n:
        e = seq[n] + seq[0]
        if e < height:
            add((e, seq[1:n]), (-1) ** n)
    return out
