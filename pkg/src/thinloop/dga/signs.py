"""The one Koszul sign routine shared by every construction in the package.

All signs for shuffles, cyclic rotations, coderivation and derivation
extensions route through :func:`koszul_sign` so that a convention is fixed in
exactly one place.
"""

from __future__ import annotations

from typing import Sequence


def koszul_sign(degrees: Sequence[int], order: Sequence[int]) -> int:
    """Sign of rearranging graded items.

    ``degrees[i]`` is the degree of the item originally at position ``i``;
    ``order`` lists original positions in their new order.  Every pair of
    items that swaps relative position contributes ``(-1)^(|a| |b|)``.
    """
    if sorted(order) != list(range(len(degrees))):
        raise ValueError(f"{order!r} is not a permutation of {len(degrees)} items")
    parity = 0
    earlier_odd: list[int] = []
    for i in order:
        if degrees[i] & 1:
            # inversions among odd items only
            parity ^= sum(1 for j in earlier_odd if j > i) & 1
            earlier_odd.append(i)
    return -1 if parity else 1


def block_swap_sign(deg_a: int, deg_b: int) -> int:
    """Sign of moving a block of total degree ``deg_a`` past one of degree ``deg_b``."""
    return -1 if (deg_a & 1) and (deg_b & 1) else 1


def sign_power(k: int) -> int:
    """``(-1)^k``."""
    return -1 if k & 1 else 1
