"""The thin free loop model ``A (x)~ BA``: Hochschild differential, S, power map.

A basis element is a pair ``(y, word)`` with ``y`` a basis label of ``A``
(possibly the unit) and ``word`` a bar word.  Its degree is
``|y| + bar_degree(word)``.
"""

from __future__ import annotations

from typing import Mapping

from ..dga.algebra import PresentedAlgebra
from ..dga.bar import bar_degree, bar_differential, deconcatenate, shuffle_product, words_of_bar_degree
from ..dga.lincomb import add_into, add_term
from ..dga.signs import block_swap_sign, sign_power

FlsBasisElement = tuple  # (y, word)


def fls_degree(e: FlsBasisElement, A: PresentedAlgebra) -> int:
    y, word = e
    return A.degree(y) + bar_degree(word, A)


def fls_basis(A: PresentedAlgebra, n: int) -> tuple[FlsBasisElement, ...]:
    """Basis of degree ``n``: coefficient labels in presentation order, then words."""
    out = []
    for y, dy in A.generators:
        if dy <= n:
            out.extend((y, w) for w in words_of_bar_degree(A, n - dy))
    return tuple(out)


def hochschild_differential(e: FlsBasisElement, A: PresentedAlgebra) -> dict:
    """``dy(x)c + (-1)^y y(x)d_B c + (-1)^y [yx_1 (x) sx_2|... - (-1)^N yx_n (x) sx_1|...]``

    with ``N = (1 + |x_n|)(n - 1 + sum_{j<n} |x_j|)``.
    """
    y, word = e
    word = tuple(word)
    out: dict = {}
    for z, c in A.d(y).items():
        add_term(out, (z, word), c)
    sy = sign_power(A.degree(y))
    for w, c in bar_differential(word, A).items():
        add_term(out, (y, w), sy * c)
    n = len(word)
    if n:
        for z, c in A.mul(y, word[0]).items():
            add_term(out, (z, word[1:]), sy * c)
        big_n = (1 + A.degree(word[-1])) * (n - 1 + sum(A.degree(x) for x in word[:-1]))
        for z, c in A.mul(y, word[-1]).items():
            add_term(out, (z, word[:-1]), -sy * sign_power(big_n) * c)
    return out


def cyclic_S(e: FlsBasisElement, A: PresentedAlgebra) -> dict:
    """The rotation operator.

    ``S(y (x) 1) = 1 (x) sy``, ``S(1 (x) c) = 0``, and otherwise the sum of all
    cyclic rotations of ``sy|sx_1|...|sx_n``, each signed by moving the
    trailing block to the front.
    """
    y, word = e
    unit = A.unit
    if y == unit:
        return {}
    letters = (y,) + tuple(word)
    bdeg = [A.degree(x) - 1 for x in letters]
    total = sum(bdeg)
    out: dict = {}
    head = 0
    for j in range(len(letters)):
        # rotation starting at position j: block letters[j:] moves in front of letters[:j]
        sgn = block_swap_sign(head, total - head)
        add_term(out, (unit, letters[j:] + letters[:j]), sgn)
        head += bdeg[j]
    return out


def power_map(e: FlsBasisElement, A: PresentedAlgebra) -> dict:
    """``y (x) sum over splittings of prefix * suffix`` (shuffle product)."""
    y, word = e
    out: dict = {}
    for u, v in deconcatenate(word):
        for w, c in shuffle_product(u, v, A).items():
            add_term(out, (y, w), c)
    return out


def left_multiply(y: str, elem: Mapping[FlsBasisElement, int], A: PresentedAlgebra) -> dict:
    """Untwisted left action ``y . (x (x) c) = yx (x) c``."""
    out: dict = {}
    for (x, w), c in elem.items():
        for z, e in A.mul(y, x).items():
            add_term(out, (z, w), c * e)
    return out


def apply_linear(f, elem: Mapping, A: PresentedAlgebra) -> dict:
    out: dict = {}
    for e, c in elem.items():
        add_into(out, f(e, A), c)
    return out


__all__ = [
    "FlsBasisElement",
    "apply_linear",
    "cyclic_S",
    "fls_basis",
    "fls_degree",
    "hochschild_differential",
    "left_multiply",
    "power_map",
]
