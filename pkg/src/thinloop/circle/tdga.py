"""The abstract dg algebra on generators ``T^_n`` and the resolution ``Gamma v (x) <T>``.

Words are tuples of generator indices: ``(0, 2)`` is ``T^_0 T^_2``, of degree
``1 + 5``.  The algebra is free associative (the cubical product is not
graded commutative), with ``d T^_n = sum_{i=1}^n T^_{i-1} T^_{n-i}``.
"""

from __future__ import annotations

from itertools import product
from typing import Mapping

from ..dga.lincomb import add_into, add_term
from ..dga.signs import sign_power
from .cubes import BASEPOINT, chain, cube_product


def t_degree(word) -> int:
    return sum(2 * n + 1 for n in word)


def generator_differential(n: int) -> dict:
    if n < 0:
        raise ValueError("generator index must be >= 0")
    out: dict = {}
    for i in range(1, n + 1):
        add_term(out, (i - 1, n - i), 1)
    return out


def t_dga_differential(word) -> dict:
    """Derivation extension: ``d(xy) = dx.y + (-1)^|x| x.dy``."""
    word = tuple(word)
    out: dict = {}
    for i, n in enumerate(word):
        sgn = sign_power(t_degree(word[:i]))
        for w, c in generator_differential(n).items():
            add_term(out, word[:i] + w + word[i + 1 :], sgn * c)
    return out


def t_dga_differential_lc(elem: Mapping) -> dict:
    out: dict = {}
    for w, c in elem.items():
        add_into(out, t_dga_differential(w), c)
    return out


def words_up_to(max_index: int, max_length: int) -> list[tuple]:
    out = [()]
    for length in range(1, max_length + 1):
        out.extend(product(range(max_index + 1), repeat=length))
    return out


def realize(elem: Mapping, family: list[dict]) -> dict:
    """Send ``T^_n`` to the cubical chain ``T_n``; words go to cube products."""
    out: dict = {}
    for word, c in elem.items():
        acc = chain(BASEPOINT)
        for n in word:
            if n >= len(family):
                raise ValueError(f"T_{n} was not built; family has {len(family)} members")
            acc = cube_product(acc, family[n])
        add_into(out, acc, c)
    return out


# -- Gamma v (x) <T> ------------------------------------------------------


def resolution_differential(n: int, word) -> dict:
    """``d~(v(n) (x) a) = sum_{k<n} v(n-k-1) (x) T^_k a - v(n) (x) da``.

    Keys of the result are ``(m, word)`` for ``v(m) (x) word``.  The minus
    sign on the internal term is what makes ``d~`` square to zero given
    ``d T^_n = sum T^_{i-1} T^_{n-i}``; on ``v(n) (x) 1`` it is the quoted rule.
    """
    if n < 0:
        raise ValueError("filtration index must be >= 0")
    word = tuple(word)
    out: dict = {}
    for k in range(n):
        add_term(out, (n - k - 1, (k,) + word), 1)
    for w, c in t_dga_differential(word).items():
        add_term(out, (n, w), -c)
    return out


def resolution_differential_lc(elem: Mapping) -> dict:
    out: dict = {}
    for (n, w), c in elem.items():
        add_into(out, resolution_differential(n, w), c)
    return out


__all__ = [
    "generator_differential",
    "realize",
    "resolution_differential",
    "resolution_differential_lc",
    "t_degree",
    "t_dga_differential",
    "t_dga_differential_lc",
    "words_up_to",
]
