"""The bar construction on the positive part of a presented algebra.

A bar word ``sx_1|...|sx_n`` is stored as the tuple of letter labels
``(x_1, ..., x_n)``; the empty tuple is the unit word ``1``.  A bar element
is a ``{word: coeff}`` dict.  Upper grading: ``|sx| = |x| - 1``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Mapping, Sequence

from .algebra import PresentedAlgebra
from .lincomb import add_into, add_term
from .signs import block_swap_sign, koszul_sign, sign_power

BarWord = tuple
BarElement = dict

EMPTY: BarWord = ()


def _letter_degrees(word: Sequence[str], A: PresentedAlgebra) -> list[int]:
    deg = A.degrees
    out = []
    for x in word:
        if x not in deg:
            raise KeyError(f"letter {x!r} is not a generator of {A.name or 'the algebra'}")
        if deg[x] <= 0:
            raise ValueError(f"letter {x!r} has degree {deg[x]}; bar letters must have positive degree")
        out.append(deg[x])
    return out


def bar_degree(word: Sequence[str], A: PresentedAlgebra) -> int:
    """``sum(|x_i| - 1)``."""
    return sum(d - 1 for d in _letter_degrees(word, A))


def bar_differential(word: Sequence[str], A: PresentedAlgebra) -> BarElement:
    """Coderivation extension of ``d(sa) = -s(da)`` and ``d(sa|sb) = (-1)^(|a|+1) s(ab)``.

    Each term picks up the Koszul sign ``(-1)^(bar degree of the letters it
    jumps over)``.
    """
    word = tuple(word)
    degs = _letter_degrees(word, A)
    out: BarElement = {}
    pre = 0
    for i, x in enumerate(word):
        sgn = sign_power(pre)
        for y, c in A.d(x).items():
            add_term(out, word[:i] + (y,) + word[i + 1 :], -sgn * c)
        if i + 1 < len(word):
            merge = sgn * sign_power(degs[i] + 1)
            for y, c in A.mul(x, word[i + 1]).items():
                add_term(out, word[:i] + (y,) + word[i + 2 :], merge * c)
        pre += degs[i] - 1
    return out


def bar_differential_lc(elem: Mapping[BarWord, int], A: PresentedAlgebra) -> BarElement:
    out: BarElement = {}
    for w, c in elem.items():
        add_into(out, bar_differential(w, A), c)
    return out


@lru_cache(maxsize=200_000)
def _shuffle_words(u: BarWord, v: BarWord, udeg: tuple[int, ...], vdeg: tuple[int, ...]) -> tuple:
    """Shuffles of ``u`` and ``v`` as ``((word, sign), ...)``.

    Recursion on the first letter: either ``u[0]`` leads, or ``v[0]`` leads
    after jumping over all of ``u``.
    """
    if not u or not v:
        return ((u + v, 1),)
    out: dict = {}
    for w, c in _shuffle_words(u[1:], v, udeg[1:], vdeg):
        add_term(out, (u[0],) + w, c)
    jump = block_swap_sign(vdeg[0], sum(udeg))
    for w, c in _shuffle_words(u, v[1:], udeg, vdeg[1:]):
        add_term(out, (v[0],) + w, jump * c)
    return tuple(out.items())


def shuffle_by_permutations(u: Sequence[str], v: Sequence[str], A: PresentedAlgebra) -> BarElement:
    """Reference shuffle: enumerate position sets and sign each permutation directly."""
    u, v = tuple(u), tuple(v)
    bdeg = tuple(d - 1 for d in _letter_degrees(u + v, A))
    p, q = len(u), len(v)
    letters = u + v
    out: BarElement = {}
    for upos in combinations(range(p + q), p):
        uset = set(upos)
        order = [0] * (p + q)
        ui, vi = 0, p
        for k in range(p + q):
            if k in uset:
                order[k] = ui
                ui += 1
            else:
                order[k] = vi
                vi += 1
        add_term(out, tuple(letters[i] for i in order), koszul_sign(bdeg, order))
    return out


def shuffle_product(u: Sequence[str], v: Sequence[str], A: PresentedAlgebra) -> BarElement:
    """Signed sum over all shuffles; signs use the bar degrees of the letters."""
    u, v = tuple(u), tuple(v)
    udeg = tuple(d - 1 for d in _letter_degrees(u, A))
    vdeg = tuple(d - 1 for d in _letter_degrees(v, A))
    return dict(_shuffle_words(u, v, udeg, vdeg))


def shuffle_lc(x: Mapping[BarWord, int], y: Mapping[BarWord, int], A: PresentedAlgebra) -> BarElement:
    out: BarElement = {}
    for u, a in x.items():
        for v, b in y.items():
            add_into(out, shuffle_product(u, v, A), a * b)
    return out


def deconcatenate(word: Sequence[str]) -> list[tuple[BarWord, BarWord]]:
    """All ``len(word) + 1`` splittings ``(prefix, suffix)``, shortest prefix first."""
    word = tuple(word)
    return [(word[:i], word[i:]) for i in range(len(word) + 1)]


def words_of_bar_degree(A: PresentedAlgebra, n: int) -> tuple[BarWord, ...]:
    """Every bar word of bar degree ``n``, in a deterministic order."""
    return _words(A, n)


@lru_cache(maxsize=None)
def _words_cached(letters: tuple[tuple[str, int], ...], n: int) -> tuple[BarWord, ...]:
    if n == 0:
        return (EMPTY,)
    out = []
    for label, bd in letters:
        if 0 < bd <= n:
            out.extend((label,) + rest for rest in _words_cached(letters, n - bd))
        elif bd == 0:
            raise ValueError("degree-1 letters would give infinitely many words")
    return tuple(out)


def _words(A: PresentedAlgebra, n: int) -> tuple[BarWord, ...]:
    if n < 0:
        return ()
    letters = tuple((x, A.degree(x) - 1) for x in A.positive)
    return _words_cached(letters, n)


def sz(m: int, letter: str = "z") -> BarWord:
    """The word ``sz|...|sz`` with ``m`` letters."""
    return (letter,) * m


def format_word(word: Sequence[str]) -> str:
    return "|".join(f"s{x}" for x in word) if word else "1"


__all__ = [
    "BarElement",
    "BarWord",
    "EMPTY",
    "bar_degree",
    "bar_differential",
    "bar_differential_lc",
    "deconcatenate",
    "format_word",
    "shuffle_by_permutations",
    "shuffle_lc",
    "shuffle_product",
    "sz",
    "words_of_bar_degree",
]
