"""Integer linear combinations as plain ``{basis_key: coefficient}`` dicts."""

from __future__ import annotations

from typing import Hashable, Iterable, Mapping

LinComb = dict


def add_term(acc: dict, key: Hashable, coeff: int) -> None:
    if not coeff:
        return
    v = acc.get(key, 0) + coeff
    if v:
        acc[key] = v
    else:
        del acc[key]


def add_into(acc: dict, other: Mapping, scale: int = 1) -> dict:
    for k, v in other.items():
        add_term(acc, k, scale * v)
    return acc


def combine(terms: Iterable[tuple[Hashable, int]]) -> dict:
    acc: dict = {}
    for k, v in terms:
        add_term(acc, k, v)
    return acc


def scaled(lc: Mapping, c: int) -> dict:
    return {k: c * v for k, v in lc.items()} if c else {}


def linear_extend(f, lc: Mapping) -> dict:
    """Apply a basis-level map ``f: key -> LinComb`` linearly to ``lc``."""
    acc: dict = {}
    for k, v in lc.items():
        add_into(acc, f(k), v)
    return acc


def reduce_mod(lc: Mapping, p: int) -> dict:
    return {k: v % p for k, v in lc.items() if v % p}
