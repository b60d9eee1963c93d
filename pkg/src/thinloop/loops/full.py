"""The twisted extension ``Omega B A (.) B A`` in the strictly commutative case.

Basis elements are pairs ``(omega, c)``: ``omega`` is a cobar word, i.e. a
tuple of nonempty bar words ``(a_1, ..., a_k)`` standing for
``s^-1 a_1 ... s^-1 a_k``, and ``c`` is a bar word.  The module is free as a
right ``Omega``-module, with ``(w (x) c) . v = (-1)^(|v||c|) wv (x) c``.

The left action of a generator ``s^-1 a`` on ``1 (x) c`` and the
differential of ``1 (x) c`` are recursions in the length of ``c`` with ``*``
the shuffle product; everything else follows from the right-module
structure.  In the left-action recursion the two bracket terms enter with
opposite signs, exactly as in the differential recursion.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Mapping

from ..core.complex import DegreeOutOfRange
from ..dga.algebra import PresentedAlgebra
from ..dga.bar import bar_degree, bar_differential, shuffle_product
from ..dga.cobar import BarCoalgebra, cobar_differential
from ..dga.lincomb import add_into, add_term
from ..dga.signs import block_swap_sign, sign_power


class FullLoopModel:
    """Differential ``D-bar`` and left action, evaluated on degrees ``<= max_degree``."""

    def __init__(self, A: PresentedAlgebra, max_degree: int):
        self.A = A
        self.max_degree = max_degree
        self.B = BarCoalgebra(A)
        self._left_gen = lru_cache(maxsize=None)(self._left_gen_uncached)
        self._dbar_unit = lru_cache(maxsize=None)(self._dbar_unit_uncached)

    # -- degrees -------------------------------------------------------------

    def bdeg(self, word) -> int:
        return bar_degree(word, self.A)

    def omega_degree(self, omega) -> int:
        return sum(self.bdeg(a) + 1 for a in omega)

    def degree(self, e) -> int:
        omega, c = e
        return self.omega_degree(omega) + self.bdeg(c)

    def _check(self, e) -> None:
        deg = self.degree(e)
        if deg > self.max_degree:
            raise DegreeOutOfRange(f"element {e!r} of degree {deg} exceeds the truncation {self.max_degree}")

    def _theta(self, word, j: int) -> int:
        return j + sum(self.A.degree(x) for x in word[:j])

    # -- module structure ----------------------------------------------------

    def right_act(self, elem: Mapping, omega) -> dict:
        """``elem . s^-1 omega`` for a cobar word ``omega``."""
        omega = tuple(omega)
        dv = self.omega_degree(omega)
        out: dict = {}
        for (w, c), k in elem.items():
            add_term(out, (w + omega, c), block_swap_sign(dv, self.bdeg(c)) * k)
        return out

    def _left_gen_uncached(self, a: tuple, c: tuple) -> tuple:
        A = self.A
        out: dict = {((a,), c): 1}
        n = len(c)
        theta_n = self._theta(c, n)
        for j in range(1, n):
            prefix, suffix = c[:j], c[j:]
            for w, k in shuffle_product(a, prefix, A).items():
                add_into(out, dict(self._left_gen(w, suffix)), -k)
            theta_j = self._theta(c, j)
            sgn = sign_power(theta_j * (theta_n - theta_j))
            # bracket sign matches the D-bar recursion; the opposite sign breaks D-bar^2 = 0
            for w, k in shuffle_product(a, suffix, A).items():
                add_term(out, ((w,), prefix), sgn * k)
        return tuple(out.items())

    def left_generator_action(self, a, c) -> dict:
        """``(s^-1 a (x) 1) . (1 (x) c)``."""
        a, c = tuple(a), tuple(c)
        self._check(((a,), c))
        return dict(self._left_gen(a, c))

    def left_act(self, a, elem: Mapping) -> dict:
        """``s^-1 a`` acting on a general element, via ``w (x) c = +-(1 (x) c) . w``."""
        out: dict = {}
        for (w, c), k in elem.items():
            sgn = block_swap_sign(self.omega_degree(w), self.bdeg(c))
            add_into(out, self.right_act(self.left_generator_action(a, c), w), sgn * k)
        return out

    # -- differential --------------------------------------------------------

    def _dbar_unit_uncached(self, c: tuple) -> tuple:
        A = self.A
        out: dict = {}
        for w, k in bar_differential(c, A).items():
            add_term(out, ((), w), k)
        n = len(c)
        theta_n = self._theta(c, n)
        for j in range(1, n):
            prefix, suffix = c[:j], c[j:]
            add_into(out, self.left_generator_action(prefix, suffix))
            theta_j = self._theta(c, j)
            add_term(out, ((suffix,), prefix), -sign_power(theta_j * (theta_n - theta_j)))
        return tuple(out.items())

    def dbar_basis(self, e) -> dict:
        """``D-bar`` on a basis element, extended as a right-module derivation."""
        omega, c = tuple(e[0]), tuple(e[1])
        if self.degree((omega, c)) + 1 > self.max_degree:
            raise DegreeOutOfRange(f"D-bar of {e!r} would leave the truncation {self.max_degree}")
        dc = dict(self._dbar_unit(c))
        if not omega:
            return dc
        dw = self.omega_degree(omega)
        cd = self.bdeg(c)
        out = self.right_act(dc, omega)
        for w2, k in cobar_differential(omega, self.B).items():
            # (1 (x) c) . w2 = (-1)^(|w2||c|) w2 (x) c, with |w2| = |omega| + 1
            add_term(out, (w2, c), sign_power(cd) * block_swap_sign(dw + 1, cd) * k)
        sgn = block_swap_sign(dw, cd)
        return {key: sgn * v for key, v in out.items()}

    def dbar(self, elem: Mapping) -> dict:
        out: dict = {}
        for e, k in elem.items():
            add_into(out, self.dbar_basis(e), k)
        return out

    # -- linearization -------------------------------------------------------

    def epsilon(self, omega) -> dict:
        """``s^-1(sx) -> x``, zero on longer words, multiplicative."""
        acc: dict = {self.A.unit: 1}
        for a in omega:
            if len(a) != 1:
                return {}
            acc = self.A.mul_lc(acc, {a[0]: 1})
            if not acc:
                return {}
        return acc

    def linearize(self, elem: Mapping) -> dict:
        """``(epsilon (x) Id)`` into ``A (x) BA`` with keys ``(y, c)``."""
        out: dict = {}
        for (w, c), k in elem.items():
            for y, e in self.epsilon(w).items():
                add_term(out, (y, c), k * e)
        return out


__all__ = ["FullLoopModel"]
