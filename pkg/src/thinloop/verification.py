"""Named identity checks grouped into suites ``dga``, ``loop`` and ``circle``.

Every check returns ``None`` on success or a short counterexample string.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Iterator, TextIO

from .circle.cubes import (
    boundary,
    build_T_family,
    cube_boundary,
    cube_product,
    diagonal,
    serre_diagonal,
    sigma,
    sigma_chain,
)
from .circle.orbit import OmegaRelationError, orbit_complex, random_omega_spec, single_omega0_example
from .circle.tdga import (
    realize,
    resolution_differential,
    resolution_differential_lc,
    t_degree,
    t_dga_differential,
    t_dga_differential_lc,
    words_up_to,
)
from .core.complex import DifferentialSquareError
from .dga.algebra import PresentedAlgebra, sphere, truncated_polynomial, wedge
from .dga.bar import (
    bar_degree,
    bar_differential,
    bar_differential_lc,
    shuffle_by_permutations,
    shuffle_lc,
    shuffle_product,
    sz,
    words_of_bar_degree,
)
from .dga.cobar import (
    BarCoalgebra,
    CobarAlgebra,
    PresentedCoalgebra,
    cobar_differential,
    cobar_differential_lc,
    is_coassociative_at,
    is_coderivation_at,
    rank3_test_coalgebra,
)
from .dga.lincomb import add_into, add_term
from .dga.signs import block_swap_sign, sign_power
from .dga.twisted import cobar_twisting_cochain, twisted_tensor
from .loops.fls import apply_linear, cyclic_S, fls_basis, hochschild_differential, power_map
from .loops.full import FullLoopModel
from .loops.models import build_model

SUITES = ("all", "dga", "loop", "circle")


@dataclass(frozen=True)
class CheckResult:
    name: str
    counterexample: str | None

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def line(self) -> str:
        return f"{self.name}: {'PASS' if self.ok else 'FAIL'}"


def sample_algebras() -> list[PresentedAlgebra]:
    """Small presentations covering odd spheres, wedges, a polynomial truncation and a nonzero d."""
    with_d = PresentedAlgebra(
        (("1", 0), ("x", 2), ("y", 3), ("u", 4), ("v", 5)),
        differential={"x": {"y": 1}, "u": {"v": 1}},
        products={("x", "x"): {"u": 2}, ("x", "y"): {"v": 1}},
        name="x,y,u,v with dx=y",
    )
    return [sphere(3), wedge([2, 3]), wedge([3, 3]), truncated_polynomial(2, 3), with_d]


def _first(pairs: Iterator[tuple[object, dict]]) -> str | None:
    for where, defect in pairs:
        if defect:
            return f"{where}: {defect}"
    return None


# -- dga -------------------------------------------------------------------


def _bar_words(A, top):
    for n in range(top + 1):
        yield from words_of_bar_degree(A, n)


def check_bar_d_squared(top: int = 8) -> str | None:
    return _first(
        ((A.name, w), bar_differential_lc(bar_differential(w, A), A))
        for A in sample_algebras()
        for w in _bar_words(A, top)
    )


def _word_pairs(A, top):
    words = list(_bar_words(A, top))
    for u in words:
        for v in words:
            if bar_degree(u, A) + bar_degree(v, A) <= top:
                yield u, v


def check_shuffle_reference(top: int = 6) -> str | None:
    for A in sample_algebras():
        for u, v in _word_pairs(A, top):
            if shuffle_product(u, v, A) != shuffle_by_permutations(u, v, A):
                return f"{A.name}: {u} * {v}"
    return None


def check_shuffle_commutative(top: int = 6) -> str | None:
    for A in sample_algebras():
        for u, v in _word_pairs(A, top):
            s = block_swap_sign(bar_degree(u, A), bar_degree(v, A))
            lhs = shuffle_product(u, v, A)
            rhs = {w: s * c for w, c in shuffle_product(v, u, A).items()}
            if lhs != rhs:
                return f"{A.name}: {u} * {v}"
    return None


def check_shuffle_associative(top: int = 6) -> str | None:
    for A in sample_algebras():
        words = list(_bar_words(A, top // 2))
        for u in words:
            for v in words:
                for w in words:
                    left = shuffle_lc(shuffle_product(u, v, A), {w: 1}, A)
                    right = shuffle_lc({u: 1}, shuffle_product(v, w, A), A)
                    if left != right:
                        return f"{A.name}: ({u} * {v}) * {w}"
    return None


def check_shuffle_derivation(top: int = 6) -> str | None:
    for A in sample_algebras():
        for u, v in _word_pairs(A, top):
            lhs = bar_differential_lc(shuffle_product(u, v, A), A)
            rhs = shuffle_lc(bar_differential(u, A), {v: 1}, A)
            add_into(rhs, shuffle_lc({u: 1}, bar_differential(v, A), A), sign_power(bar_degree(u, A)))
            if lhs != rhs:
                return f"{A.name}: d({u} * {v})"
    return None


def check_divided_powers(top: int = 8) -> str | None:
    for n in (3, 5):
        A = sphere(n)
        for a in range(top + 1):
            for b in range(top + 1 - a):
                got = shuffle_product(sz(a), sz(b), A)
                want = {sz(a + b): comb(a + b, a)}
                if got != want:
                    return f"S^{n}: sz({a}) * sz({b}) = {got}"
    return None


def check_bar_coalgebra(top: int = 7) -> str | None:
    for A in sample_algebras():
        B = BarCoalgebra(A)
        for w in _bar_words(A, top):
            if not is_coassociative_at(B, w):
                return f"{A.name}: coassociativity at {w}"
            if not is_coderivation_at(B, w):
                return f"{A.name}: coderivation at {w}"
    return None


def _test_coalgebras():
    unit_c = PresentedCoalgebra((("1", 0), ("c", 2)), name="{1,c}")
    return [unit_c, rank3_test_coalgebra(), BarCoalgebra(truncated_polynomial(2, 3)), BarCoalgebra(sphere(3))]


def check_cobar_d_squared(top: int = 10) -> str | None:
    for C in _test_coalgebras():
        Om = CobarAlgebra(C)
        for n in range(top + 1):
            for w in Om.basis_in_degree(n):
                dd = cobar_differential_lc(cobar_differential(w, C), C)
                if dd:
                    return f"{getattr(C, 'name', 'BA')}: d^2 {w} = {dd}"
    return None


def check_acyclic_cobar(top: int = 10) -> str | None:
    for C in _test_coalgebras():
        cx = twisted_tensor(cobar_twisting_cochain(C), top)
        for n in range(top):
            h = cx.homology(n)
            expected_free = 1 if n == 0 else 0
            if h.free_rank != expected_free or h.torsion:
                return f"{getattr(C, 'name', 'BA')}: H^{n} = {h}"
    return None


DGA_CHECKS: list[tuple[str, Callable[[], str | None]]] = [
    ("bar d²=0", check_bar_d_squared),
    ("bar coassociative coderivation", check_bar_coalgebra),
    ("shuffle matches permutation reference", check_shuffle_reference),
    ("shuffle commutativity", check_shuffle_commutative),
    ("shuffle associativity", check_shuffle_associative),
    ("shuffle derivation of d_B", check_shuffle_derivation),
    ("divided-power binomial law", check_divided_powers),
    ("cobar d²=0", check_cobar_d_squared),
    ("acyclic cobar", check_acyclic_cobar),
]


# -- loop ------------------------------------------------------------------


def _fls_elements(A, top):
    for n in range(top + 1):
        yield from fls_basis(A, n)


def _compose(f, g, e, A):
    return apply_linear(f, g(e, A), A)


def check_cup_d_squared(top: int = 9) -> str | None:
    return _first(
        ((A.name, e), _compose(hochschild_differential, hochschild_differential, e, A))
        for A in sample_algebras()
        for e in _fls_elements(A, top)
    )


def check_S_squared(top: int = 9) -> str | None:
    return _first(((A.name, e), _compose(cyclic_S, cyclic_S, e, A)) for A in sample_algebras() for e in _fls_elements(A, top))


def _anticommutator(e, A):
    out = _compose(hochschild_differential, cyclic_S, e, A)
    add_into(out, _compose(cyclic_S, hochschild_differential, e, A))
    return out


def check_dS_anticommute(top: int = 9) -> str | None:
    return _first(((A.name, e), _anticommutator(e, A)) for A in sample_algebras() for e in _fls_elements(A, top))


def _power_commutator(e, A):
    out = _compose(hochschild_differential, power_map, e, A)
    add_into(out, _compose(power_map, hochschild_differential, e, A), -1)
    return out


def check_power_chain_map(top: int = 9) -> str | None:
    return _first(((A.name, e), _power_commutator(e, A)) for A in sample_algebras() for e in _fls_elements(A, top))


def _model_square(model: str, top: int) -> str | None:
    for A in sample_algebras():
        try:
            build_model(A, model, top)
        except DifferentialSquareError as err:
            return f"{A.name}: {err}"
    return None


def check_hos_square(top: int = 10) -> str | None:
    return _model_square("hos", top)


def check_tc_square(top: int = 10) -> str | None:
    return _model_square("tc", top)


def _full_basis(F: FullLoopModel, n: int):
    """Basis of the twisted extension in degree ``n``: cobar words times bar words."""
    A = F.A

    def omegas(m):
        if m == 0:
            yield ()
            return
        for k in range(2, m + 1):
            for a in words_of_bar_degree(A, k - 1):
                if a:
                    for rest in omegas(m - k):
                        yield (a,) + rest

    for m in range(n + 1):
        for w in omegas(m):
            for c in words_of_bar_degree(A, n - m):
                yield (w, c)


def check_dbar_squared(top: int = 10) -> str | None:
    for A in sample_algebras():
        F = FullLoopModel(A, top)
        for n in range(top - 1):
            for e in _full_basis(F, n):
                dd = F.dbar(F.dbar_basis(e))
                if dd:
                    return f"{A.name}: D-bar^2 {e} = {dd}"
    return None


def check_linearization(top: int = 10) -> str | None:
    for A in sample_algebras():
        F = FullLoopModel(A, top)
        for n in range(top):
            for e in _full_basis(F, n):
                lhs = F.linearize(F.dbar_basis(e))
                rhs = apply_linear(hochschild_differential, F.linearize({e: 1}), A)
                if lhs != rhs:
                    return f"{A.name}: at {e}: {lhs} != {rhs}"
    return None


LOOP_CHECKS: list[tuple[str, Callable[[], str | None]]] = [
    ("⌣d²=0", check_cup_d_squared),
    ("S²=0", check_S_squared),
    ("⌣dS=−S⌣d", check_dS_anticommute),
    ("power-map chain map", check_power_chain_map),
    ("D̃²=0", check_hos_square),
    ("D_π̃²=0", check_tc_square),
    ("D̄²=0", check_dbar_squared),
    ("(ε⊗Id)D̄=⌣d(ε⊗Id)", check_linearization),
]


# -- circle ----------------------------------------------------------------


def _family(n_max: int = 3):
    return build_T_family(n_max)


def check_dT(n_max: int = 3) -> str | None:
    T = _family(n_max)
    if boundary(T[0]):
        return f"dT_0 = {boundary(T[0])}"
    for n in range(1, n_max + 1):
        rhs: dict = {}
        for i in range(1, n + 1):
            add_into(rhs, cube_product(T[i - 1], T[n - i]))
        if boundary(T[n]) != rhs:
            return f"n = {n}"
    return None


def check_primitive(n_max: int = 3) -> str | None:
    for n, t in enumerate(_family(n_max)):
        if diagonal(t, reduced=True):
            return f"T_{n}: {diagonal(t, reduced=True)}"
    return None


def _family_cubes(n_max: int = 3):
    cubes: set = set()
    for t in _family(n_max):
        cubes |= set(t)
    return sorted(cubes, key=lambda c: (c.dim, str(c)))


def check_sigma_identity() -> str | None:
    for c in _family_cubes():
        if c.dim < 2:
            continue
        s = sigma(c)
        lhs = cube_boundary(s) if s is not None else {}
        rhs = {c: 1}
        add_into(rhs, sigma_chain(cube_boundary(c)), -1)
        if lhs != rhs:
            return str(c)
    return None


def _product_cubes(n_max: int = 2):
    T = _family(n_max)
    cubes = set(_family_cubes(n_max))
    for a in T:
        for b in T:
            cubes |= set(cube_product(a, b))
    return sorted(cubes, key=lambda c: (c.dim, str(c)))


def check_cube_d_squared() -> str | None:
    return _first(((str(c),), boundary(cube_boundary(c))) for c in _product_cubes(3))


def check_coalgebra_cubes() -> str | None:
    for c in _product_cubes(2):
        D = serre_diagonal(c)
        lhs = diagonal(cube_boundary(c))
        rhs: dict = {}
        for (a, b), k in D.items():
            for a2, e in cube_boundary(a).items():
                add_term(rhs, (a2, b), k * e)
            for b2, e in cube_boundary(b).items():
                add_term(rhs, (a, b2), k * e * sign_power(a.dim))
        if lhs != rhs:
            return f"coderivation at {c}"
        L: dict = {}
        R: dict = {}
        for (a, b), k in D.items():
            for (a1, a2), e in serre_diagonal(a).items():
                add_term(L, (a1, a2, b), k * e)
            for (b1, b2), e in serre_diagonal(b).items():
                add_term(R, (a, b1, b2), k * e)
        if L != R:
            return f"coassociativity at {c}"
    return None


def check_t_dga() -> str | None:
    return _first(((w,), t_dga_differential_lc(t_dga_differential(w))) for w in words_up_to(3, 3))


def check_realization(max_degree: int = 9) -> str | None:
    T = _family(3)
    for w in words_up_to(3, 3):
        if t_degree(w) > max_degree:
            continue
        if realize(t_dga_differential(w), T) != boundary(realize({w: 1}, T)):
            return f"word {w}"
    return None


def check_resolution(n_max: int = 4) -> str | None:
    return _first(
        ((n, w), resolution_differential_lc(resolution_differential(n, w)))
        for n in range(n_max + 1)
        for w in words_up_to(3, 2)
    )


def check_orbit(seeds: int = 25, max_degree: int = 12) -> str | None:
    try:
        orbit_complex(single_omega0_example(), max_degree)
        for seed in range(seeds):
            orbit_complex(random_omega_spec(seed), max_degree)
    except (OmegaRelationError, DifferentialSquareError) as err:
        return str(err)
    return None


CIRCLE_CHECKS: list[tuple[str, Callable[[], str | None]]] = [
    ("dT_n identity n≤3", check_dT),
    ("primitivity n≤3", check_primitive),
    ("dσ=Id−σd on family cubes", check_sigma_identity),
    ("cube d²=0", check_cube_d_squared),
    ("Serre diagonal coassociative coderivation", check_coalgebra_cubes),
    ("⟨T⟩ d²=0", check_t_dga),
    ("realization is a chain map", check_realization),
    ("resolution ∂̃²=0 through v(4)", check_resolution),
    ("orbit relations and (D♯)²=0", check_orbit),
]


def checks_for(suite: str) -> list[tuple[str, Callable[[], str | None]]]:
    groups = {"dga": DGA_CHECKS, "loop": LOOP_CHECKS, "circle": CIRCLE_CHECKS}
    if suite == "all":
        return DGA_CHECKS + LOOP_CHECKS + CIRCLE_CHECKS
    if suite not in groups:
        raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    return groups[suite]


def run_suite(suite: str, out: TextIO | None = None) -> list[CheckResult]:
    results = []
    for name, check in checks_for(suite):
        res = CheckResult(name, check())
        results.append(res)
        if out is not None:
            print(res.line(), file=out)
            if not res.ok:
                print(f"  counterexample: {res.counterexample}", file=out)
    return results


__all__ = ["CheckResult", "SUITES", "checks_for", "run_suite", "sample_algebras"]
