import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thinloop.circle import (
    BASEPOINT,
    CircleCube,
    OmegaComplexSpec,
    OmegaRelationError,
    boundary,
    build_T_family,
    chain,
    cube,
    cube_boundary,
    cube_product,
    diagonal,
    generator_differential,
    has_linear_terms,
    omega_bound,
    orbit_complex,
    orbit_differential,
    orbit_square_components,
    random_omega_spec,
    realize,
    resolution_differential,
    resolution_differential_lc,
    serre_diagonal,
    sigma,
    sigma_chain,
    single_omega0_example,
    t_dga_differential,
    t_dga_differential_lc,
    words_up_to,
)
from thinloop.dga.lincomb import add_into

FAMILY = build_T_family(3)


def _sum_products(n):
    out: dict = {}
    for i in range(1, n + 1):
        add_into(out, cube_product(FAMILY[i - 1], FAMILY[n - i]))
    return out


def _dsigma_defect(T: CircleCube) -> dict:
    lhs = boundary(chain(sigma(T)))
    rhs = chain(T)
    add_into(rhs, sigma_chain(cube_boundary(T)), -1)
    add_into(lhs, rhs, -1)
    return lhs


# -- cubes ---------------------------------------------------------------------


def test_sigma_examples():
    assert sigma(cube(1, (0,))) == cube(2, (0, 1))
    assert sigma(cube(2, (0,), (1,))) == cube(3, (0, 1), (0, 2))
    assert sigma(cube(2, (0,))) is None


def test_degeneracy_and_constants():
    assert cube(2, (0,)).is_degenerate
    assert not cube(2, (0, 1)).is_degenerate
    assert CircleCube.from_terms(1, {(0,): 1, (): 5}) == cube(1, (0,))
    assert chain(cube(2, (1,))) == {}
    with pytest.raises(ValueError):
        cube(2, (0, 0))
    with pytest.raises(ValueError):
        cube(2, (2,))


def test_boundary_of_T1_by_hand():
    # faces of t0 t1 + t0 t2: only t0 = 1 and the cancelling pairs at t1, t2 survive
    assert cube_boundary(cube(3, (0, 1), (0, 2))) == {cube(2, (0,), (1,)): 1}


def test_product_unit_and_T0_squared():
    T0 = FAMILY[0]
    assert cube_product(chain(BASEPOINT), T0) == T0
    assert cube_product(T0, T0) == {cube(2, (0,), (1,)): 1}


def test_cube_d_squared():
    for Tn in FAMILY:
        assert boundary(boundary(Tn)) == {}
    rng = random.Random(3)
    for _ in range(50):
        dim = rng.randint(2, 5)
        T = _random_cube(rng, dim, allow_linear=True)
        assert boundary(cube_boundary(T)) == {}


def test_leibniz_on_family():
    for a in FAMILY[:3]:
        for b in FAMILY[:3]:
            lhs = boundary(cube_product(a, b))
            rhs = cube_product(boundary(a), b)
            add_into(rhs, cube_product(a, boundary(b)), -1)  # |T_i| = 2i+1 is odd
            assert lhs == rhs


# -- the family T_n ----------------------------------------------------------------


def test_T0_T1_shapes():
    assert FAMILY[0] == {cube(1, (0,)): 1}
    assert FAMILY[1] == {cube(3, (0, 1), (0, 2)): 1}
    assert boundary(FAMILY[0]) == {}


def test_T2_is_a_pair_of_five_cubes():
    assert FAMILY[2] == {
        cube(5, (0, 1), (0, 2, 3), (0, 2, 4)): 1,
        cube(5, (0, 1, 2), (0, 1, 3), (0, 4)): 1,
    }


def test_T2_reversed_pair_is_primitive_but_not_a_bounding_chain():
    # the same two cubes with t1..t4 reversed
    U = cube(5, (0, 4), (0, 3, 2), (0, 3, 1))
    V = cube(5, (0, 4, 3), (0, 4, 2), (0, 1))
    UV = {U: 1, V: 1}
    assert diagonal(UV, reduced=True) == {}
    assert boundary(UV) != _sum_products(2)


def test_T3_size():
    T3 = FAMILY[3]
    assert len(T3) == 5
    assert {T.dim for T in T3} == {7}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_dT_identity(n):
    assert boundary(FAMILY[n]) == _sum_products(n)


@pytest.mark.parametrize("n", range(4))
def test_family_is_primitive(n):
    assert diagonal(FAMILY[n], reduced=True) == {}


def test_family_bound():
    with pytest.raises(ValueError):
        build_T_family(6)
    assert len(build_T_family(4)) == 5


def test_T1_diagonal_relation():
    # full diagonal of a primitive chain is T (x) 1 + 1 (x) T
    full = diagonal(FAMILY[1])
    T = cube(3, (0, 1), (0, 2))
    assert full == {(T, BASEPOINT): 1, (BASEPOINT, T): 1}


def test_serre_diagonal_is_coassociative():
    rng = random.Random(11)
    for _ in range(20):
        T = _random_cube(rng, rng.randint(1, 4), allow_linear=True)
        left: dict = {}
        right: dict = {}
        for (a, b), c in serre_diagonal(T).items():
            for (a1, a2), c1 in serre_diagonal(a).items():
                add_into(left, {(a1, a2, b): c * c1})
            for (b1, b2), c2 in serre_diagonal(b).items():
                add_into(right, {(a, b1, b2): c * c2})
        assert left == right, T


# -- sigma identity ------------------------------------------------------------------


def test_sigma_identity_on_family_cubes():
    for Tn in FAMILY[1:]:
        for T in Tn:
            assert _dsigma_defect(T) == {}, str(T)


def test_sigma_identity_fails_with_linear_terms():
    T = CircleCube.from_terms(4, {(0,): 1, (1, 2): 1, (1, 3): 1})
    assert has_linear_terms(T)
    assert _dsigma_defect(T) != {}


def _random_cube(rng, dim, *, allow_linear):
    while True:
        terms = {}
        for v in range(dim):
            size = rng.randint(1 if allow_linear else 2, min(dim, 3))
            if size > dim:
                continue
            others = rng.sample([u for u in range(dim) if u != v], size - 1)
            terms[tuple(sorted([v] + others))] = rng.choice([1, 1, 2, -1])
        T = CircleCube.from_terms(dim, terms)
        if not T.is_degenerate:
            return T


@given(st.integers(0, 10_000), st.integers(2, 5))
@settings(max_examples=80, deadline=None)
def test_sigma_identity_on_linear_free_cubes(seed, dim):
    T = _random_cube(random.Random(seed), dim, allow_linear=False)
    assert not has_linear_terms(T)
    assert _dsigma_defect(T) == {}


# -- the algebra <T> --------------------------------------------------------------------


def test_generator_differentials():
    assert generator_differential(0) == {}
    assert generator_differential(1) == {(0, 0): 1}
    assert generator_differential(2) == {(0, 1): 1, (1, 0): 1}


def test_t_dga_d_squared():
    for w in words_up_to(3, 3):
        assert t_dga_differential_lc(t_dga_differential(w)) == {}, w


def test_realization_is_a_chain_map():
    for w in words_up_to(3, 2):
        if sum(2 * n + 1 for n in w) > 9:
            continue
        assert realize(t_dga_differential(w), FAMILY) == boundary(realize({w: 1}, FAMILY)), w


def test_realize_needs_the_generator():
    with pytest.raises(ValueError):
        realize({(4,): 1}, FAMILY)


# -- resolution --------------------------------------------------------------------------


def test_resolution_examples():
    assert resolution_differential(0, ()) == {}
    assert resolution_differential(1, ()) == {(0, (0,)): 1}
    assert resolution_differential(2, ()) == {(1, (0,)): 1, (0, (1,)): 1}


@pytest.mark.parametrize("n", range(5))
def test_resolution_squares_to_zero(n):
    for w in words_up_to(2, 2):
        assert resolution_differential_lc(resolution_differential(n, w)) == {}, (n, w)


def test_resolution_plus_sign_fails():
    def plus(n, w):
        out = {(n - k - 1, (k,) + w): 1 for k in range(n)}
        for v, c in t_dga_differential(w).items():
            out[(n, v)] = out.get((n, v), 0) + c
        return out

    twice: dict = {}
    for (m, w), c in plus(2, ()).items():
        add_into(twice, plus(m, w), c)
    assert {k: v for k, v in twice.items() if v} == {(0, (0, 0)): 2}


# -- orbit complex -------------------------------------------------------------------------


def test_zero_omega_is_plain_differential():
    spec = OmegaComplexSpec({0: ["a"], 1: ["b"]}, {"a": {"b": 2}})
    assert orbit_differential(spec, (3, "a")) == {(3, "b"): 2}
    C = orbit_complex(spec, 6)
    assert C.homology(1).torsion == (2,)


def test_single_omega0():
    spec = single_omega0_example()
    C = orbit_complex(spec, 9)
    assert orbit_differential(spec, (0, "c2")) == {(0, "e3"): 1, (1, "b1"): 1}
    assert C.homology(0).free_rank == 0


@given(st.integers(0, 10_000))
@settings(max_examples=30, deadline=None)
def test_random_specs_square_to_zero(seed):
    spec = random_omega_spec(seed)
    orbit_complex(spec, spec.top + 2 * spec.K + 4)
    for labels in spec.basis.values():
        for x in labels:
            assert orbit_square_components(spec, x) == {}


def test_bad_omega_is_named():
    basis = {0: ["a0"], 1: ["b1"], 2: ["c2"], 3: ["e3"]}
    d = {"a0": {"b1": 1}, "c2": {"e3": 1}}
    # omega_0 must anticommute with d#; this one does not
    with pytest.raises(OmegaRelationError) as err:
        OmegaComplexSpec(basis, d, [{"e3": {"c2": 1}}])
    assert err.value.k == 0 and err.value.label in {"c2", "e3"}
    with pytest.raises(OmegaRelationError) as err:
        OmegaComplexSpec({0: ["a"], 1: ["b"], 2: ["c"]}, {"a": {"b": 1}, "b": {"c": 1}})
    assert err.value.k is None and err.value.label == "a"


def test_square_components_match_relations():
    # expanding D#^2 symbolically reproduces each relation at its power of u
    for spec in (single_omega0_example(), random_omega_spec(17, K=3)):
        for labels in spec.basis.values():
            for x in labels:
                comps = orbit_square_components(spec, x)
                assert comps.get(0, {}) == spec.dsharp(spec.dsharp({x: 1}))
                for M in range(2 * spec.K + 2):
                    assert comps.get(M + 1, {}) == spec.relation_defect(M, x)


def test_omega_bound():
    assert [omega_bound(m) for m in range(7)] == [0, 0, 1, 1, 2, 2, 3]
    spec = random_omega_spec(5, top=7, K=5)
    for x in (x for labels in spec.basis.values() for x in labels):
        for k in range(omega_bound(spec.degree(x)) + 1, spec.K + 1):
            assert spec.omega(k, {x: 1}) == {}


def test_degree_checks():
    basis = {0: ["a"], 1: ["b"], 2: ["c"]}
    with pytest.raises(ValueError, match="expected 1"):
        OmegaComplexSpec(basis, {}, [{"c": {"a": 1}}])
    with pytest.raises(ValueError, match="unknown label"):
        OmegaComplexSpec(basis, {"a": {"q": 1}})
