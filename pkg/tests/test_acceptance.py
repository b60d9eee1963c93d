"""Acceptance criteria, one test per criterion.

Each test prints a single ``criterion k ...: PASS|FAIL (t s)`` line (visible
in ``pytest -v -s`` and in the captured output of a failure) and then
asserts both the exact result and the runtime budget.
"""

import io
import time

import pytest

from oracles import fls_sphere_ranks, hos_s3_table, tc_s3_mod2_dims
from thinloop.cli import Coefficients, run
from thinloop.core import HomologyGroup, SparseIntMatrix, induced_matrix, mod_p_dimension_via_uct, reduce_mod_p
from thinloop.dga import sphere, sz
from thinloop.loops import build_model, power_map
from thinloop.verification import run_suite


def check(capsys, label: str, budget: float, compute):
    """Time ``compute() -> (got, want)``, print the verdict line, then assert."""
    start = time.perf_counter()
    got, want = compute()
    elapsed = time.perf_counter() - start
    ok = got == want and elapsed < budget
    with capsys.disabled():
        print(f"\n{label}: {'PASS' if ok else 'FAIL'} ({elapsed:.2f} s, budget {budget:g} s)")
    assert got == want
    assert elapsed < budget, f"{label} took {elapsed:.2f} s"


def test_criterion_1_free_loop_model_of_odd_spheres(capsys):
    def compute():
        got = {n: [r[1:] for r in run("fls", sphere(n), 20, Coefficients(0))] for n in (3, 5)}
        return got, {n: [(r, ()) for r in fls_sphere_ranks(n, 20)] for n in (3, 5)}

    check(capsys, "criterion 1 fls(S^3), fls(S^5) ranks through 19", 1.0, compute)


def test_criterion_2_homotopy_orbits_of_s3(capsys):
    want = hos_s3_table(16)
    # spot rows, frozen independently of the enumeration
    assert want[8] == (2, (6,)) and want[10] == (2, (2, 12))

    def compute():
        return [(r, t) for _, r, t in run("hos", sphere(3), 16, Coefficients(0))], want

    check(capsys, "criterion 2 hos(S^3) table through 15", 5.0, compute)


def test_criterion_3_tc_of_s3_mod_two(capsys):
    def compute():
        return [d for _, d in run("tc", sphere(3), 12, Coefficients(2))], tc_s3_mod2_dims(12)

    check(capsys, "criterion 3 tc(S^3) mod 2 through 11", 5.0, compute)


def _suite(*names):
    def compute():
        out = io.StringIO()
        results = [r for name in names for r in run_suite(name, out)]
        failed = [r.line() for r in results if not r.ok]
        return (failed, out.getvalue()), ([], out.getvalue())

    return compute


def test_criterion_4_identity_suite(capsys):
    check(capsys, "criterion 4 algebraic identity suite", 30.0, _suite("dga", "loop"))


def test_criterion_5_cubical_suite(capsys):
    check(capsys, "criterion 5 cubical suite", 10.0, _suite("circle"))


def _power_map_matrix(C, n):
    A = sphere(3)
    index = {e: i for i, e in enumerate(C.basis[n])}
    entries = {}
    for j, e in enumerate(C.basis[n]):
        for key, c in power_map(e, A).items():
            entries[(index[key], j)] = c
    return SparseIntMatrix(len(C.basis[n]), len(C.basis[n]), entries)


def test_criterion_6_power_map_spectrum(capsys):
    def compute():
        C = build_model(sphere(3), "fls", 13)
        got = {m: (C.basis[2 * m], induced_matrix(C, C, _power_map_matrix(C, 2 * m), 2 * m)) for m in range(1, 7)}
        return got, {m: ((("1", sz(m)),), [[2**m]]) for m in range(1, 7)}

    check(capsys, "criterion 6 power map on H^(2m) fls(S^3), m <= 6", 1.0, compute)


@pytest.mark.parametrize(
    "n, model, N",
    [(3, "fls", 20), (5, "fls", 20), (3, "hos", 16), (3, "tc", 12)],
)
@pytest.mark.parametrize("p", [2, 3, 5])
def test_field_homology_two_ways_on_acceptance_complexes(n, model, N, p):
    C = build_model(sphere(n), model, N)
    Cp = reduce_mod_p(C, p)
    for k in range(N):
        assert Cp.homology(k) == HomologyGroup(mod_p_dimension_via_uct(C, k, p))
