import io
import json

import pytest

from oracles import fls_sphere_ranks
from thinloop import cli, verification
from thinloop.cli import (
    Coefficients,
    DocumentError,
    algebra_to_document,
    document_to_algebra,
    dumps_algebra,
    main,
    parse_preset,
    render_tsv,
    run,
)
from thinloop.dga import AlgebraValidationError, sphere
from thinloop.verification import sample_algebras


def _main(*argv):
    out, err = io.StringIO(), io.StringIO()
    rc = main(list(argv), stdout=out, stderr=err)
    return rc, out.getvalue(), err.getvalue()


# -- documents ------------------------------------------------------------------


@pytest.mark.parametrize("A", sample_algebras(), ids=lambda A: A.name)
def test_document_round_trip(A):
    text = dumps_algebra(A)
    B = document_to_algebra(json.loads(text))
    assert dumps_algebra(B) == text
    assert B.generators == A.generators


def test_coefficients_are_decimal_strings():
    doc = algebra_to_document(sample_algebras()[-1])
    coeffs = [t["coeff"] for p in doc["products"] for t in p["result"]]
    assert coeffs and all(isinstance(c, str) for c in coeffs)
    assert "2" in coeffs


def test_integer_coefficients_accepted():
    doc = {
        "name": "w",
        "generators": [{"label": "1", "degree": 0}, {"label": "w", "degree": 2}, {"label": "w2", "degree": 4}],
        "products": [{"a": "w", "b": "w", "result": [{"gen": "w2", "coeff": 1}]}],
    }
    assert document_to_algebra(doc).mul("w", "w") == {"w2": 1}


@pytest.mark.parametrize(
    "doc, fragment",
    [
        ([], "JSON object"),
        ({"generators": [], "extra": 1}, "unknown top-level"),
        ({"name": "x"}, "missing field 'generators'"),
        ({"generators": [{"label": "1"}]}, "missing field 'degree'"),
        ({"generators": [{"label": "1", "degree": "0"}]}, "expected int"),
        (
            {
                "generators": [{"label": "1", "degree": 0}, {"label": "a", "degree": 2}],
                "products": [{"a": "a", "b": "a", "result": [{"gen": "a", "coeff": "x"}]}],
            },
            "decimal string",
        ),
        (
            {
                "generators": [{"label": "1", "degree": 0}, {"label": "a", "degree": 2}, {"label": "b", "degree": 3}],
                "differential": [{"from": "a", "to": []}, {"from": "a", "to": []}],
            },
            "listed twice",
        ),
    ],
)
def test_malformed_documents(doc, fragment):
    with pytest.raises(DocumentError, match=fragment):
        document_to_algebra(doc)


def test_presets():
    assert parse_preset("sphere:3").name == sphere(3).name
    assert parse_preset("wedge:2,3").positive == ("z1", "z2")
    assert parse_preset("poly:2,3").degrees["w2"] == 4
    with pytest.raises(DocumentError):
        parse_preset("torus:2")
    with pytest.raises(DocumentError):
        parse_preset("sphere:x")


def test_coefficient_parsing():
    assert Coefficients.parse("Z").modulus == 0
    assert Coefficients.parse("Fp:5").label == "F5"
    for bad in ("Fp:4", "Q", "Fp:x"):
        with pytest.raises(DocumentError):
            Coefficients.parse(bad)


# -- runs ---------------------------------------------------------------------------


def test_fls_s3_rows():
    rows = run("fls", sphere(3), 20, Coefficients(0))
    assert [r[1] for r in rows] == fls_sphere_ranks(3, 20)
    assert all(r[2] == () for r in rows)


def test_hos_s3_tsv():
    rc, out, _ = _main("--model", "hos", "--preset", "sphere:3", "--max-degree", "12")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "degree\tfree_rank\ttorsion"
    assert "8\t2\t6" in lines and "10\t2\t2,12" in lines
    assert len(lines) == 13


def test_tc_mod_two():
    rc, out, _ = _main("--model", "tc", "--preset", "sphere:3", "--max-degree", "6", "--coeff", "F2")
    assert rc == 0
    assert out.splitlines() == ["degree\tdim_F2", "0\t1", "1\t1", "2\t0", "3\t2", "4\t0", "5\t2"]


def test_output_is_deterministic():
    args = ("--model", "hos", "--preset", "poly:2,3", "--max-degree", "10")
    assert _main(*args) == _main(*args)


def test_markdown():
    rc, out, _ = _main("--model", "hos", "--preset", "sphere:3", "--max-degree", "9", "--markdown")
    assert rc == 0
    assert "| 8 | 2 | Z/6 |" in out.splitlines()


def test_render_tsv_empty_torsion():
    assert render_tsv([(0, 1, ())], Coefficients(0)) == "degree\tfree_rank\ttorsion\n0\t1\t\n"


def test_input_file(tmp_path):
    path = tmp_path / "a.json"
    path.write_text(dumps_algebra(sample_algebras()[-1]), encoding="utf-8")
    rc, out, _ = _main("--input", str(path), "--model", "fls", "--max-degree", "8")
    assert rc == 0 and out.startswith("degree\t")
    rc, out, _ = _main("--input", str(path), "--emit-json")
    assert rc == 0 and json.loads(out)["name"] == "x,y,u,v with dx=y"


# -- failures -------------------------------------------------------------------------


def test_invalid_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{", encoding="utf-8")
    rc, _, err = _main("--input", str(path), "--model", "fls")
    assert rc == 1 and "invalid JSON" in err


def test_non_commutative_document(tmp_path):
    doc = {
        "generators": [{"label": "1", "degree": 0}, {"label": "a", "degree": 3}, {"label": "b", "degree": 6}],
        "products": [{"a": "a", "b": "a", "result": [{"gen": "b", "coeff": "1"}]}],
    }
    path = tmp_path / "nc.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    rc, out, err = _main("--input", str(path), "--model", "fls")
    assert rc == 1 and out == ""
    assert "invalid algebra" in err


def test_diagnostics_differ_by_kind():
    _, _, e1 = _main("--preset", "sphere:1", "--model", "fls")
    _, _, e2 = _main("--preset", "torus:1", "--model", "fls")
    assert e1 and e2 and e1 != e2
    with pytest.raises(AlgebraValidationError):
        parse_preset("sphere:1")


def test_missing_source_and_model():
    assert _main("--model", "fls")[0] == 1
    assert _main("--preset", "sphere:3")[0] == 1
    assert _main("--preset", "sphere:3", "--model", "fls", "--max-degree", "1")[0] == 1


def test_invariant_violation_exit_code(monkeypatch):
    from thinloop.core import DifferentialSquareError

    def broken(*_args, **_kw):
        raise DifferentialSquareError(3, "x", {"y": 1})

    monkeypatch.setattr(cli, "build_model", broken)
    rc, _, err = _main("--model", "fls", "--preset", "sphere:3")
    assert rc == 2 and "invariant" in err


# -- verification ------------------------------------------------------------------------


@pytest.mark.parametrize(
    "suite, line",
    [("circle", "dT_n identity n≤3: PASS"), ("loop", "S²=0: PASS"), ("dga", "acyclic cobar: PASS")],
)
def test_verify_suites(suite, line):
    rc, out, _ = _main("--verify", suite)
    assert rc == 0
    assert line in out.splitlines()
    assert "FAIL" not in out


def test_verify_failure_exits_two(monkeypatch):
    monkeypatch.setattr(verification, "DGA_CHECKS", [("always fails", lambda: "element q")])
    rc, out, _ = _main("--verify", "dga")
    assert rc == 2
    assert out.splitlines() == ["always fails: FAIL", "  counterexample: element q"]
