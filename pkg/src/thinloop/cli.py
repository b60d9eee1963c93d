"""Command-line front end: ``thinloop --model hos --preset sphere:3 --max-degree 16``.

Exit status: 0 on success, 1 when the input fails validation, 2 when a built
complex violates ``d o d = 0`` (an internal invariant) or a verification
check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence, TextIO

from .core.complex import DegreeOutOfRange, DifferentialSquareError, reduce_mod_p
from .core.snf import is_prime
from .dga.algebra import AlgebraValidationError, PresentedAlgebra, sphere, truncated_polynomial, wedge
from .loops.models import MODELS, build_model
from .verification import SUITES, run_suite

EXIT_OK, EXIT_INVALID, EXIT_INVARIANT = 0, 1, 2


class DocumentError(ValueError):
    """The JSON document does not follow the AlgebraDocument schema."""


# -- documents ---------------------------------------------------------------


def _coeff(value: Any, where: str) -> int:
    # decimal strings are canonical; plain JSON integers are accepted too
    if isinstance(value, bool):
        raise DocumentError(f"{where}: coefficient must be a decimal string, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value, 10)
        except ValueError:
            pass
    raise DocumentError(f"{where}: coefficient must be a decimal string, got {value!r}")


def _require(obj: Any, key: str, kind: type, where: str):
    if not isinstance(obj, dict) or key not in obj:
        raise DocumentError(f"{where}: missing field {key!r}")
    val = obj[key]
    if not isinstance(val, kind) or isinstance(val, bool):
        raise DocumentError(f"{where}.{key}: expected {kind.__name__}, got {type(val).__name__}")
    return val


def _terms(items: Any, where: str) -> dict[str, int]:
    if not isinstance(items, list):
        raise DocumentError(f"{where}: expected a list of {{gen, coeff}}")
    out: dict[str, int] = {}
    for i, t in enumerate(items):
        gen = _require(t, "gen", str, f"{where}[{i}]")
        if "coeff" not in t:
            raise DocumentError(f"{where}[{i}]: missing field 'coeff'")
        out[gen] = out.get(gen, 0) + _coeff(t["coeff"], f"{where}[{i}].coeff")
    return {g: c for g, c in out.items() if c}


def document_to_algebra(doc: Any) -> PresentedAlgebra:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    unknown = set(doc) - {"name", "generators", "differential", "products"}
    if unknown:
        raise DocumentError(f"unknown top-level fields {sorted(unknown)}")
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise DocumentError("name: expected a string")
    gens_raw = _require(doc, "generators", list, "document")
    gens = []
    for i, g in enumerate(gens_raw):
        gens.append((_require(g, "label", str, f"generators[{i}]"), _require(g, "degree", int, f"generators[{i}]")))
    differential: dict[str, dict[str, int]] = {}
    for i, entry in enumerate(doc.get("differential", [])):
        src = _require(entry, "from", str, f"differential[{i}]")
        if src in differential:
            raise DocumentError(f"differential[{i}]: {src!r} listed twice")
        differential[src] = _terms(_require(entry, "to", list, f"differential[{i}]"), f"differential[{i}].to")
    products: dict[tuple[str, str], dict[str, int]] = {}
    for i, entry in enumerate(doc.get("products", [])):
        a = _require(entry, "a", str, f"products[{i}]")
        b = _require(entry, "b", str, f"products[{i}]")
        if (a, b) in products:
            raise DocumentError(f"products[{i}]: ({a}, {b}) listed twice")
        products[(a, b)] = _terms(_require(entry, "result", list, f"products[{i}]"), f"products[{i}].result")
    return PresentedAlgebra(tuple(gens), differential, products, name=name)


def _term_list(img: dict[str, int], order: dict[str, int]) -> list[dict[str, str]]:
    return [{"gen": g, "coeff": str(c)} for g, c in sorted(img.items(), key=lambda gc: order[gc[0]]) if c]


def algebra_to_document(A: PresentedAlgebra) -> dict:
    """Canonical document: generators in presentation order, entries sorted by that order."""
    order = {label: i for i, (label, _) in enumerate(A.generators)}
    return {
        "name": A.name,
        "generators": [{"label": g, "degree": d} for g, d in A.generators],
        "differential": [
            {"from": src, "to": _term_list(img, order)}
            for src, img in sorted(A.differential.items(), key=lambda kv: order[kv[0]])
        ],
        "products": [
            {"a": a, "b": b, "result": _term_list(img, order)}
            for (a, b), img in sorted(A.products.items(), key=lambda kv: (order[kv[0][0]], order[kv[0][1]]))
        ],
    }


def dumps_algebra(A: PresentedAlgebra) -> str:
    return json.dumps(algebra_to_document(A), indent=2, ensure_ascii=False) + "\n"


def parse_preset(spec: str) -> PresentedAlgebra:
    kind, _, arg = spec.partition(":")
    try:
        if kind == "sphere":
            return sphere(int(arg))
        if kind == "wedge":
            return wedge([int(x) for x in arg.split(",") if x.strip()])
        if kind == "poly":
            degree, height = (int(x) for x in arg.split(","))
            return truncated_polynomial(degree, height)
    except ValueError as err:
        if isinstance(err, AlgebraValidationError):
            raise
        raise DocumentError(f"malformed preset {spec!r}: {err}") from None
    raise DocumentError(f"unknown preset {spec!r}; expected sphere:N, wedge:a,b,... or poly:d,h")


def parse_algebra(source: str | Path, *, preset: bool = False) -> PresentedAlgebra:
    if preset:
        return parse_preset(str(source))
    try:
        text = Path(source).read_text(encoding="utf-8")
    except OSError as err:
        raise DocumentError(f"cannot read {source}: {err.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise DocumentError(f"{source}: invalid JSON ({err.msg} at line {err.lineno})") from None
    return document_to_algebra(doc)


# -- computation -------------------------------------------------------------


@dataclass(frozen=True)
class Coefficients:
    modulus: int  # 0 for Z

    @classmethod
    def parse(cls, text: str) -> "Coefficients":
        if text == "Z":
            return cls(0)
        if text == "F2":
            return cls(2)
        if text.startswith("Fp:"):
            try:
                p = int(text[3:])
            except ValueError:
                raise DocumentError(f"bad prime in {text!r}") from None
            if not is_prime(p):
                raise DocumentError(f"{p} is not prime")
            return cls(p)
        raise DocumentError(f"unknown coefficients {text!r}; expected Z, F2 or Fp:<p>")

    @property
    def label(self) -> str:
        return "Z" if not self.modulus else f"F{self.modulus}"


def run(model: str, A: PresentedAlgebra, max_degree: int, coeff: Coefficients) -> list[tuple]:
    """Rows ``(degree, free_rank, torsion)`` over Z or ``(degree, dimension)`` over F_p.

    ``max_degree`` is ``N``: the complex is built through degree ``N`` and
    ``H^n`` is reported for ``0 <= n <= N - 1``.
    """
    cx = build_model(A, model, max_degree)
    if coeff.modulus:
        cx = reduce_mod_p(cx, coeff.modulus)
        return [(n, cx.homology(n).free_rank) for n in range(max_degree)]
    return [(n, h.free_rank, h.torsion) for n, h in ((n, cx.homology(n)) for n in range(max_degree))]


def render_tsv(rows: list[tuple], coeff: Coefficients) -> str:
    if coeff.modulus:
        lines = [f"degree\tdim_{coeff.label}"] + [f"{n}\t{d}" for n, d in rows]
    else:
        lines = ["degree\tfree_rank\ttorsion"] + [f"{n}\t{r}\t{','.join(map(str, t))}" for n, r, t in rows]
    return "\n".join(lines) + "\n"


def render_markdown(rows: list[tuple], coeff: Coefficients) -> str:
    if coeff.modulus:
        lines = [f"| degree | dim over {coeff.label} |", "|---:|---:|"] + [f"| {n} | {d} |" for n, d in rows]
    else:
        lines = ["| degree | free rank | torsion |", "|---:|---:|:---|"]
        lines += [f"| {n} | {r} | {', '.join(f'Z/{d}' for d in t)} |" for n, r, t in rows]
    return "\n".join(lines) + "\n"


# -- entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="thinloop", description="Cohomology of thin loop-space models and identity checks.")
    p.add_argument("--model", choices=MODELS, help="which model to build")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--input", metavar="PATH", help="AlgebraDocument JSON file")
    src.add_argument("--preset", metavar="SPEC", help="sphere:N, wedge:a,b,... or poly:d,h")
    p.add_argument("--max-degree", type=int, default=16, metavar="N", help="report H^n for n < N (default 16)")
    p.add_argument("--coeff", default="Z", help="Z, F2 or Fp:<p> (default Z)")
    p.add_argument("--markdown", action="store_true", help="render a markdown table instead of TSV")
    p.add_argument("--verify", choices=SUITES, metavar="SUITE", help="run a verification suite: " + ", ".join(SUITES))
    p.add_argument("--emit-json", action="store_true", help="print the normalized algebra document and exit")
    return p


def main(argv: Sequence[str] | None = None, *, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    args = build_parser().parse_args(argv)

    if args.verify:
        results = run_suite(args.verify, out)
        return EXIT_OK if all(r.ok for r in results) else EXIT_INVARIANT

    if not (args.input or args.preset):
        print("thinloop: one of --input or --preset is required (or use --verify)", file=err)
        return EXIT_INVALID
    try:
        A = parse_algebra(args.input, preset=False) if args.input else parse_algebra(args.preset, preset=True)
        if args.emit_json:
            out.write(dumps_algebra(A))
            return EXIT_OK
        if not args.model:
            raise DocumentError("--model is required")
        coeff = Coefficients.parse(args.coeff)
        rows = run(args.model, A, args.max_degree, coeff)
    except DifferentialSquareError as e:
        print(f"thinloop: internal invariant violated: {e}", file=err)
        return EXIT_INVARIANT
    except AlgebraValidationError as e:
        print(f"thinloop: invalid algebra ({e.kind}): {e}", file=err)
        return EXIT_INVALID
    except (DocumentError, DegreeOutOfRange, ValueError) as e:
        print(f"thinloop: {e}", file=err)
        return EXIT_INVALID
    out.write(render_markdown(rows, coeff) if args.markdown else render_tsv(rows, coeff))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
