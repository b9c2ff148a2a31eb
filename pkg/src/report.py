"""
JSON and text rendering of decomposition results, and the JSON input format.

Scalars are written in the exactnum text form ("1/2", "3-1/2i",
"(0)+(1)*sqrt(2)"), so documents survive a round trip exactly.
"""
import json
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from config import settings
from src.decomp import CheckSummary, DecompositionReport, Orbit, RealComponent
from src.errors import DecompositionError, ParseError
from src.exactnum import as_rat, format_scalar, parse_scalar
from src.liealg import RootData, format_weight
from src.linalg import Mat, Subspace

REPORT_FORMAT_VERSION = 1


def _vec(v: Sequence) -> List[str]:
    return [format_scalar(x) for x in v]


def _unvec(items: Sequence) -> tuple:
    return tuple(parse_scalar(x) for x in items)


def _matrix(m: Mat) -> List[List[str]]:
    return [_vec(row) for row in m.data]


def component_to_dict(comp: RealComponent) -> Dict[str, Any]:
    return {
        "dim": comp.dim,
        "case": comp.case_tag,
        "weights": [_vec(w) for w in comp.weights],
        "basis": [_vec(v) for v in comp.basis.vectors],
        "seeds": [_vec(v) for v in comp.seed_vectors],
        "d": None if comp.d is None else format_scalar(comp.d),
        "notes": list(comp.notes),
    }


def orbit_to_dict(orbit: Orbit) -> Dict[str, Any]:
    return {
        "weights": [_vec(w) for w in orbit.weights],
        "length": orbit.length,
        "multiplicity": orbit.multiplicity,
        "schur": [format_scalar(d) for d in orbit.schur],
    }


def report_to_dict(report: DecompositionReport) -> Dict[str, Any]:
    checks = None
    if report.checks is not None:
        checks = {
            "passed": report.checks.passed,
            "results": dict(report.checks.results),
            "failures": list(report.checks.failures),
        }
    return {
        "format_version": REPORT_FORMAT_VERSION,
        "algebra": report.algebra,
        "representation": report.representation,
        "space_dim": report.space_dim,
        "omega_word": {"letters": list(report.word), "values": [_vec(w) for w in report.word_values]},
        "orbits": [orbit_to_dict(o) for o in report.orbits],
        "components": [component_to_dict(c) for c in report.components],
        "checks": checks,
    }


def emit_report(report: DecompositionReport) -> str:
    return json.dumps(report_to_dict(report), indent=2, ensure_ascii=False)


def parse_report(text: str) -> DecompositionReport:
    """Inverse of emit_report."""
    try:
        doc = json.loads(text)
        n = doc["space_dim"]
        components = [
            RealComponent(
                basis=Subspace(n, [_unvec(v) for v in c["basis"]]),
                case_tag=c["case"],
                weights=[_unvec(w) for w in c["weights"]],
                seed_vectors=[_unvec(v) for v in c["seeds"]],
                d=None if c["d"] is None else as_rat(parse_scalar(c["d"])),
                notes=list(c.get("notes", [])),
            )
            for c in doc["components"]
        ]
        orbits = [
            Orbit(
                weights=tuple(_unvec(w) for w in o["weights"]),
                multiplicity=o["multiplicity"],
                schur=[as_rat(parse_scalar(d)) for d in o.get("schur", [])],
            )
            for o in doc["orbits"]
        ]
        checks = None
        if doc.get("checks") is not None:
            checks = CheckSummary(results=dict(doc["checks"]["results"]),
                                  failures=list(doc["checks"]["failures"]))
        return DecompositionReport(
            algebra=doc["algebra"],
            representation=doc["representation"],
            space_dim=n,
            components=components,
            orbits=orbits,
            word=list(doc["omega_word"]["letters"]),
            word_values=[_unvec(w) for w in doc["omega_word"]["values"]],
            checks=checks,
        )
    except json.JSONDecodeError as e:
        raise ParseError(f"Report is not valid JSON: {e}") from e
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, DecompositionError):
            raise
        raise ParseError(f"Malformed report document: {e}") from e


def format_report_text(report: DecompositionReport) -> str:
    lines = [
        f"Algebra: {report.algebra}",
        f"Representation: {report.representation} (dim {report.space_dim})",
        f"Weyl word: {[k + 1 for k in report.word] or 'empty'}",
        "",
        "Θ-orbits:",
    ]
    for orbit in report.orbits:
        weights = " <-> ".join(format_weight(w) for w in orbit.weights)
        extra = f", d = {', '.join(str(d) for d in orbit.schur)}" if orbit.schur else ""
        lines.append(f"  {weights}  (length {orbit.length}, multiplicity {orbit.multiplicity}{extra})")
    lines.append("")
    lines.append(f"Components ({' + '.join(str(d) for d in report.dims)} = {sum(report.dims)}):")
    for idx, comp in enumerate(report.components, 1):
        weights = ", ".join(format_weight(w) for w in comp.weights)
        d = f", d = {comp.d}" if comp.d is not None else ""
        lines.append(f"  [{idx}] dim {comp.dim}, case {comp.case_tag}, weight {weights}{d}")
        for v in comp.basis.vectors:
            lines.append("      " + " ".join(_vec(v)))
        for note in comp.notes:
            lines.append(f"      note: {note}")
    if report.checks is not None:
        lines.append("")
        lines.append("Checks: " + ("passed" if report.checks.passed else "FAILED"))
        for name, ok in report.checks.results.items():
            lines.append(f"  {'✓' if ok else '✗'} {name}")
        for failure in report.checks.failures:
            lines.append(f"  Warning: {failure}")
    return "\n".join(lines)


def roots_to_dict(data: RootData) -> Dict[str, Any]:
    simple = {r.values for r in data.simples}
    return {
        "algebra": data.algebra.name,
        "cartan": [_vec(h) for h in data.cartan.elements],
        "roots": [
            {"values": _vec(r.values), "positive": r.positive, "simple": r.values in simple,
             "conjugate": _vec(data.permutation[r.values])}
            for r in data.roots
        ],
        "cartan_matrix": [_vec(row) for row in data.cartan_matrix()],
    }


def omega_to_dict(data: RootData) -> Dict[str, Any]:
    return {
        "algebra": data.algebra.name,
        "letters": [k + 1 for k in data.word.letters],
        "letter_values": [_vec(w) for w in data.word.letter_values],
        "omega_defining": _matrix(data.word.omega_defining),
        "omega_adjoint": _matrix(data.word.omega_adjoint),
    }


def save_report(payload: Dict[str, Any], stem: str, directory: Optional[Path] = None) -> Path:
    """Write a JSON payload into the report directory; returns the file path."""
    directory = directory or settings.ensure_report_directory()
    directory.mkdir(parents=True, exist_ok=True)
    safe = "".join(ch if ch.isalnum() else "_" for ch in stem).strip("_").lower()
    path = directory / f"{safe}_{datetime.now().strftime('%Y%m%d_%H%M%S')}.json"
    with open(path, "w", encoding="utf-8") as f:
        json.dump(payload, f, indent=2, ensure_ascii=False)
    return path


# input documents

def parse_matrix_list(n: int, payload: Any, what: str = "generators") -> List[Mat]:
    """A list of n×n matrices whose entries are scalar strings or integers."""
    if not isinstance(payload, list) or not payload:
        raise ParseError(f"'{what}' must be a non-empty list of matrices")
    matrices = []
    for k, rows in enumerate(payload, 1):
        if not isinstance(rows, list) or len(rows) != n or any(not isinstance(r, list) or len(r) != n for r in rows):
            raise ParseError(f"{what}[{k}] is not a {n}x{n} matrix")
        matrices.append(Mat([[parse_scalar(x) if isinstance(x, str) else parse_scalar(int(x)) for x in r] for r in rows]))
    return matrices


def load_document(path: Path) -> Dict[str, Any]:
    try:
        with open(path, "r", encoding="utf-8") as f:
            doc = json.load(f)
    except FileNotFoundError as e:
        raise ParseError(f"Input file not found: {path}") from e
    except json.JSONDecodeError as e:
        raise ParseError(f"Input file {path} is not valid JSON: {e}") from e
    if not isinstance(doc, dict) or "n" not in doc or "generators" not in doc:
        raise ParseError(f"Input file {path} must be an object with 'n' and 'generators'")
    return doc
