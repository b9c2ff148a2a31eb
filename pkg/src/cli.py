"""
Command-line front end for the decomposition engine.

Commands: info, roots, weights, omega, decompose, check.
"""
import argparse
import json
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from colorama import Fore, Style, init

from config import settings
from src.decomp import classify_orbits, decompose, schur_scalar_d, verify_decomposition, weyl_dimension
from src.errors import DecompositionError, EigenvalueOutsideField, ParseError, ValidationError
from src.exactnum import format_scalar, parse_scalar
from src.liealg import CartanSubalgebra, LieAlgebra, RootData, format_weight, verify_semisimple
from src.report import (emit_report, format_report_text, load_document, omega_to_dict,
                        parse_matrix_list, report_to_dict, roots_to_dict, save_report)
from src.rep import (ConjugationTwist, Representation, WeightVector, commutant_dimension,
                     highest_weights, omega_rho)
from src.repzoo import build_algebra, build_rep, parse_cartan

COMMANDS = ("info", "roots", "weights", "omega", "decompose", "check")

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_INVALID = 2
EXIT_UNSUPPORTED_FIELD = 3


@dataclass
class JobSpec:
    command: str
    algebra: Optional[str] = None
    cartan: Optional[str] = None
    rep: Optional[str] = None
    output: str = "text"
    verify: bool = True
    seed_order: str = "default"
    input_path: Optional[Path] = None
    save: bool = False
    verbose: bool = False


def print_header(text):
    """Print a formatted header."""
    print(f"\n{Fore.CYAN}{'=' * 80}")
    print(f"{text}")
    print(f"{'=' * 80}{Style.RESET_ALL}\n")


def print_success(text):
    print(f"{Fore.GREEN}{text}{Style.RESET_ALL}")


def print_note(text):
    print(f"{Fore.YELLOW}{text}{Style.RESET_ALL}")


def print_error(text):
    print(f"{Fore.RED}❌ {text}{Style.RESET_ALL}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Decompose real representations of real semisimple Lie algebras into real irreducibles"
    )
    parser.add_argument("command", choices=COMMANDS, help="What to compute")
    parser.add_argument("--algebra", help="so(p,q), so(n), sl(n) or su(2) (default from DECOMP_DEFAULT_ALGEBRA)")
    parser.add_argument("--cartan", help="basis indices like 'e1,e6' or ';'-separated coefficient vectors")
    parser.add_argument("--rep", help="defining, adjoint, end-left, poly:d, tensor2 or realified")
    parser.add_argument("--out", choices=settings.OUTPUT_FORMATS, default=None, help="text or json output")
    parser.add_argument("--verify", choices=settings.VERIFY_MODES, default=None, help="run verification checks")
    parser.add_argument("--seed-order", choices=settings.SEED_ORDERS, default=None,
                        help="order in which highest-weight vectors are used")
    parser.add_argument("--in", dest="input_path", type=Path, help="JSON file with generators and Cartan")
    parser.add_argument("--save", action="store_true", help="also write the JSON result to the report directory")
    parser.add_argument("-v", "--verbose", action="store_true", help="print step progress")
    return parser


def parse_args(argv: Optional[Sequence[str]] = None) -> JobSpec:
    args = build_parser().parse_args(argv)
    return JobSpec(
        command=args.command,
        algebra=args.algebra,
        cartan=args.cartan,
        rep=args.rep,
        output=args.out or settings.DECOMP_OUTPUT_FORMAT,
        verify=(args.verify or settings.DECOMP_VERIFY) == "on",
        seed_order=args.seed_order or settings.DECOMP_SEED_ORDER,
        input_path=args.input_path,
        save=args.save,
        verbose=args.verbose,
    )


def _cartan_from_document(g: LieAlgebra, payload) -> CartanSubalgebra:
    if payload is None:
        return parse_cartan(g, None)
    if isinstance(payload, str):
        return parse_cartan(g, payload)
    if not isinstance(payload, list) or not payload:
        raise ParseError("'cartan' must be a string or a non-empty list")
    if all(isinstance(k, int) for k in payload):
        return parse_cartan(g, ",".join(f"e{k}" for k in payload))
    vectors = []
    for item in payload:
        if not isinstance(item, list) or len(item) != g.dim:
            raise ParseError(f"Cartan vector must have {g.dim} entries")
        vectors.append(tuple(parse_scalar(x if isinstance(x, str) else int(x)) for x in item))
    return CartanSubalgebra(g, vectors)


def resolve_job(spec: JobSpec) -> Tuple[LieAlgebra, CartanSubalgebra, Representation]:
    """Build the algebra, Cartan subalgebra and representation a job refers to."""
    if spec.input_path is not None:
        doc = load_document(spec.input_path)
        g = LieAlgebra(parse_matrix_list(int(doc["n"]), doc["generators"]), name=doc.get("name", "custom"))
        cartan = parse_cartan(g, spec.cartan) if spec.cartan else _cartan_from_document(g, doc.get("cartan"))
        rep_payload = doc.get("rep")
        if isinstance(rep_payload, dict):
            images = parse_matrix_list(int(rep_payload["n"]), rep_payload["generators"], what="rep.generators")
            rep = Representation(g, images, anti=bool(rep_payload.get("anti", False)),
                                 name=rep_payload.get("name", "custom rep"))
        else:
            rep = build_rep(g, spec.rep or rep_payload or "defining")
        return g, cartan, rep
    g = build_algebra(spec.algebra or settings.DECOMP_DEFAULT_ALGEBRA)
    cartan = parse_cartan(g, spec.cartan)
    rep = build_rep(g, spec.rep or "defining")
    return g, cartan, rep


def _vec(v) -> List[str]:
    return [format_scalar(x) for x in v]


def command_info(g, cartan, rep, spec) -> dict:
    return {
        "algebra": g.name,
        "dim": g.dim,
        "matrix_size": g.n,
        "semisimple": verify_semisimple(g),
        "cartan": [_vec(h) for h in cartan.elements],
        "representation": rep.name,
        "space_dim": rep.space_dim,
        "anti": rep.anti,
    }


def command_weights(g, cartan, rep, spec) -> dict:
    data = RootData.build(g, cartan, verbose=spec.verbose)
    isotypic = highest_weights(rep, data)
    twist = ConjugationTwist(omega_rho(rep, data))
    orbits = classify_orbits(isotypic, data, spec.seed_order)
    rows = []
    for comp in isotypic:
        theta = data.theta(comp.weight)
        schur = []
        if theta == comp.weight:
            schur = [format_scalar(schur_scalar_d(WeightVector(comp.weight, v), twist)) for v in comp.space.vectors]
        rows.append({
            "weight": _vec(comp.weight),
            "theta": _vec(theta),
            "multiplicity": comp.multiplicity,
            "weyl_dimension": weyl_dimension(comp.weight, data),
            "schur": schur,
            "vectors": [_vec(v) for v in comp.space.vectors],
        })
    return {
        "algebra": g.name,
        "representation": rep.name,
        "highest_weights": rows,
        "orbits": [[_vec(w) for w in o.weights] for o in orbits],
    }


def command_omega(g, cartan, rep, spec) -> dict:
    data = RootData.build(g, cartan, verbose=spec.verbose)
    payload = omega_to_dict(data)
    payload["omega_rho"] = [_vec(row) for row in omega_rho(rep, data).data]
    return payload


def command_decompose(g, cartan, rep, spec) -> dict:
    report = decompose(rep, cartan, seed_order=spec.seed_order, verify=spec.verify, verbose=spec.verbose)
    return {"report": report}


def command_check(g, cartan, rep, spec) -> dict:
    report = decompose(rep, cartan, seed_order=spec.seed_order, verify=False, verbose=spec.verbose)
    data = RootData.build(g, cartan)
    report.checks = verify_decomposition(report, rep, data)
    return {"report": report, "commutant_dimension": commutant_dimension(rep)}


HANDLERS = {
    "info": command_info,
    "roots": lambda g, cartan, rep, spec: roots_to_dict(RootData.build(g, cartan, verbose=spec.verbose)),
    "weights": command_weights,
    "omega": command_omega,
    "decompose": command_decompose,
    "check": command_check,
}


def _render_text(spec: JobSpec, result: dict):
    print_header(f"{spec.command.upper()}: {result.get('algebra', '')}".rstrip(": "))
    if "report" in result:
        print(format_report_text(result["report"]))
        if "commutant_dimension" in result:
            print(f"\nCommutant dimension: {result['commutant_dimension']}")
        return
    if spec.command == "roots":
        for r in result["roots"]:
            sign = "+" if r["positive"] else "-"
            simple = " simple" if r["simple"] else ""
            print(f"  {sign} ({', '.join(r['values'])}){simple}   conj -> ({', '.join(r['conjugate'])})")
        print("\nCartan matrix:")
        for row in result["cartan_matrix"]:
            print("  " + " ".join(row))
        return
    if spec.command == "weights":
        for row in result["highest_weights"]:
            d = f", d = {', '.join(row['schur'])}" if row["schur"] else ""
            print(f"  ({', '.join(row['weight'])})  Θ -> ({', '.join(row['theta'])})  "
                  f"mult {row['multiplicity']}, dim {row['weyl_dimension']}{d}")
        print(f"\nΘ-orbits: {len(result['orbits'])}")
        return
    if spec.command == "omega":
        print(f"Weyl word: {result['letters'] or 'empty'}")
        for label in ("omega_defining", "omega_adjoint", "omega_rho"):
            print(f"\n{label}:")
            for row in result[label]:
                print("  " + " ".join(row))
        return
    for key, value in result.items():
        print(f"  {key}: {value}")


def run(spec: JobSpec) -> int:
    """Execute one job; returns the process exit code."""
    try:
        g, cartan, rep = resolve_job(spec)
        result = HANDLERS[spec.command](g, cartan, rep, spec)
    except EigenvalueOutsideField as e:
        print_error(f"Unsupported field: {e}")
        return EXIT_UNSUPPORTED_FIELD
    except (ParseError, ValidationError) as e:
        print_error(str(e))
        return EXIT_INVALID
    except DecompositionError as e:
        print_error(f"{type(e).__name__}: {e}")
        return EXIT_INVALID

    payload = dict(result)
    if "report" in payload:
        payload["report"] = report_to_dict(payload["report"])

    if spec.output == "json":
        if "report" in result and len(result) == 1:
            print(emit_report(result["report"]))
        else:
            print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        _render_text(spec, result)

    if spec.save:
        path = save_report(payload, f"{spec.command}_{g.name}_{rep.name}")
        if spec.output == "text":
            print_success(f"\n✓ Saved to {path}")

    report = result.get("report")
    if report is not None and report.checks is not None and not report.checks.passed:
        if spec.output == "text":
            print_error("Verification failed")
        return EXIT_INVALID
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    init()
    try:
        spec = parse_args(argv)
    except SystemExit as e:
        return EXIT_INVALID if e.code else EXIT_OK
    try:
        return run(spec)
    except KeyboardInterrupt:
        print_note("\nCancelled.")
        return EXIT_UNEXPECTED
    except Exception as e:
        print_error(f"Unexpected error: {e}")
        return EXIT_UNEXPECTED
