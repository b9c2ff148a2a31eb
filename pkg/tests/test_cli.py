"""
Tests for the command-line front end: commands, output formats and exit codes.
"""
import json
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from config import settings
from src.cli import EXIT_INVALID, EXIT_OK, EXIT_UNSUPPORTED_FIELD, main, parse_args

SO3_GENERATORS = [
    [[0, 1, 0], [-1, 0, 0], [0, 0, 0]],
    [[0, 0, 1], [0, 0, 0], [-1, 0, 0]],
    [[0, 0, 0], [0, 0, 1], [0, -1, 0]],
]


def run_json(capsys, *argv):
    code = main(list(argv) + ["--out", "json"])
    out = capsys.readouterr().out
    return code, json.loads(out) if code == EXIT_OK else out


def test_parse_args_defaults():
    spec = parse_args(["decompose", "--algebra", "so(3)"])
    assert spec.command == "decompose"
    assert spec.output == settings.DECOMP_OUTPUT_FORMAT
    assert spec.seed_order == settings.DECOMP_SEED_ORDER
    assert spec.verify == (settings.DECOMP_VERIFY == "on")
    assert parse_args(["check", "--verify", "off"]).verify is False


def test_decompose_json(capsys):
    code, doc = run_json(capsys, "decompose", "--algebra", "so(3)", "--cartan", "e1", "--rep", "poly:2")
    assert code == EXIT_OK
    assert sorted(c["dim"] for c in doc["components"]) == [1, 5]
    assert doc["checks"]["passed"] is True


def test_roots_json(capsys):
    code, doc = run_json(capsys, "roots", "--algebra", "so(2,2)", "--cartan", "e2,e5")
    assert code == EXIT_OK
    assert len(doc["roots"]) == 4
    assert sum(r["positive"] for r in doc["roots"]) == 2


def test_weights_and_omega_json(capsys):
    code, doc = run_json(capsys, "weights", "--algebra", "so(3)", "--cartan", "e1", "--rep", "poly:2")
    assert code == EXIT_OK
    assert sorted(row["weyl_dimension"] for row in doc["highest_weights"]) == [1, 5]
    assert all(row["schur"] == ["1"] for row in doc["highest_weights"])

    code, doc = run_json(capsys, "omega", "--algebra", "so(3)", "--cartan", "e1")
    assert code == EXIT_OK
    assert doc["omega_rho"] == doc["omega_defining"]


def test_info_and_check_text(capsys):
    assert main(["info", "--algebra", "so(1,3)", "--out", "text"]) == EXIT_OK
    assert "semisimple: True" in capsys.readouterr().out
    assert main(["check", "--algebra", "so(3)", "--cartan", "e1", "--rep", "poly:2", "--out", "text"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "Commutant dimension: 2" in out
    assert "Checks: passed" in out


def test_input_document(tmp_path, capsys):
    """Generators, Cartan and representation read from a JSON file."""
    doc = {"name": "so3-custom", "n": 3, "generators": SO3_GENERATORS, "cartan": [1], "rep": "poly:2"}
    path = tmp_path / "so3.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    code, report = run_json(capsys, "decompose", "--in", str(path))
    assert code == EXIT_OK
    assert report["algebra"] == "so3-custom"
    assert sorted(c["dim"] for c in report["components"]) == [1, 5]


def test_save_writes_a_report(tmp_path, capsys, monkeypatch):
    monkeypatch.setattr(settings, "DECOMP_REPORT_DIR", tmp_path / "reports")
    code = main(["decompose", "--algebra", "so(3)", "--rep", "defining", "--save", "--out", "json"])
    capsys.readouterr()
    assert code == EXIT_OK
    saved = list((tmp_path / "reports").glob("*.json"))
    assert len(saved) == 1
    assert json.loads(saved[0].read_text(encoding="utf-8"))["report"]["space_dim"] == 3


def test_exit_codes(capsys):
    """2 for bad input, 3 when eigenvalues leave Q(i), 0 for --help."""
    test_cases = [
        (["decompose", "--algebra", "g2"], EXIT_INVALID),
        (["decompose", "--algebra", "so(3)", "--rep", "poly:x"], EXIT_INVALID),
        (["decompose", "--algebra", "so(3)", "--cartan", "e1,e2"], EXIT_INVALID),
        (["frobnicate"], EXIT_INVALID),
        (["roots", "--algebra", "sl(2)", "--cartan", "1,2,0"], EXIT_UNSUPPORTED_FIELD),
        (["decompose", "--algebra", "sl(2)", "--cartan", "1,2,0"], EXIT_UNSUPPORTED_FIELD),
        (["--help"], EXIT_OK),
    ]
    for argv, expected in test_cases:
        assert main(argv) == expected, argv
        capsys.readouterr()


if __name__ == "__main__":
    print("Run with: pytest tests/test_cli.py")
