"""Tests for the command-line interface."""

import json
import logging
from unittest.mock import patch

import pytest
from pysat.formula import CNF

from clifford_sat.cli import build_parser, load_target, main
from clifford_sat.exceptions import SynthesisError
from clifford_sat.stabilizer.models import TableauMode
from clifford_sat.stabilizer.tableau import Tableau

BELL_PREP = "qubits 2\nh 0\ncx 0 1\n"


@pytest.fixture(autouse=True)
def reset_package_logger():
    yield
    logger = logging.getLogger("clifford_sat")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    logger.setLevel(logging.NOTSET)


@pytest.fixture
def bell_file(tmp_path):
    path = tmp_path / "bell.tab"
    path.write_text("# Bell state\n+XX\n+ZZ\n")
    return path


class TestParser:
    """Test argument parsing."""

    def test_requires_command(self, capsys):
        """Test that a missing subcommand is a usage error."""
        assert main([]) == 1

    def test_unknown_option(self, capsys):
        """Test that unknown options exit with code 1."""
        assert main(["synth", "--target", "x", "--bogus"]) == 1
        assert "error" in capsys.readouterr().err

    def test_bad_choice(self, bell_file):
        """Test that invalid enum values are usage errors."""
        assert main(["synth", "--target", str(bell_file), "--objective", "depth"]) == 1

    def test_help(self, capsys):
        """Test --help exits cleanly."""
        assert main(["--help"]) == 0
        assert "synth" in capsys.readouterr().out

    def test_defaults(self):
        """Test the synth defaults."""
        args = build_parser().parse_args(["synth", "--target", "t.tab"])
        assert args.objective == "gates"
        assert args.strategy == "binary-search"
        assert args.match == "canonical"
        assert args.output is None
        assert args.verbose == 0


class TestLoadTarget:
    """Test target file detection."""

    def test_tableau_file(self, bell_file):
        """Test a tableau file is read as-is."""
        target, circuit = load_target(str(bell_file))
        assert target == Tableau.from_rows(["+XX", "+ZZ"])
        assert circuit is None

    def test_circuit_file(self, tmp_path):
        """Test a circuit file is simulated from the zero state."""
        path = tmp_path / "bell.circ"
        path.write_text("# prep\n" + BELL_PREP)
        target, circuit = load_target(str(path))
        assert target == Tableau.from_rows(["+XX", "+ZZ"])
        assert circuit.gate_count() == 2

    def test_circuit_file_unitary(self, tmp_path):
        """Test a circuit file read as a unitary."""
        path = tmp_path / "h.circ"
        path.write_text("qubits 1\nh 0\n")
        target, _ = load_target(str(path), TableauMode.UNITARY)
        assert target.mode is TableauMode.UNITARY
        assert target.num_rows == 2


class TestSimulateAndRandom:
    """Test the simulate and random commands."""

    def test_simulate(self, tmp_path, capsys):
        """Test the Bell preparation circuit."""
        path = tmp_path / "bell.circ"
        path.write_text(BELL_PREP)
        assert main(["simulate", str(path)]) == 0
        assert capsys.readouterr().out == "+XX\n+ZZ\n"

    def test_random_deterministic(self, capsys):
        """Test that the same seed gives the same tableau."""
        assert main(["random", "-n", "3", "--seed", "5"]) == 0
        first = capsys.readouterr().out
        assert main(["random", "-n", "3", "--seed", "5"]) == 0
        assert capsys.readouterr().out == first
        assert len(first.splitlines()) == 3

    def test_random_to_file(self, tmp_path):
        """Test writing a unitary tableau to a file."""
        out = tmp_path / "u.tab"
        assert main(["random", "-n", "2", "--unitary", "-o", str(out)]) == 0
        assert len(out.read_text().splitlines()) == 4


class TestSynth:
    """Test the synth command."""

    def test_bell(self, bell_file, tmp_path, capsys):
        """Test an optimal Bell circuit and its JSON summary line."""
        log = tmp_path / "runs.jsonl"
        assert main(["synth", "--target", str(bell_file), "--timeout", "60", "--log", str(log)]) == 0
        out = capsys.readouterr().out
        lines = out.splitlines()
        assert lines[0] == "qubits 2"
        assert len(lines) == 3
        record = json.loads(log.read_text().splitlines()[-1])
        assert record["status"] == "proven"
        assert record["total_gates"] == 2
        assert record["two_qubit_gates"] == 1
        assert record["n"] == 2
        assert record["objective"] == "gates"

    def test_summary_to_stderr(self, bell_file, capsys):
        """Test the summary goes to stderr without --log."""
        assert main(["synth", "--target", str(bell_file), "--objective", "two-qubit", "--timeout", "60"]) == 0
        record = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
        assert record["two_qubit_gates"] == 1
        assert record["objective"] == "two-qubit"

    def test_zero_state(self, tmp_path, capsys):
        """Test the zero state gives an empty circuit."""
        path = tmp_path / "zero.tab"
        path.write_text("+ZII\n+IZI\n+IIZ\n")
        out = tmp_path / "zero.circ"
        assert main(["synth", "--target", str(path), "-o", str(out)]) == 0
        assert out.read_text() == "qubits 3\n"

    def test_circuit_target(self, tmp_path, capsys):
        """Test re-synthesis of a redundant circuit file."""
        path = tmp_path / "long.circ"
        path.write_text("qubits 2\nh 0\nh 0\nh 0\ncx 0 1\ncx 1 0\ncx 1 0\n")
        assert main(["synth", "--target", str(path), "--timeout", "60"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "qubits 2"
        assert len(lines) == 3

    def test_dimacs_output(self, bell_file, tmp_path, capsys):
        """Test the final instance is written with its names sidecar."""
        cnf_path = tmp_path / "bell.cnf"
        assert main(["synth", "--target", str(bell_file), "--timeout", "60", "--dimacs", str(cnf_path)]) == 0
        cnf = CNF(from_file=str(cnf_path))
        assert cnf.clauses
        names = (tmp_path / "bell.cnf.names").read_text()
        assert "choice[0]:none\t" in names

    def test_malformed_tableau(self, tmp_path, capsys):
        """Test malformed input exits with code 2."""
        path = tmp_path / "bad.tab"
        path.write_text("+XQ\n+ZZ\n")
        assert main(["synth", "--target", str(path)]) == 2
        assert "error" in capsys.readouterr().err

    def test_anticommuting_tableau(self, tmp_path, capsys):
        """Test an invalid tableau exits with code 2."""
        path = tmp_path / "bad.tab"
        path.write_text("+XI\n+ZI\n")
        assert main(["synth", "--target", str(path)]) == 2

    def test_non_ascii_digit(self, tmp_path, capsys):
        """Test a superscript digit in a circuit header exits with code 2."""
        path = tmp_path / "bad.circ"
        path.write_text("qubits \u00b2\nh 0\n", encoding="utf-8")
        assert main(["synth", "--target", str(path)]) == 2
        assert "integer" in capsys.readouterr().err

    def test_missing_file(self, tmp_path, capsys):
        """Test a missing target exits with code 2."""
        assert main(["synth", "--target", str(tmp_path / "nope.tab")]) == 2

    def test_synthesis_failure(self, bell_file, capsys):
        """Test solver-side failures exit with code 3."""
        with patch("clifford_sat.cli.commands.synthesize", side_effect=SynthesisError("gave up")):
            assert main(["synth", "--target", str(bell_file)]) == 3
        assert "gave up" in capsys.readouterr().err

    def test_bad_backend(self, bell_file, capsys):
        """Test a malformed backend selector is a usage error."""
        assert main(["synth", "--target", str(bell_file), "--backend", "nope"]) == 1


class TestOracleAndEncode:
    """Test the oracle and encode commands."""

    def test_oracle(self, bell_file, capsys):
        """Test the minimal gate count and witness."""
        assert main(["oracle", "--target", str(bell_file), "--witness"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "2"
        assert lines[1] == "qubits 2"
        assert len(lines) == 4

    def test_oracle_two_qubit(self, bell_file, capsys):
        """Test the minimal CNOT count."""
        assert main(["oracle", "--target", str(bell_file), "--two-qubit"]) == 0
        assert capsys.readouterr().out == "1\n"

    def test_oracle_out_of_reach(self, bell_file, capsys):
        """Test a bound below the optimum exits with code 3."""
        assert main(["oracle", "--target", str(bell_file), "--max-gates", "1"]) == 3

    def test_encode(self, bell_file, tmp_path, capsys):
        """Test the written DIMACS reads back with an independent parser."""
        out = tmp_path / "t2.cnf"
        assert main(["encode", "--target", str(bell_file), "-T", "2", "-K", "1", "-o", str(out)]) == 0
        cnf = CNF(from_file=str(out))
        header = out.read_text().splitlines()[0].split()
        assert header[:2] == ["p", "cnf"]
        assert len(cnf.clauses) == int(header[3])
        assert "variables" in capsys.readouterr().err
        assert (tmp_path / "t2.cnf.names").exists()
