"""Tests for the circuit text format."""

import numpy as np
import pytest

from clifford_sat.circuit.io import parse_circuit, serialize_circuit
from clifford_sat.circuit.models import CliffordCircuit, Gate, clifford_gates
from clifford_sat.exceptions import ParseError

BELL_PREP = "# Bell-state preparation\nqubits 2\nh 0\ncx 0 1\n"


class TestParseCircuit:
    """Test parse_circuit."""

    def test_bell_preparation(self):
        """Test a small commented circuit."""
        circuit = parse_circuit(BELL_PREP)
        assert circuit.num_qubits == 2
        assert circuit.gates == (Gate.h(0), Gate.cnot(0, 1))

    def test_mnemonics_case_insensitive(self):
        """Test uppercase mnemonics and the cnot alias."""
        circuit = parse_circuit("QUBITS 2\nH 1\nS 0\nCNOT 1 0  # trailing comment\n")
        assert circuit.gates == (Gate.h(1), Gate.s(0), Gate.cnot(1, 0))

    def test_header_only(self):
        """Test the empty circuit."""
        assert parse_circuit("qubits 3\n") == CliffordCircuit(num_qubits=3)

    def test_non_clifford_rejected(self):
        """Test that T gates are rejected with their position."""
        with pytest.raises(ParseError, match="unknown gate 't'") as exc_info:
            parse_circuit("qubits 1\nt 0\n")
        assert (exc_info.value.line, exc_info.value.column) == (2, 1)

    @pytest.mark.parametrize(
        "text,fragment",
        [
            ("h 0\n", "header"),
            ("", "header"),
            ("qubits 2\nqubits 2\n", "duplicate"),
            ("qubits 0\n", "at least 1"),
            ("qubits two\n", "integer"),
            ("qubits 2\nh 2\n", "out of range"),
            ("qubits 2\ncx 0 0\n", "control and target"),
            ("qubits 2\ncx 0\n", "operand"),
            ("qubits 2\nh 0 1\n", "operand"),
            ("qubits 2\nh -1\n", "integer"),
            ("qubits \u00b2\n", "integer"),
            ("qubits 2\nh \u0661\n", "integer"),
        ],
    )
    def test_errors(self, text, fragment):
        """Test malformed inputs."""
        with pytest.raises(ParseError, match=fragment):
            parse_circuit(text)

    def test_out_of_range_column(self):
        """Test that the column points at the offending operand."""
        with pytest.raises(ParseError) as exc_info:
            parse_circuit("qubits 2\ncx 0  7\n")
        assert (exc_info.value.line, exc_info.value.column) == (2, 7)


class TestSerializeCircuit:
    """Test serialize_circuit."""

    def test_canonical_text(self):
        """Test lowercase output without comments."""
        circuit = parse_circuit("qubits 2\nH 0\nCNOT 0 1\n")
        assert serialize_circuit(circuit) == "qubits 2\nh 0\ncx 0 1\n"

    def test_round_trip(self):
        """Test parse(serialize(c)) == c."""
        circuit = CliffordCircuit(
            num_qubits=3, gates=(Gate.s(2), Gate.cnot(2, 0), Gate.h(1), Gate.cnot(0, 1), Gate.s(2))
        )
        assert parse_circuit(serialize_circuit(circuit)) == circuit

    def test_random_round_trips(self):
        """Test parse(serialize(c)) == c on a thousand random circuits."""
        rng = np.random.default_rng(31)
        for _ in range(1000):
            n = int(rng.integers(1, 6))
            gates = clifford_gates(n)
            picks = rng.integers(len(gates), size=int(rng.integers(0, 30)))
            circuit = CliffordCircuit(num_qubits=n, gates=tuple(gates[int(i)] for i in picks))
            assert parse_circuit(serialize_circuit(circuit)) == circuit
