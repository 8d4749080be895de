"""Tests for gates, circuits and cost metrics."""

import pytest

from clifford_sat.circuit.models import CliffordCircuit, Gate, GateKind, clifford_gates, gate_count, two_qubit_count


class TestGate:
    """Test Gate."""

    def test_constructors(self):
        """Test the named constructors and text rendering."""
        assert str(Gate.h(0)) == "h 0"
        assert str(Gate.s(2)) == "s 2"
        assert str(Gate.cnot(1, 0)) == "cx 1 0"
        assert Gate.cnot(1, 0).qubits == (1, 0)
        assert Gate.cnot(1, 0).is_two_qubit
        assert not Gate.h(1).is_two_qubit

    def test_cnot_operands(self):
        """Test that CNOT needs two distinct qubits."""
        with pytest.raises(ValueError):
            Gate(kind=GateKind.CNOT, q0=0, q1=0)
        with pytest.raises(ValueError):
            Gate(kind=GateKind.CNOT, q0=0)

    def test_single_qubit_operands(self):
        """Test that H and S reject a second operand and negative indices."""
        with pytest.raises(ValueError):
            Gate(kind=GateKind.H, q0=0, q1=1)
        with pytest.raises(ValueError):
            Gate.s(-1)

    def test_frozen_and_hashable(self):
        """Test value semantics."""
        assert Gate.h(0) == Gate.h(0)
        assert len({Gate.h(0), Gate.h(0), Gate.s(0)}) == 2


class TestCliffordCircuit:
    """Test CliffordCircuit and the cost metrics."""

    def test_counts(self):
        """Test total, two-qubit and single-qubit counts."""
        circuit = CliffordCircuit(num_qubits=2, gates=(Gate.h(0), Gate.cnot(0, 1), Gate.h(0), Gate.h(1)))
        assert gate_count(circuit) == 4
        assert two_qubit_count(circuit) == 1
        assert circuit.single_qubit_count() == 3
        assert len(circuit) == 4

    def test_empty(self):
        """Test the empty circuit."""
        circuit = CliffordCircuit(num_qubits=3)
        assert gate_count(circuit) == 0
        assert two_qubit_count(circuit) == 0

    def test_qubit_range_checked(self):
        """Test that gates must fit the register."""
        with pytest.raises(ValueError, match="outside"):
            CliffordCircuit(num_qubits=1, gates=(Gate.h(1),))
        with pytest.raises(ValueError):
            CliffordCircuit(num_qubits=0)

    def test_then(self):
        """Test concatenation."""
        a = CliffordCircuit(num_qubits=2, gates=(Gate.h(0),))
        b = CliffordCircuit(num_qubits=2, gates=(Gate.cnot(0, 1),))
        assert a.then(b).gates == (Gate.h(0), Gate.cnot(0, 1))
        with pytest.raises(ValueError):
            a.then(CliffordCircuit(num_qubits=3))


class TestCliffordGates:
    """Test clifford_gates."""

    @pytest.mark.parametrize("n", [1, 2, 3, 5])
    def test_size(self, n):
        """Test n H gates, n S gates and n(n-1) ordered CNOTs."""
        gates = clifford_gates(n)
        assert len(gates) == n + n + n * (n - 1)
        assert len(set(gates)) == len(gates)

    def test_order(self):
        """Test the fixed enumeration order."""
        assert [str(g) for g in clifford_gates(2)] == ["h 0", "h 1", "s 0", "s 1", "cx 0 1", "cx 1 0"]
