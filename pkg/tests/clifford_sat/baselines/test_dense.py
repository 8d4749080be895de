"""Cross-checks of the tableau rules against explicit matrices."""

import itertools

import numpy as np
import pytest

from clifford_sat.baselines.dense import (
    MAX_DENSE_QUBITS,
    dense_conjugate,
    dense_stabilizes,
    dense_statevector,
    gate_unitary,
    pauli_matrix,
)
from clifford_sat.circuit.models import CliffordCircuit, Gate, clifford_gates
from clifford_sat.stabilizer.models import PauliRow
from clifford_sat.stabilizer.tableau import Tableau, apply_gate_inplace, simulate


def _all_paulis(n):
    for letters in itertools.product("IXYZ", repeat=n):
        for sign in "+-":
            yield PauliRow.from_string(sign + "".join(letters))


def _tableau_conjugate(gate, row):
    x = np.array([row.x], dtype=np.uint8)
    z = np.array([row.z], dtype=np.uint8)
    r = np.array([row.r], dtype=np.uint8)
    apply_gate_inplace(x, z, r, gate)
    return PauliRow(x=tuple(bool(b) for b in x[0]), z=tuple(bool(b) for b in z[0]), r=bool(r[0]))


class TestDenseConjugate:
    """Test single conjugations."""

    def test_hadamard(self):
        """Test H X H = Z and H Y H = -Y."""
        assert str(dense_conjugate(Gate.h(0), PauliRow.from_string("X"))) == "+Z"
        assert str(dense_conjugate(Gate.h(0), PauliRow.from_string("Y"))) == "-Y"

    def test_phase(self):
        """Test S X S^dagger = Y and S Y S^dagger = -X."""
        assert str(dense_conjugate(Gate.s(0), PauliRow.from_string("X"))) == "+Y"
        assert str(dense_conjugate(Gate.s(0), PauliRow.from_string("Y"))) == "-X"

    def test_cnot(self):
        """Test CNOT maps YY to -XZ and XI to XX."""
        assert str(dense_conjugate(Gate.cnot(0, 1), PauliRow.from_string("YY"))) == "-XZ"
        assert str(dense_conjugate(Gate.cnot(0, 1), PauliRow.from_string("XI"))) == "+XX"

    @pytest.mark.parametrize("n", [1, 2])
    def test_tableau_rules_exhaustive(self, n):
        """Test every gate on every signed Pauli string agrees with the tableau update."""
        for gate in clifford_gates(n):
            for row in _all_paulis(n):
                assert _tableau_conjugate(gate, row) == dense_conjugate(gate, row), f"{gate} on {row}"

    def test_three_qubit_sample(self):
        """Test a sample of three-qubit conjugations."""
        for gate in (Gate.cnot(2, 0), Gate.h(1), Gate.s(2)):
            for row in _all_paulis(3):
                assert _tableau_conjugate(gate, row) == dense_conjugate(gate, row)

    def test_size_limit(self):
        """Test the qubit cap."""
        with pytest.raises(ValueError):
            pauli_matrix(PauliRow.from_string("X" * (MAX_DENSE_QUBITS + 1)))


class TestDenseStates:
    """Test state vectors and stabilizer checks."""

    def test_cnot_matrix(self):
        """Test the CNOT unitary with qubit 0 as the most significant bit."""
        expected = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)
        assert np.allclose(gate_unitary(Gate.cnot(0, 1), 2), expected)

    def test_bell_state(self):
        """Test H then CNOT prepares (|00> + |11>)/sqrt(2)."""
        state = dense_statevector(CliffordCircuit(num_qubits=2, gates=(Gate.h(0), Gate.cnot(0, 1))))
        assert np.allclose(state, np.array([1, 0, 0, 1]) / np.sqrt(2))
        assert dense_stabilizes(Tableau.from_rows(["+XX", "+ZZ"]), state)
        assert not dense_stabilizes(Tableau.from_rows(["-XX", "+ZZ"]), state)

    def test_random_circuits_match_state_vectors(self):
        """Test that simulated tableaus stabilize the dense state of random three-qubit circuits."""
        rng = np.random.default_rng(7)
        gates = clifford_gates(3)
        for _ in range(20):
            picks = rng.integers(0, len(gates), size=12)
            circuit = CliffordCircuit(num_qubits=3, gates=tuple(gates[int(i)] for i in picks))
            assert dense_stabilizes(simulate(circuit), dense_statevector(circuit))
