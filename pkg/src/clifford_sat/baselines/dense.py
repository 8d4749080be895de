"""Dense-matrix oracle for the tableau update rules.

Matrices use the tensor order qubit 0 (x) qubit 1 (x) ..., so qubit 0 is the
most significant index bit.
"""

import itertools
from functools import reduce
from typing import Dict, Optional

import numpy as np

from ..circuit.models import CliffordCircuit, Gate, GateKind
from ..exceptions import OracleError
from ..stabilizer.models import PauliRow
from ..stabilizer.tableau import Tableau

MAX_DENSE_QUBITS = 3

_I = np.eye(2, dtype=complex)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
_S = np.array([[1, 0], [0, 1j]], dtype=complex)
_P0 = np.array([[1, 0], [0, 0]], dtype=complex)
_P1 = np.array([[0, 0], [0, 1]], dtype=complex)

_LETTER_MATRICES = {(False, False): _I, (True, False): _X, (True, True): _Y, (False, True): _Z}


def _check_size(n: int) -> None:
    if not 1 <= n <= MAX_DENSE_QUBITS:
        raise ValueError(f"dense oracle supports 1..{MAX_DENSE_QUBITS} qubits, got {n}")


def _embed(ops: Dict[int, np.ndarray], n: int) -> np.ndarray:
    return reduce(np.kron, [ops.get(q, _I) for q in range(n)])


def pauli_matrix(row: PauliRow) -> np.ndarray:
    """Signed Pauli string as a 2^n x 2^n matrix."""
    n = row.num_qubits
    _check_size(n)
    matrix = _embed({q: _LETTER_MATRICES[(row.x[q], row.z[q])] for q in range(n)}, n)
    return -matrix if row.r else matrix


def gate_unitary(gate: Gate, n: int) -> np.ndarray:
    """Unitary of ``gate`` on ``n`` qubits; CNOT is built from control projectors."""
    _check_size(n)
    if gate.kind is GateKind.H:
        return _embed({gate.q0: _H}, n)
    if gate.kind is GateKind.S:
        return _embed({gate.q0: _S}, n)
    if gate.q1 is None:
        raise ValueError(f"malformed gate {gate!r}")
    return _embed({gate.q0: _P0}, n) + _embed({gate.q0: _P1, gate.q1: _X}, n)


def _match_pauli(matrix: np.ndarray, n: int) -> Optional[PauliRow]:
    dim = 2**n
    for letters in itertools.product(_LETTER_MATRICES, repeat=n):
        x = tuple(bits[0] for bits in letters)
        z = tuple(bits[1] for bits in letters)
        candidate = pauli_matrix(PauliRow(x=x, z=z, r=False))
        overlap = np.trace(candidate.conj().T @ matrix) / dim
        if np.isclose(overlap, 1.0):
            return PauliRow(x=x, z=z, r=False)
        if np.isclose(overlap, -1.0):
            return PauliRow(x=x, z=z, r=True)
    return None


def dense_conjugate(gate: Gate, pauli: PauliRow) -> PauliRow:
    """Compute U P U^dagger with explicit matrices and read it back as a signed Pauli string.

    Raises:
        ValueError: For more than ``MAX_DENSE_QUBITS`` qubits.
        OracleError: If the product is not a signed Pauli string.
    """
    n = pauli.num_qubits
    unitary = gate_unitary(gate, n)
    conjugated = unitary @ pauli_matrix(pauli) @ unitary.conj().T
    result = _match_pauli(conjugated, n)
    if result is None:
        raise OracleError(f"{gate} maps {pauli} outside the signed Pauli group")
    return result


def dense_statevector(circuit: CliffordCircuit) -> np.ndarray:
    """State vector of ``circuit`` applied to |0...0>."""
    n = circuit.num_qubits
    _check_size(n)
    state = np.zeros(2**n, dtype=complex)
    state[0] = 1.0
    for gate in circuit.gates:
        state = gate_unitary(gate, n) @ state
    return state


def dense_stabilizes(tableau: Tableau, state: np.ndarray) -> bool:
    """Whether every stabilizer row of ``tableau`` fixes ``state``."""
    return all(np.allclose(pauli_matrix(row) @ state, state) for row in tableau.stabilizer_part().rows)
