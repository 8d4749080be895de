"""Non-SAT comparators and ground-truth oracles.

This package contains:
- baseline_synthesize: Gaussian-elimination state preparation (fallback upper bound)
- BfsDatabase / bfs_optimal / bfs_min_two_qubit: exhaustive optimality oracles for n <= 3
- dense_conjugate / dense_statevector: explicit-matrix checks of the tableau rules
"""

from .bfs import MAX_BFS_GATES, MAX_BFS_QUBITS, BfsDatabase, BfsEntry, bfs_min_two_qubit, bfs_optimal
from .dense import MAX_DENSE_QUBITS, dense_conjugate, dense_stabilizes, dense_statevector, gate_unitary, pauli_matrix
from .gaussian import baseline_synthesize, peephole

__all__ = [
    "MAX_BFS_GATES",
    "MAX_BFS_QUBITS",
    "MAX_DENSE_QUBITS",
    "BfsDatabase",
    "BfsEntry",
    "baseline_synthesize",
    "bfs_min_two_qubit",
    "bfs_optimal",
    "dense_conjugate",
    "dense_stabilizes",
    "dense_statevector",
    "gate_unitary",
    "pauli_matrix",
    "peephole",
]
