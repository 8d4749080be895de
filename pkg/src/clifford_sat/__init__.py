"""clifford-sat - gate-count-optimal Clifford circuit synthesis from stabilizer tableaus via SAT."""

from .baselines import baseline_synthesize, bfs_optimal
from .circuit import CliffordCircuit, Gate, GateKind, parse_circuit, serialize_circuit
from .encoding import MatchMode, SynthesisInstance, encode, extract_circuit
from .exceptions import CliffordSatError
from .stabilizer import PauliRow, Tableau, TableauMode, identity_tableau, parse_tableau, random_tableau, simulate
from .synthesis import (
    Objective,
    Optimality,
    SynthesisConfig,
    SynthesisResult,
    synthesize,
    synthesize_min_gates,
    synthesize_min_two_qubit,
)

__all__ = [
    "CliffordCircuit",
    "CliffordSatError",
    "Gate",
    "GateKind",
    "MatchMode",
    "Objective",
    "Optimality",
    "PauliRow",
    "SynthesisConfig",
    "SynthesisInstance",
    "SynthesisResult",
    "Tableau",
    "TableauMode",
    "baseline_synthesize",
    "bfs_optimal",
    "encode",
    "extract_circuit",
    "identity_tableau",
    "parse_circuit",
    "parse_tableau",
    "random_tableau",
    "serialize_circuit",
    "simulate",
    "synthesize",
    "synthesize_min_gates",
    "synthesize_min_two_qubit",
]
