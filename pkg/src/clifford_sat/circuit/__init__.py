"""Clifford circuit representation, cost metrics and text format."""

from .io import parse_circuit, serialize_circuit
from .models import CliffordCircuit, Gate, GateKind, clifford_gates, gate_count, two_qubit_count

__all__ = [
    "CliffordCircuit",
    "Gate",
    "GateKind",
    "clifford_gates",
    "gate_count",
    "parse_circuit",
    "serialize_circuit",
    "two_qubit_count",
]
