"""Stabilizer tableau representation, Clifford update rules and simulation.

This package contains:
- Tableau / PauliRow: the tableau and row value types
- apply_h / apply_s / apply_cnot / simulate: Gottesman-Knill simulation
- rowsum / canonicalize / equivalent: generator-set algebra
- random_tableau: seeded random targets
- parse_tableau / serialize_tableau: the tableau text format
"""

from .io import parse_tableau, serialize_tableau
from .models import PauliRow, TableauMode
from .tableau import (
    Tableau,
    apply_cnot,
    apply_gate,
    apply_h,
    apply_s,
    canonicalize,
    equivalent,
    identity_tableau,
    random_tableau,
    rowsum,
    simulate,
)

__all__ = [
    "PauliRow",
    "Tableau",
    "TableauMode",
    "apply_cnot",
    "apply_gate",
    "apply_h",
    "apply_s",
    "canonicalize",
    "equivalent",
    "identity_tableau",
    "parse_tableau",
    "random_tableau",
    "rowsum",
    "serialize_tableau",
    "simulate",
]
