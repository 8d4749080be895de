"""Optimal synthesis driver.

This package contains:
- SynthesisConfig / SynthesisResult: job settings and certified results
- find_initial_limit: geometric probing for a feasible time-step limit
- synthesize_min_gates / synthesize_min_two_qubit: the two optimization objectives
- synthesize / synthesize_circuit: objective dispatch and circuit re-synthesis
"""

from .models import Objective, Optimality, SolverCall, Strategy, SynthesisConfig, SynthesisResult
from .optimizer import (
    find_initial_limit,
    synthesize,
    synthesize_circuit,
    synthesize_min_gates,
    synthesize_min_two_qubit,
)

__all__ = [
    "Objective",
    "Optimality",
    "SolverCall",
    "Strategy",
    "SynthesisConfig",
    "SynthesisResult",
    "find_initial_limit",
    "synthesize",
    "synthesize_circuit",
    "synthesize_min_gates",
    "synthesize_min_two_qubit",
]
