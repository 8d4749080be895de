"""SAT encoding of bounded Clifford synthesis.

This package contains:
- GateChoice / enumerate_choices: the per-step decision set
- SynthesisInstance: target, limits and matching mode
- encode / extract_circuit: CNF construction and model decoding
"""

from .choices import NONE_CHOICE, GateChoice, enumerate_choices
from .encoder import boundary_tableau, encode, extract_circuit
from .models import EncodedInstance, EncodingStats, MatchMode, SynthesisInstance, TableauColumn

__all__ = [
    "NONE_CHOICE",
    "EncodedInstance",
    "EncodingStats",
    "GateChoice",
    "MatchMode",
    "SynthesisInstance",
    "TableauColumn",
    "boundary_tableau",
    "encode",
    "enumerate_choices",
    "extract_circuit",
]
