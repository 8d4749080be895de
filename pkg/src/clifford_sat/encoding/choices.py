"""Per-time-step gate choices."""

from typing import List, NamedTuple, Optional

from ..circuit.models import Gate, GateKind, clifford_gates


class GateChoice(NamedTuple):
    """One option for a time-step: a gate, or ``None`` for doing nothing."""

    gate: Optional[Gate] = None

    @property
    def is_none(self) -> bool:
        """Whether this is the idle choice."""
        return self.gate is None

    @property
    def is_two_qubit(self) -> bool:
        """Whether this choice places a CNOT."""
        return self.gate is not None and self.gate.kind is GateKind.CNOT

    @property
    def label(self) -> str:
        """Short name used in the variable name map, e.g. ``cx(0,1)``."""
        if self.gate is None:
            return "none"
        return f"{self.gate.kind.value}({','.join(str(q) for q in self.gate.qubits)})"


NONE_CHOICE = GateChoice()


def enumerate_choices(num_qubits: int) -> List[GateChoice]:
    """NONE, H(0..n-1), S(0..n-1), then CNOT(c, t) over ordered pairs: 1 + n + n^2 choices.

    Raises:
        ValueError: If ``num_qubits < 1``.
    """
    if num_qubits < 1:
        raise ValueError(f"number of qubits must be positive, got {num_qubits}")
    return [NONE_CHOICE, *(GateChoice(gate) for gate in clifford_gates(num_qubits))]
