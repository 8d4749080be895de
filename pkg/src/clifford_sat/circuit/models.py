"""Models for Clifford circuits.

Contains the gate and circuit value types and the cost metrics used
throughout synthesis.
"""

from enum import Enum
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator
from typing_extensions import Self


class GateKind(str, Enum):
    """Gate kinds of the {H, S, CNOT} gate set, valued by their text mnemonic."""

    H = "h"
    S = "s"
    CNOT = "cx"


class Gate(BaseModel):
    """A single Clifford gate.

    ``q0`` is the target of H/S and the control of CNOT; ``q1`` is the CNOT target.
    """

    model_config = ConfigDict(frozen=True)

    kind: GateKind
    q0: int = Field(ge=0)
    q1: Optional[int] = Field(default=None, ge=0)

    @model_validator(mode="after")
    def _check_operands(self) -> Self:
        if self.kind is GateKind.CNOT:
            if self.q1 is None:
                raise ValueError("CNOT requires a target qubit")
            if self.q0 == self.q1:
                raise ValueError(f"CNOT control and target must differ, got {self.q0}")
        elif self.q1 is not None:
            raise ValueError(f"{self.kind.name} acts on one qubit, got second operand {self.q1}")
        return self

    @classmethod
    def h(cls, qubit: int) -> "Gate":
        """Hadamard on ``qubit``."""
        return cls(kind=GateKind.H, q0=qubit)

    @classmethod
    def s(cls, qubit: int) -> "Gate":
        """Phase gate on ``qubit``."""
        return cls(kind=GateKind.S, q0=qubit)

    @classmethod
    def cnot(cls, control: int, target: int) -> "Gate":
        """CNOT from ``control`` to ``target``."""
        return cls(kind=GateKind.CNOT, q0=control, q1=target)

    @property
    def qubits(self) -> Tuple[int, ...]:
        """Qubits the gate acts on, control first for CNOT."""
        return (self.q0,) if self.q1 is None else (self.q0, self.q1)

    @property
    def is_two_qubit(self) -> bool:
        """Whether this is a CNOT."""
        return self.kind is GateKind.CNOT

    def __str__(self) -> str:
        """Render in the circuit text format, e.g. ``cx 0 1``."""
        return " ".join([self.kind.value, *(str(q) for q in self.qubits)])


class CliffordCircuit(BaseModel):
    """An ordered list of {H, S, CNOT} gates on ``num_qubits`` qubits."""

    model_config = ConfigDict(frozen=True)

    num_qubits: int = Field(ge=1)
    gates: Tuple[Gate, ...] = ()

    @model_validator(mode="after")
    def _check_indices(self) -> Self:
        for position, gate in enumerate(self.gates):
            for qubit in gate.qubits:
                if qubit >= self.num_qubits:
                    raise ValueError(
                        f"gate {position} ({gate}) uses qubit {qubit} outside 0..{self.num_qubits - 1}"
                    )
        return self

    def __len__(self) -> int:
        """Number of gates."""
        return len(self.gates)

    def gate_count(self) -> int:
        """Total number of gates."""
        return len(self.gates)

    def two_qubit_count(self) -> int:
        """Number of CNOT gates."""
        return sum(1 for gate in self.gates if gate.is_two_qubit)

    def single_qubit_count(self) -> int:
        """Number of H and S gates."""
        return self.gate_count() - self.two_qubit_count()

    def then(self, other: "CliffordCircuit") -> "CliffordCircuit":
        """Return this circuit followed by ``other`` on the same register."""
        if other.num_qubits != self.num_qubits:
            raise ValueError(f"qubit count mismatch: {self.num_qubits} vs {other.num_qubits}")
        return CliffordCircuit(num_qubits=self.num_qubits, gates=self.gates + other.gates)


def clifford_gates(num_qubits: int) -> Tuple[Gate, ...]:
    """All gates on ``num_qubits`` qubits: H(0..n-1), S(0..n-1), then CNOT(c, t) over ordered pairs."""
    gates = [Gate.h(q) for q in range(num_qubits)]
    gates += [Gate.s(q) for q in range(num_qubits)]
    gates += [Gate.cnot(c, t) for c in range(num_qubits) for t in range(num_qubits) if c != t]
    return tuple(gates)


def gate_count(circuit: CliffordCircuit) -> int:
    """Return the total gate count of ``circuit``."""
    return circuit.gate_count()


def two_qubit_count(circuit: CliffordCircuit) -> int:
    """Return the number of two-qubit (CNOT) gates in ``circuit``."""
    return circuit.two_qubit_count()
