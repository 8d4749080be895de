"""Models for SAT encodings of the synthesis problem."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator
from typing_extensions import Self

from ..cnf.formula import CnfFormula
from ..stabilizer.tableau import Tableau, identity_tableau
from .choices import GateChoice


class MatchMode(str, Enum):
    """How the final tableau is compared against the target."""

    EXACT = "exact"
    CANONICAL = "canonical"


class TableauColumn(str, Enum):
    """Bit kinds of a tableau row."""

    X = "x"
    Z = "z"
    R = "r"


class SynthesisInstance(BaseModel):
    """A target tableau plus the limits the encoder works under.

    ``initial`` defaults to the identity tableau of the target's size and mode.
    ``two_qubit_bound`` caps the CNOT choices and ``gate_bound`` the non-NONE
    steps; ``None`` leaves the count free.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    target: Tableau
    initial: Tableau
    time_steps: int = Field(ge=0)
    two_qubit_bound: Optional[int] = Field(default=None, ge=0)
    gate_bound: Optional[int] = Field(default=None, ge=0)
    match_mode: MatchMode = MatchMode.CANONICAL
    symmetry_breaking: bool = True

    @model_validator(mode="before")
    @classmethod
    def _default_initial(cls, data: Any) -> Any:
        if isinstance(data, dict) and data.get("initial") is None and isinstance(data.get("target"), Tableau):
            target = data["target"]
            data = {**data, "initial": identity_tableau(target.num_qubits, target.mode)}
        return data

    @model_validator(mode="after")
    def _check_shapes(self) -> Self:
        if self.initial.num_qubits != self.target.num_qubits:
            raise ValueError(
                f"initial tableau has {self.initial.num_qubits} qubits, target has {self.target.num_qubits}"
            )
        if self.initial.mode is not self.target.mode:
            raise ValueError(f"initial tableau is {self.initial.mode.value}, target is {self.target.mode.value}")
        return self

    @property
    def num_qubits(self) -> int:
        """Qubit count n."""
        return self.target.num_qubits


class EncodingStats(BaseModel):
    """Size figures of an encoded instance."""

    num_vars: int
    num_clauses: int
    time_steps: int
    choices_per_step: int
    tableau_vars_per_boundary: int
    row_update_groups_per_step: int
    cnot_literals: int


TableauKey = Tuple[int, int, TableauColumn, int]
"""(time boundary, row, column kind, qubit); the qubit is 0 for the phase column."""


@dataclass
class EncodedInstance:
    """A CNF formula together with the variable layout needed to read models back.

    Attributes:
        instance: The instance that was encoded.
        formula: The CNF formula.
        choices: Choice set shared by every step.
        choice_vars: (step, choice) -> variable.
        tableau_vars: (boundary, row, column kind, qubit) -> variable.
        cnot_literals: Every CNOT choice variable over all steps.
        gate_literals: One "step holds a gate" literal (a negated NONE choice) per step.
        final_target: The rows fixed at the last boundary (canonicalized in Canonical mode).
        row_update_groups: One (step, choice, row) entry per conditional row update.
    """

    instance: SynthesisInstance
    formula: CnfFormula
    choices: Tuple[GateChoice, ...]
    choice_vars: Dict[Tuple[int, GateChoice], int] = field(default_factory=dict)
    tableau_vars: Dict[TableauKey, int] = field(default_factory=dict)
    cnot_literals: List[int] = field(default_factory=list)
    gate_literals: List[int] = field(default_factory=list)
    final_target: Optional[Tableau] = None
    row_update_groups: List[Tuple[int, GateChoice, int]] = field(default_factory=list)

    @property
    def time_steps(self) -> int:
        """Number of steps T."""
        return self.instance.time_steps

    def step_choice_vars(self, step: int) -> List[int]:
        """Choice variables of ``step`` in choice-set order."""
        return [self.choice_vars[(step, choice)] for choice in self.choices]

    def boundary_vars(self, boundary: int) -> List[int]:
        """Tableau variables of one boundary."""
        return [var for key, var in self.tableau_vars.items() if key[0] == boundary]

    def stats(self) -> EncodingStats:
        """Variable, clause and group counts."""
        steps = self.time_steps
        groups = len(self.row_update_groups) // steps if steps else 0
        return EncodingStats(
            num_vars=self.formula.num_vars,
            num_clauses=self.formula.num_clauses,
            time_steps=steps,
            choices_per_step=len(self.choices),
            tableau_vars_per_boundary=len(self.boundary_vars(0)),
            row_update_groups_per_step=groups,
            cnot_literals=len(self.cnot_literals),
        )
