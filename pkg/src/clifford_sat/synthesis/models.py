"""Models for the optimization driver."""

from enum import Enum
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from .._utils.env import get_default_timeout
from ..circuit.models import CliffordCircuit
from ..encoding.models import MatchMode
from ..solvers.base import SolveStatus


class Objective(str, Enum):
    """Cost being minimized."""

    TOTAL_GATES = "gates"
    TWO_QUBIT_GATES = "two-qubit"


class Strategy(str, Enum):
    """Search order over the bound being minimized (T for total gates, K for CNOTs).

    BINARY_SEARCH bisects the bound. LINEAR_DOWN lowers it by one per call
    until UNSAT. COST_TIGHTENING keeps the step count fixed and sets the next
    cardinality bound to the last model's cost minus one.
    """

    BINARY_SEARCH = "binary-search"
    LINEAR_DOWN = "linear-down"
    COST_TIGHTENING = "cost-tightening"


class Optimality(str, Enum):
    """Whether the reported cost is certified minimal."""

    PROVEN = "proven"
    TIME_BOUNDED_UPPER = "time-bounded-upper"


class SynthesisConfig(BaseModel):
    """Knobs of one synthesis job.

    ``padding`` is the number of slack steps added to the feasible limit
    before CNOT minimization; ``None`` means n.
    """

    model_config = ConfigDict(frozen=True)

    objective: Objective = Objective.TOTAL_GATES
    strategy: Strategy = Strategy.BINARY_SEARCH
    initial_time_steps: Optional[int] = Field(default=None, ge=1)
    growth_factor: float = Field(default=2.0, gt=1.0)
    per_call_timeout: Optional[float] = Field(default=None, gt=0)
    total_timeout: float = Field(default_factory=get_default_timeout, gt=0)
    match_mode: MatchMode = MatchMode.CANONICAL
    seed: int = 0
    padding: Optional[int] = Field(default=None, ge=0)
    max_time_steps: Optional[int] = Field(default=None, ge=1)
    symmetry_breaking: bool = True
    backend: Optional[str] = None


class SolverCall(BaseModel):
    """One solver invocation of a search.

    ``bound`` is the gate budget for kind ``T`` (the step count, or a cardinality
    bound at a fixed step count) and the CNOT bound for kind ``K``.
    """

    model_config = ConfigDict(frozen=True)

    kind: Literal["T", "K"]
    bound: int
    time_steps: int
    status: SolveStatus
    seconds: float


class SynthesisResult(BaseModel):
    """Circuit, cost breakdown and certificate of a synthesis job."""

    model_config = ConfigDict(frozen=True)

    circuit: CliffordCircuit
    total_gates: int
    two_qubit_gates: int
    optimal: Optimality
    objective: Objective
    time_steps: int
    calls: List[SolverCall] = Field(default_factory=list)

    @property
    def is_proven(self) -> bool:
        """Whether minimality is certified."""
        return self.optimal is Optimality.PROVEN

    def proof_pair(self) -> Optional[Tuple[SolverCall, SolverCall]]:
        """The (SAT at m, UNSAT at m - 1) calls certifying the reported cost, if both were made."""
        kind: Literal["T", "K"] = "T" if self.objective is Objective.TOTAL_GATES else "K"
        cost = self.total_gates if kind == "T" else self.two_qubit_gates
        sat = next((c for c in self.calls if c.kind == kind and c.bound == cost and c.status is SolveStatus.SAT), None)
        unsat = next(
            (c for c in self.calls if c.kind == kind and c.bound == cost - 1 and c.status is SolveStatus.UNSAT),
            None,
        )
        if sat is None or unsat is None:
            return None
        return sat, unsat
