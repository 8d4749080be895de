"""Backend contract for SAT solving."""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Sequence

from ..cnf.formula import CnfFormula, LiteralLike, to_int

logger = logging.getLogger(__name__)


class SolveStatus(str, Enum):
    """Result of one solver call."""

    SAT = "sat"
    UNSAT = "unsat"
    TIMED_OUT = "timed_out"


@dataclass(frozen=True)
class SolveStats:
    """Counters reported by a backend; zero when the backend does not report them."""

    decisions: int = 0
    conflicts: int = 0
    seconds: float = 0.0


@dataclass(frozen=True)
class SolveOutcome:
    """Status, model (SAT only) and statistics of one solver call."""

    status: SolveStatus
    model: Optional[Dict[int, bool]] = None
    stats: SolveStats = field(default_factory=SolveStats)

    @property
    def is_sat(self) -> bool:
        """Whether a model was found."""
        return self.status is SolveStatus.SAT


def complete_model(num_vars: int, true_literals: Sequence[int]) -> Dict[int, bool]:
    """Model over 1..num_vars from a list of signed literals; unmentioned variables are False."""
    model = {var: False for var in range(1, num_vars + 1)}
    for lit in true_literals:
        if 0 < abs(lit) <= num_vars:
            model[abs(lit)] = lit > 0
    return model


class SatBackend(ABC):
    """A SAT solver that answers one formula at a time."""

    name: str = "backend"

    def solve(
        self,
        formula: CnfFormula,
        assumptions: Sequence[LiteralLike] = (),
        timeout: Optional[float] = None,
    ) -> SolveOutcome:
        """Solve ``formula`` under ``assumptions`` within ``timeout`` seconds.

        Formulas holding an empty clause are answered UNSAT without calling
        the solver.

        Raises:
            ValueError: If an assumption names a variable outside the formula.
        """
        lits = [to_int(lit) for lit in assumptions]
        for lit in lits:
            if abs(lit) > formula.num_vars:
                raise ValueError(f"assumption {lit} refers to a variable outside the formula")
        if formula.has_empty_clause:
            logger.debug("Formula has an empty clause; UNSAT without solving")
            return SolveOutcome(SolveStatus.UNSAT)
        outcome = self._solve(formula, lits, timeout)
        logger.debug(
            "%s: %d vars, %d clauses -> %s in %.3fs",
            self.name,
            formula.num_vars,
            formula.num_clauses,
            outcome.status.value,
            outcome.stats.seconds,
        )
        return outcome

    @abstractmethod
    def _solve(self, formula: CnfFormula, assumptions: Sequence[int], timeout: Optional[float]) -> SolveOutcome:
        """Backend-specific solving."""
        raise NotImplementedError
