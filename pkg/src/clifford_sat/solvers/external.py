"""Backend that runs a DIMACS-speaking solver binary, e.g. ``kissat -q``."""

import logging
import subprocess
import time
from typing import List, Optional, Sequence, Tuple

from ..cnf.formula import CnfFormula, to_dimacs
from ..exceptions import SolverError
from .base import SatBackend, SolveOutcome, SolveStats, SolveStatus, complete_model

logger = logging.getLogger(__name__)


def parse_competition_output(text: str) -> Tuple[SolveStatus, List[int]]:
    """Read the ``s`` status line and ``v`` value lines of SAT-competition solver output.

    Raises:
        SolverError: If no status line is present or a value token is not an integer.
    """
    status: Optional[SolveStatus] = None
    values: List[int] = []
    for line in text.splitlines():
        if line.startswith("s "):
            answer = line[2:].strip().upper()
            if answer == "SATISFIABLE":
                status = SolveStatus.SAT
            elif answer == "UNSATISFIABLE":
                status = SolveStatus.UNSAT
            else:
                status = SolveStatus.TIMED_OUT
        elif line.startswith("v "):
            try:
                values.extend(int(token) for token in line[2:].split())
            except ValueError as e:
                raise SolverError(f"unparsable value line {line!r}") from e
    if status is None:
        raise SolverError("solver output has no 's' status line")
    return status, [value for value in values if value != 0]


class ExternalProcessBackend(SatBackend):
    """Spawns ``command`` per call, feeding the formula on stdin.

    Assumptions are appended to the DIMACS text as unit clauses.
    """

    def __init__(self, command: Sequence[str]):
        """Initialize with the solver command line as an argument list.

        Raises:
            ValueError: If ``command`` is empty.
        """
        if not command:
            raise ValueError("external solver command cannot be empty")
        self.command = list(command)
        self.name = f"external:{self.command[0]}"

    def _solve(self, formula: CnfFormula, assumptions: Sequence[int], timeout: Optional[float]) -> SolveOutcome:
        if assumptions:
            extended = CnfFormula()
            extended.num_vars = formula.num_vars
            extended.clauses = [*formula.clauses, *((lit,) for lit in assumptions)]
            dimacs = to_dimacs(extended)
        else:
            dimacs = to_dimacs(formula)

        started = time.perf_counter()
        try:
            completed = subprocess.run(
                self.command,
                input=dimacs,
                capture_output=True,
                text=True,
                timeout=timeout,
                check=False,
            )
        except subprocess.TimeoutExpired:
            elapsed = time.perf_counter() - started
            logger.warning("%s timed out after %.1fs", self.name, elapsed)
            return SolveOutcome(SolveStatus.TIMED_OUT, stats=SolveStats(seconds=elapsed))
        except OSError as e:
            raise SolverError(f"cannot run external solver {self.command[0]!r}: {e}") from e
        elapsed = time.perf_counter() - started

        status, values = parse_competition_output(completed.stdout)
        stats = SolveStats(seconds=elapsed)
        if status is SolveStatus.SAT:
            return SolveOutcome(status, complete_model(formula.num_vars, values), stats)
        if status is SolveStatus.TIMED_OUT:
            logger.warning("%s answered UNKNOWN (exit code %d)", self.name, completed.returncode)
        return SolveOutcome(status, stats=stats)
