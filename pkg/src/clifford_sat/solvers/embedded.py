"""In-process backend built on the python-sat solver bindings."""

import logging
import threading
import time
from typing import Optional, Sequence

from pysat.solvers import Solver, SolverNames

from ..cnf.formula import CnfFormula
from ..exceptions import SolverError
from .base import SatBackend, SolveOutcome, SolveStats, SolveStatus, complete_model

logger = logging.getLogger(__name__)

DEFAULT_SOLVER_NAME = "glucose4"


def _known_solver_names() -> set[str]:
    return {alias for aliases in vars(SolverNames).values() if isinstance(aliases, tuple) for alias in aliases}


class PySatBackend(SatBackend):
    """CDCL solving through ``pysat.solvers.Solver``.

    Timeouts interrupt the running search from a timer thread; the outcome
    is then TIMED_OUT.
    """

    def __init__(self, solver_name: str = DEFAULT_SOLVER_NAME):
        """Initialize with a python-sat solver name such as ``glucose4`` or ``cadical153``.

        Raises:
            SolverError: If python-sat does not know ``solver_name``.
        """
        if solver_name not in _known_solver_names():
            raise SolverError(f"unknown python-sat solver {solver_name!r}")
        self.solver_name = solver_name
        self.name = f"pysat:{solver_name}"

    def _solve(self, formula: CnfFormula, assumptions: Sequence[int], timeout: Optional[float]) -> SolveOutcome:
        started = time.perf_counter()
        with Solver(name=self.solver_name, bootstrap_with=[list(clause) for clause in formula.clauses]) as solver:
            if timeout is None:
                answer = solver.solve(assumptions=list(assumptions))
            else:
                timer = threading.Timer(max(timeout, 0.0), solver.interrupt)
                timer.start()
                try:
                    answer = solver.solve_limited(assumptions=list(assumptions), expect_interrupt=True)
                finally:
                    timer.cancel()
            elapsed = time.perf_counter() - started
            raw = solver.accum_stats() or {}
            stats = SolveStats(
                decisions=int(raw.get("decisions", 0)),
                conflicts=int(raw.get("conflicts", 0)),
                seconds=elapsed,
            )
            if answer is None:
                logger.warning("%s interrupted after %.1fs", self.name, elapsed)
                return SolveOutcome(SolveStatus.TIMED_OUT, stats=stats)
            if not answer:
                return SolveOutcome(SolveStatus.UNSAT, stats=stats)
            return SolveOutcome(SolveStatus.SAT, complete_model(formula.num_vars, solver.get_model() or []), stats)
