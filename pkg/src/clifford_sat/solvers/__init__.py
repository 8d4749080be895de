"""SAT backends.

This package contains:
- SatBackend / SolveOutcome: the solving contract
- PySatBackend: embedded CDCL solving via python-sat (default)
- ExternalProcessBackend: any DIMACS solver binary speaking the competition output format
- make_backend: selection from a ``pysat:<name>`` / ``external`` selector
"""

from typing import Optional

from .._utils.env import get_backend_spec, get_solver_command
from .base import SatBackend, SolveOutcome, SolveStats, SolveStatus, complete_model
from .embedded import DEFAULT_SOLVER_NAME, PySatBackend
from .external import ExternalProcessBackend, parse_competition_output


def make_backend(spec: Optional[str] = None, solver_command: Optional[str] = None) -> SatBackend:
    """Build the backend named by ``spec`` (argument > ``CLIFFORD_SAT_BACKEND`` > ``pysat:glucose4``).

    Raises:
        ValueError: On a malformed selector, or ``external`` without a solver command.
        SolverError: If python-sat does not know the requested solver.
    """
    selector = get_backend_spec(spec)
    if selector == "external":
        return ExternalProcessBackend(get_solver_command(solver_command))
    return PySatBackend(selector.split(":", 1)[1])


__all__ = [
    "DEFAULT_SOLVER_NAME",
    "ExternalProcessBackend",
    "PySatBackend",
    "SatBackend",
    "SolveOutcome",
    "SolveStats",
    "SolveStatus",
    "complete_model",
    "make_backend",
    "parse_competition_output",
]
