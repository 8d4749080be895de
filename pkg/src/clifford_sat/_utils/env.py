"""Environment overrides for solver selection and default timeouts."""

import os
import re
import shlex
from typing import List, Optional

# Environment-configurable constants with fallback defaults
BACKEND_OVERRIDE = os.getenv("CLIFFORD_SAT_BACKEND")
SOLVER_COMMAND_OVERRIDE = os.getenv("CLIFFORD_SAT_SOLVER")
TIMEOUT_OVERRIDE = os.getenv("CLIFFORD_SAT_TIMEOUT")

DEFAULT_BACKEND = "pysat:glucose4"
DEFAULT_TIMEOUT_SECONDS = 300.0

# "pysat:<solver-name>" or "external"
BACKEND_PATTERN = re.compile(r"^(pysat:[a-z0-9]+|external)$")


def _validate_backend(spec: str) -> str:
    """Validate a backend selector string."""
    if not spec or not BACKEND_PATTERN.match(spec):
        raise ValueError(f"Invalid backend selector: {spec!r} (expected 'pysat:<name>' or 'external')")
    return spec


def _validate_timeout(raw: str) -> float:
    try:
        value = float(raw)
    except ValueError:
        raise ValueError(f"Invalid timeout: {raw!r}") from None
    if value <= 0:
        raise ValueError(f"Timeout must be positive, got {value}")
    return value


def get_backend_spec(explicit: Optional[str] = None) -> str:
    """Return the validated backend selector (argument > env var > default)."""
    return _validate_backend(explicit or BACKEND_OVERRIDE or DEFAULT_BACKEND)


def get_solver_command(explicit: Optional[str] = None) -> List[str]:
    """Return the external solver command line split into argv tokens.

    Raises:
        ValueError: If neither an explicit command nor ``CLIFFORD_SAT_SOLVER`` is set.
    """
    command = explicit or SOLVER_COMMAND_OVERRIDE
    if not command or not command.strip():
        raise ValueError("External backend selected but no solver command given (set CLIFFORD_SAT_SOLVER)")
    return shlex.split(command)


def get_default_timeout() -> float:
    """Return the default per-run timeout in seconds."""
    if TIMEOUT_OVERRIDE:
        return _validate_timeout(TIMEOUT_OVERRIDE)
    return DEFAULT_TIMEOUT_SECONDS
