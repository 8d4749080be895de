"""Exception hierarchy for clifford-sat.

Every error raised on purpose by this package derives from ``CliffordSatError``.
Input-validation errors additionally derive from ``ValueError`` so callers that
only care about bad arguments can keep catching that.
"""

from typing import Optional


class CliffordSatError(Exception):
    """Base class for all clifford-sat errors."""


class TableauError(CliffordSatError, ValueError):
    """A tableau violates its invariants or an index is out of range."""


class CircuitError(CliffordSatError, ValueError):
    """A gate or circuit is malformed for the requested operation."""


class ParseError(CliffordSatError, ValueError):
    """Text input could not be parsed.

    Attributes:
        line: 1-based line number of the offending token, if known.
        column: 1-based column of the offending token, if known.
    """

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        """Initialize with a message and an optional source position."""
        self.message = message
        self.line = line
        self.column = column
        if line is not None:
            location = f"{line}:{column}" if column is not None else f"{line}"
            super().__init__(f"{location}: {message}")
        else:
            super().__init__(message)


class EncodingError(CliffordSatError):
    """The SAT encoding or a model read back from it is inconsistent."""


class SolverError(CliffordSatError):
    """A SAT backend failed to produce a usable answer."""


class SynthesisError(CliffordSatError):
    """Synthesis produced no verified circuit."""


class OracleError(CliffordSatError):
    """The dense-matrix oracle produced a non-Pauli result."""
