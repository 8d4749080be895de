"""Models for the stabilizer formalism.

Contains the tableau mode enum and the signed Pauli row value type.
"""

from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

from ..exceptions import ParseError


class TableauMode(str, Enum):
    """Whether a tableau describes a state (n rows) or a Clifford unitary (2n rows)."""

    STATE = "state"
    UNITARY = "unitary"


# (x, z) bit pair per Pauli letter
PAULI_BITS = {"I": (False, False), "X": (True, False), "Y": (True, True), "Z": (False, True)}
PAULI_LETTERS = {bits: letter for letter, bits in PAULI_BITS.items()}


@dataclass(frozen=True)
class PauliRow:
    """A signed Pauli string, stored as x-bits, z-bits and a negative-phase flag."""

    x: Tuple[bool, ...]
    z: Tuple[bool, ...]
    r: bool = False

    def __post_init__(self) -> None:
        """Check that x and z cover the same qubits."""
        if len(self.x) != len(self.z) or not self.x:
            raise ValueError(f"x and z must have the same positive length, got {len(self.x)} and {len(self.z)}")

    @property
    def num_qubits(self) -> int:
        """Number of qubits the string acts on."""
        return len(self.x)

    @property
    def is_identity(self) -> bool:
        """Whether every letter is I (the sign is ignored)."""
        return not any(self.x) and not any(self.z)

    @classmethod
    def from_string(cls, text: str, line: int = 1) -> "PauliRow":
        """Parse ``[+|-]P...`` with P in IXYZ, case-insensitive.

        Raises:
            ParseError: On an empty string or an unknown letter.
        """
        body = text.strip()
        negative = False
        offset = 1
        if body[:1] in ("+", "-"):
            negative = body[0] == "-"
            body = body[1:]
            offset = 2
        if not body:
            raise ParseError("empty Pauli string", line, 1)
        xs: List[bool] = []
        zs: List[bool] = []
        for index, letter in enumerate(body.upper()):
            bits = PAULI_BITS.get(letter)
            if bits is None:
                raise ParseError(f"invalid Pauli letter {body[index]!r}", line, index + offset)
            xs.append(bits[0])
            zs.append(bits[1])
        return cls(x=tuple(xs), z=tuple(zs), r=negative)

    def letters(self) -> str:
        """Pauli letters without the sign."""
        return "".join(PAULI_LETTERS[(bool(a), bool(b))] for a, b in zip(self.x, self.z, strict=True))

    def commutes_with(self, other: "PauliRow") -> bool:
        """Symplectic inner product test."""
        total = sum((a and d) ^ (b and c) for a, b, c, d in zip(self.x, self.z, other.x, other.z, strict=True))
        return total % 2 == 0

    def __str__(self) -> str:
        """Render as ``+XZ`` / ``-YY``."""
        return ("-" if self.r else "+") + self.letters()
