"""Text format for Clifford circuits.

The format is a tiny assembly subset::

    # Bell-state preparation
    qubits 2
    h 0
    cx 0 1

A ``qubits N`` header comes first, then one gate per line. ``#`` starts a
comment. Tokens are whitespace separated; mnemonics are case-insensitive on
input and always lowercase on output.
"""

import re
from typing import Iterator, List, Optional, Tuple

from pydantic import ValidationError

from ..exceptions import ParseError
from .models import CliffordCircuit, Gate, GateKind

_TOKEN = re.compile(r"\S+")

_MNEMONICS = {
    "h": GateKind.H,
    "s": GateKind.S,
    "cx": GateKind.CNOT,
    "cnot": GateKind.CNOT,
}


def _tokens(text: str) -> Iterator[Tuple[int, List[Tuple[int, str]]]]:
    """Yield (line number, [(column, token), ...]) for non-empty lines."""
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = [(match.start() + 1, match.group()) for match in _TOKEN.finditer(line)]
        if tokens:
            yield line_no, tokens


def _parse_index(token: str, line: int, column: int, num_qubits: Optional[int]) -> int:
    if not (token.isascii() and token.isdigit()):
        raise ParseError(f"expected a non-negative integer, got {token!r}", line, column)
    value = int(token)
    if num_qubits is not None and value >= num_qubits:
        raise ParseError(f"qubit index {value} out of range 0..{num_qubits - 1}", line, column)
    return value


def parse_circuit(text: str) -> CliffordCircuit:
    """Parse a circuit from its text form.

    Args:
        text: Circuit source in the format described in the module docstring.

    Returns:
        The parsed circuit.

    Raises:
        ParseError: On syntax errors, unknown gates, out-of-range indices or a
            CNOT whose control equals its target. The error carries line/column.
    """
    num_qubits: Optional[int] = None
    gates: List[Gate] = []

    for line_no, tokens in _tokens(text):
        column, head = tokens[0]
        name = head.lower()

        if num_qubits is None:
            if name != "qubits":
                raise ParseError(f"expected 'qubits N' header, got {head!r}", line_no, column)
            if len(tokens) != 2:
                raise ParseError("header takes exactly one argument", line_no, column)
            num_qubits = _parse_index(tokens[1][1], line_no, tokens[1][0], None)
            if num_qubits < 1:
                raise ParseError("qubit count must be at least 1", line_no, tokens[1][0])
            continue

        if name == "qubits":
            raise ParseError("duplicate 'qubits' header", line_no, column)
        kind = _MNEMONICS.get(name)
        if kind is None:
            raise ParseError(f"unknown gate {head!r}", line_no, column)

        arity = 2 if kind is GateKind.CNOT else 1
        if len(tokens) - 1 != arity:
            raise ParseError(f"gate {name!r} takes {arity} operand(s), got {len(tokens) - 1}", line_no, column)
        operands = [_parse_index(tok, line_no, col, num_qubits) for col, tok in tokens[1:]]

        if kind is GateKind.CNOT and operands[0] == operands[1]:
            raise ParseError(f"CNOT control and target are both {operands[0]}", line_no, tokens[2][0])
        try:
            gates.append(Gate(kind=kind, q0=operands[0], q1=operands[1] if arity == 2 else None))
        except ValidationError as e:
            raise ParseError(str(e), line_no, column) from e

    if num_qubits is None:
        raise ParseError("missing 'qubits N' header")
    return CliffordCircuit(num_qubits=num_qubits, gates=tuple(gates))


def serialize_circuit(circuit: CliffordCircuit) -> str:
    """Render ``circuit`` canonically: header line, then one lowercase gate per line."""
    lines = [f"qubits {circuit.num_qubits}"]
    lines.extend(str(gate) for gate in circuit.gates)
    return "\n".join(lines) + "\n"
