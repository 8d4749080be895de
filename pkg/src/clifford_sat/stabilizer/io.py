"""Tableau text format: one signed Pauli string per line, e.g. ``+XX`` / ``+ZZ``."""

from typing import List, Optional

from ..exceptions import ParseError, TableauError
from .models import PauliRow, TableauMode
from .tableau import Tableau


def parse_tableau(text: str, mode: Optional[TableauMode] = None) -> Tableau:
    """Parse and validate a tableau.

    Blank lines and ``#`` comments are skipped. The sign is optional and
    letters may be lowercase. With ``mode=None`` the mode is inferred from the
    row count (n rows: State, 2n rows: Unitary).

    Raises:
        ParseError: On malformed rows or rows of differing length.
        TableauError: If the rows violate the tableau invariants.
    """
    rows: List[PauliRow] = []
    width: Optional[int] = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        row = PauliRow.from_string(content, line=line_no)
        if width is None:
            width = row.num_qubits
        elif row.num_qubits != width:
            raise ParseError(f"row has {row.num_qubits} qubits, expected {width}", line_no, 1)
        rows.append(row)
    if not rows:
        raise ParseError("tableau text contains no rows")
    try:
        tableau = Tableau.from_rows(rows, mode)
    except TableauError as e:
        raise ParseError(str(e)) from e
    return tableau.validate()


def serialize_tableau(tableau: Tableau) -> str:
    """Render one row per line with explicit sign and uppercase letters."""
    return "".join(f"{row}\n" for row in tableau.rows)
