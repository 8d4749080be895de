"""CNF formula builder and DIMACS export.

Literals are DIMACS integers internally (``v`` or ``-v``); the ``Literal``
named tuple is the typed view of one, and every function accepting literals
takes either form.
"""

import logging
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Tuple, Union

from ..exceptions import ParseError

logger = logging.getLogger(__name__)


class Literal(NamedTuple):
    """A possibly negated Boolean variable."""

    variable: int
    negated: bool = False

    def __neg__(self) -> "Literal":
        """The complementary literal."""
        return Literal(self.variable, not self.negated)

    def __int__(self) -> int:
        """DIMACS integer form."""
        return -self.variable if self.negated else self.variable

    @classmethod
    def from_int(cls, value: int) -> "Literal":
        """Build from a non-zero DIMACS integer."""
        if value == 0:
            raise ValueError("0 is not a literal")
        return cls(abs(value), value < 0)


LiteralLike = Union[Literal, int]
Model = Mapping[int, bool]


def to_int(lit: LiteralLike) -> int:
    """DIMACS integer for a literal."""
    value = int(lit)
    if value == 0:
        raise ValueError("0 is not a literal")
    return value


class CnfFormula:
    """A growing CNF formula with named variables.

    Attributes:
        num_vars: Highest allocated variable id.
        clauses: Clauses as tuples of DIMACS integers, in insertion order.
        name_map: Semantic names of the non-auxiliary variables.
    """

    def __init__(self) -> None:
        """Create an empty formula."""
        self.num_vars = 0
        self.clauses: List[Tuple[int, ...]] = []
        self.name_map: Dict[str, int] = {}

    def new_var(self, name: Optional[str] = None) -> int:
        """Allocate a fresh variable, optionally registering it under ``name``."""
        self.num_vars += 1
        if name is not None:
            if name in self.name_map:
                raise ValueError(f"variable name {name!r} already in use")
            self.name_map[name] = self.num_vars
        return self.num_vars

    def add_clause(self, lits: Iterable[LiteralLike]) -> None:
        """Append a clause. An empty clause marks the formula as unsatisfiable."""
        clause = tuple(to_int(lit) for lit in lits)
        for value in clause:
            if abs(value) > self.num_vars:
                raise ValueError(f"literal {value} refers to unallocated variable (num_vars={self.num_vars})")
        if not clause:
            logger.debug("Empty clause added; formula is unsatisfiable")
        self.clauses.append(clause)

    @property
    def num_clauses(self) -> int:
        """Number of clauses."""
        return len(self.clauses)

    @property
    def has_empty_clause(self) -> bool:
        """Whether an empty clause was added."""
        return any(not clause for clause in self.clauses)

    def is_satisfied_by(self, model: Model) -> bool:
        """Evaluate every clause under ``model`` (missing variables count as False)."""
        return all(any(model.get(abs(lit), False) == (lit > 0) for lit in clause) for clause in self.clauses)


def _xor2_equals(f: CnfFormula, out: int, a: int, b: int) -> None:
    f.add_clause([-out, a, b])
    f.add_clause([-out, -a, -b])
    f.add_clause([out, -a, b])
    f.add_clause([out, a, -b])


def add_xor_equals(f: CnfFormula, out: LiteralLike, ins: Iterable[LiteralLike]) -> None:
    """Constrain ``out = ins[0] ^ ins[1] ^ ...``.

    Inputs are folded pairwise; each intermediate parity gets one auxiliary
    variable, so the result uses four 3-literal clauses per XOR.

    Raises:
        ValueError: If ``ins`` is empty.
    """
    o = to_int(out)
    inputs = [to_int(lit) for lit in ins]
    if not inputs:
        raise ValueError("add_xor_equals needs at least one input")
    if len(inputs) == 1:
        f.add_clause([-o, inputs[0]])
        f.add_clause([o, -inputs[0]])
        return
    acc = inputs[0]
    for lit in inputs[1:-1]:
        aux = f.new_var()
        _xor2_equals(f, aux, acc, lit)
        acc = aux
    _xor2_equals(f, o, acc, inputs[-1])


def add_and_equals(f: CnfFormula, out: LiteralLike, ins: Iterable[LiteralLike]) -> None:
    """Constrain ``out = ins[0] & ins[1] & ...`` (Tseitin AND)."""
    o = to_int(out)
    inputs = [to_int(lit) for lit in ins]
    if not inputs:
        raise ValueError("add_and_equals needs at least one input")
    for lit in inputs:
        f.add_clause([-o, lit])
    f.add_clause([o, *(-lit for lit in inputs)])


# Parity constraints up to this many literals are written out directly.
MAX_DIRECT_PARITY = 4


def add_implied_xor(f: CnfFormula, guard: Optional[LiteralLike], out: LiteralLike, ins: Iterable[LiteralLike]) -> None:
    """Constrain ``guard -> (out = XOR ins)`` without auxiliary variables.

    Every assignment of odd total parity over ``out`` and ``ins`` is excluded
    by one clause, giving 2^(k-1) clauses for k literals.

    Raises:
        ValueError: If more than ``MAX_DIRECT_PARITY`` literals are involved.
    """
    lits = [to_int(out), *(to_int(lit) for lit in ins)]
    if len(lits) > MAX_DIRECT_PARITY:
        raise ValueError(f"direct parity encoding supports at most {MAX_DIRECT_PARITY} literals")
    prefix = [] if guard is None else [-to_int(guard)]
    size = len(lits)
    for assignment in range(1 << size):
        if bin(assignment).count("1") % 2 == 0:
            continue
        clause = list(prefix)
        for position, lit in enumerate(lits):
            clause.append(-lit if (assignment >> position) & 1 else lit)
        f.add_clause(clause)


def add_at_least_one(f: CnfFormula, lits: Iterable[LiteralLike]) -> None:
    """One clause over all literals."""
    f.add_clause(lits)


def add_at_most_one(f: CnfFormula, lits: Iterable[LiteralLike]) -> None:
    """Pairwise at-most-one."""
    values = [to_int(lit) for lit in lits]
    for i, a in enumerate(values):
        for b in values[i + 1 :]:
            f.add_clause([-a, -b])


# Exactly-one constraints over more literals than this use the sequential counter.
PAIRWISE_THRESHOLD = 8


def add_exactly_one(f: CnfFormula, lits: Iterable[LiteralLike]) -> None:
    """Exactly one literal true.

    Pairwise at-most-one for up to ``PAIRWISE_THRESHOLD`` literals, the
    sequential counter with k=1 above that, plus one at-least-one clause.
    """
    values = [to_int(lit) for lit in lits]
    if not values:
        raise ValueError("add_exactly_one needs at least one literal")
    if len(values) == 1:
        f.add_clause(values)
        return
    if len(values) <= PAIRWISE_THRESHOLD:
        add_at_most_one(f, values)
    else:
        add_at_most_k(f, values, 1)
    add_at_least_one(f, values)


def add_at_most_k(f: CnfFormula, lits: Iterable[LiteralLike], k: int) -> None:
    """Sequential-counter encoding of ``sum(lits) <= k``.

    Register ``s[i][j]`` is forced true when at least j+1 of the first i+1
    literals are true; the encoding is arc-consistent under unit propagation.

    Raises:
        ValueError: If ``k`` is negative or exceeds the number of literals.
    """
    xs = [to_int(lit) for lit in lits]
    n = len(xs)
    if k < 0 or k > n:
        raise ValueError(f"k must be within 0..{n}, got {k}")
    if k == n:
        return
    if k == 0:
        for x in xs:
            f.add_clause([-x])
        return

    s = [[f.new_var() for _ in range(k)] for _ in range(n - 1)]
    f.add_clause([-xs[0], s[0][0]])
    for j in range(1, k):
        f.add_clause([-s[0][j]])
    for i in range(1, n - 1):
        f.add_clause([-xs[i], s[i][0]])
        f.add_clause([-s[i - 1][0], s[i][0]])
        for j in range(1, k):
            f.add_clause([-xs[i], -s[i - 1][j - 1], s[i][j]])
            f.add_clause([-s[i - 1][j], s[i][j]])
        f.add_clause([-xs[i], -s[i - 1][k - 1]])
    f.add_clause([-xs[n - 1], -s[n - 2][k - 1]])


def to_dimacs(f: CnfFormula) -> str:
    """Standard DIMACS CNF text, clauses in insertion order."""
    lines = [f"p cnf {f.num_vars} {f.num_clauses}"]
    lines.extend(" ".join([*(str(lit) for lit in clause), "0"]) for clause in f.clauses)
    return "\n".join(lines) + "\n"


def name_map_text(f: CnfFormula) -> str:
    """Sidecar listing ``name<TAB>id`` for named variables, ordered by id."""
    return "".join(f"{name}\t{var}\n" for name, var in sorted(f.name_map.items(), key=lambda item: item[1]))


def parse_dimacs(text: str) -> CnfFormula:
    """Read DIMACS CNF text back into a formula (names are not restored).

    Raises:
        ParseError: On a missing/malformed header or an unterminated clause.
    """
    formula = CnfFormula()
    declared: Optional[Tuple[int, int]] = None
    current: List[int] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError(f"malformed header {line!r}", line_no, 1)
            declared = (int(parts[2]), int(parts[3]))
            formula.num_vars = declared[0]
            continue
        if declared is None:
            raise ParseError("clause before 'p cnf' header", line_no, 1)
        for token in line.split():
            value = int(token)
            if value == 0:
                formula.add_clause(current)
                current = []
            else:
                current.append(value)
    if declared is None:
        raise ParseError("missing 'p cnf' header")
    if current:
        raise ParseError("last clause is not terminated by 0")
    if formula.num_clauses != declared[1]:
        logger.warning("DIMACS header declares %d clauses, found %d", declared[1], formula.num_clauses)
    return formula
