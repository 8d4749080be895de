"""Stabilizer tableaus and the Clifford update rules.

A tableau stores one signed Pauli row per generator as three uint8 arrays:
``x`` and ``z`` of shape (rows, n) and ``r`` of shape (rows,). State tableaus
have n rows (the stabilizer generators); unitary tableaus have 2n rows, the
first n being destabilizers and the last n stabilizers.

All public operations return new tableaus. Update rules read every right-hand
side from the pre-update bits, as in the Aaronson-Gottesman convention.
"""

import logging
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..circuit.models import CliffordCircuit, Gate, GateKind, clifford_gates
from ..exceptions import CircuitError, TableauError
from .models import PauliRow, TableauMode

logger = logging.getLogger(__name__)

# Random tableaus apply RANDOM_CIRCUIT_FACTOR * n^2 random gates.
RANDOM_CIRCUIT_FACTOR = 5
_SEED_MASK = (1 << 64) - 1


class Tableau:
    """Immutable stabilizer tableau over ``num_qubits`` qubits."""

    __slots__ = ("_x", "_z", "_r", "_mode")

    def __init__(
        self,
        x: Union[np.ndarray, Sequence[Sequence[int]]],
        z: Union[np.ndarray, Sequence[Sequence[int]]],
        r: Union[np.ndarray, Sequence[int]],
        mode: TableauMode = TableauMode.STATE,
    ):
        """Initialize from bit matrices.

        Args:
            x: X-bits, shape (rows, n).
            z: Z-bits, shape (rows, n).
            r: Phase bits, shape (rows,).
            mode: State (rows == n) or Unitary (rows == 2n).

        Raises:
            TableauError: If the shapes are inconsistent with ``mode``.
        """
        self._x = np.array(x, dtype=np.uint8) & 1
        self._z = np.array(z, dtype=np.uint8) & 1
        self._r = np.array(r, dtype=np.uint8).reshape(-1) & 1
        self._mode = TableauMode(mode)

        if self._x.ndim != 2 or self._x.shape != self._z.shape:
            raise TableauError(f"x and z must be equal-shape matrices, got {self._x.shape} and {self._z.shape}")
        rows, n = self._x.shape
        if n < 1:
            raise TableauError("a tableau needs at least one qubit")
        if self._r.shape != (rows,):
            raise TableauError(f"phase vector must have {rows} entries, got {self._r.shape[0]}")
        expected = n if self._mode is TableauMode.STATE else 2 * n
        if rows != expected:
            raise TableauError(f"{self._mode.value} tableau on {n} qubits needs {expected} rows, got {rows}")
        for array in (self._x, self._z, self._r):
            array.flags.writeable = False

    @property
    def x(self) -> np.ndarray:
        """Read-only X-bit matrix."""
        return self._x

    @property
    def z(self) -> np.ndarray:
        """Read-only Z-bit matrix."""
        return self._z

    @property
    def r(self) -> np.ndarray:
        """Read-only phase vector."""
        return self._r

    @property
    def mode(self) -> TableauMode:
        """State or unitary mode."""
        return self._mode

    @property
    def num_qubits(self) -> int:
        """Number of qubits n."""
        return int(self._x.shape[1])

    @property
    def num_rows(self) -> int:
        """Number of generator rows (n or 2n)."""
        return int(self._x.shape[0])

    @property
    def rows(self) -> List[PauliRow]:
        """All rows as signed Pauli strings."""
        return [self.row(i) for i in range(self.num_rows)]

    def row(self, index: int) -> PauliRow:
        """Row ``index`` as a signed Pauli string."""
        return PauliRow(
            x=tuple(bool(b) for b in self._x[index]),
            z=tuple(bool(b) for b in self._z[index]),
            r=bool(self._r[index]),
        )

    def stabilizer_part(self) -> "Tableau":
        """The n stabilizer rows as a state tableau (identity for state tableaus)."""
        if self._mode is TableauMode.STATE:
            return self
        n = self.num_qubits
        return Tableau(self._x[n:], self._z[n:], self._r[n:], TableauMode.STATE)

    @classmethod
    def from_rows(cls, rows: Iterable[Union[PauliRow, str]], mode: Optional[TableauMode] = None) -> "Tableau":
        """Build a tableau from Pauli rows or strings such as ``"+XX"``.

        The mode is inferred from the row count when not given.
        """
        parsed = [PauliRow.from_string(row) if isinstance(row, str) else row for row in rows]
        if not parsed:
            raise TableauError("a tableau needs at least one row")
        n = parsed[0].num_qubits
        if any(row.num_qubits != n for row in parsed):
            raise TableauError("all rows must act on the same number of qubits")
        if mode is None:
            mode = TableauMode.UNITARY if len(parsed) == 2 * n else TableauMode.STATE
        return cls(
            [row.x for row in parsed],
            [row.z for row in parsed],
            [row.r for row in parsed],
            mode,
        )

    def copy_arrays(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Writable copies of (x, z, r)."""
        return self._x.copy(), self._z.copy(), self._r.copy()

    def symplectic_matrix(self) -> np.ndarray:
        """Pairwise symplectic inner products of the rows (0 = commute)."""
        x = self._x.astype(np.int64)
        z = self._z.astype(np.int64)
        return (x @ z.T + z @ x.T) % 2

    def validate(self) -> "Tableau":
        """Check the commutation and rank invariants for the tableau's mode.

        Returns:
            ``self``, for chaining.

        Raises:
            TableauError: On any violated invariant.
        """
        n = self.num_qubits
        products = self.symplectic_matrix()
        if self._mode is TableauMode.STATE:
            if products.any():
                raise TableauError("stabilizer rows do not pairwise commute")
            if gf2_rank(np.concatenate([self._x, self._z], axis=1)) != n:
                raise TableauError("stabilizer rows are not independent")
        else:
            expected = np.zeros((2 * n, 2 * n), dtype=np.int64)
            expected[:n, n:] = np.eye(n, dtype=np.int64)
            expected[n:, :n] = np.eye(n, dtype=np.int64)
            if not np.array_equal(products, expected):
                raise TableauError("rows do not form destabilizer/stabilizer pairs")
        return self

    def to_bits(self) -> np.ndarray:
        """Flat payload bits: x row-major, then z row-major, then r."""
        return np.concatenate([self._x.reshape(-1), self._z.reshape(-1), self._r])

    def key(self) -> bytes:
        """Compact hashable key of the bit payload (mode and n not included)."""
        return np.packbits(self.to_bits()).tobytes()

    def __eq__(self, other: object) -> bool:
        """Bit-exact equality including mode and phases."""
        if not isinstance(other, Tableau):
            return NotImplemented
        return (
            self._mode is other._mode
            and self._x.shape == other._x.shape
            and np.array_equal(self._x, other._x)
            and np.array_equal(self._z, other._z)
            and np.array_equal(self._r, other._r)
        )

    def __hash__(self) -> int:
        """Hash of mode, shape and payload."""
        return hash((self._mode, self._x.shape, self.key()))

    def __repr__(self) -> str:
        """Show rows in the tableau text form."""
        return f"Tableau({', '.join(str(row) for row in self.rows)})"


def gf2_rank(matrix: np.ndarray) -> int:
    """Rank of a 0/1 matrix over GF(2)."""
    m = (np.array(matrix, dtype=np.uint8) & 1).copy()
    rank = 0
    rows, cols = m.shape
    for col in range(cols):
        pivots = np.nonzero(m[rank:, col])[0]
        if len(pivots) == 0:
            continue
        pivot = rank + int(pivots[0])
        if pivot != rank:
            m[[rank, pivot]] = m[[pivot, rank]]
        others = np.nonzero(m[:, col])[0]
        for row in others:
            if row != rank:
                m[row] ^= m[rank]
        rank += 1
        if rank == rows:
            break
    return rank


def gf2_solve(matrix: np.ndarray, rhs: np.ndarray) -> Optional[np.ndarray]:
    """Solve ``matrix @ v = rhs`` over GF(2); return one solution or None."""
    a = (np.array(matrix, dtype=np.uint8) & 1).copy()
    b = (np.array(rhs, dtype=np.uint8).reshape(-1) & 1).copy()
    rows, cols = a.shape
    pivot_cols: List[int] = []
    rank = 0
    for col in range(cols):
        pivots = np.nonzero(a[rank:, col])[0]
        if len(pivots) == 0:
            continue
        pivot = rank + int(pivots[0])
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
            b[[rank, pivot]] = b[[pivot, rank]]
        for row in np.nonzero(a[:, col])[0]:
            if row != rank:
                a[row] ^= a[rank]
                b[row] ^= b[rank]
        pivot_cols.append(col)
        rank += 1
        if rank == rows:
            break
    if b[rank:].any():
        return None
    solution = np.zeros(cols, dtype=np.uint8)
    for row, col in enumerate(pivot_cols):
        solution[col] = b[row]
    return solution


def _h_inplace(x: np.ndarray, z: np.ndarray, r: np.ndarray, q: int) -> None:
    xq = x[:, q].copy()
    zq = z[:, q].copy()
    r ^= xq & zq
    x[:, q] = zq
    z[:, q] = xq


def _s_inplace(x: np.ndarray, z: np.ndarray, r: np.ndarray, q: int) -> None:
    r ^= x[:, q] & z[:, q]
    z[:, q] ^= x[:, q]


def _cnot_inplace(x: np.ndarray, z: np.ndarray, r: np.ndarray, c: int, t: int) -> None:
    xc = x[:, c].copy()
    zt = z[:, t].copy()
    r ^= xc & zt & (x[:, t] ^ z[:, c] ^ 1)
    x[:, t] ^= xc
    z[:, c] ^= zt


def apply_gate_inplace(x: np.ndarray, z: np.ndarray, r: np.ndarray, gate: Gate) -> None:
    """Apply ``gate`` to writable tableau arrays."""
    if gate.kind is GateKind.H:
        _h_inplace(x, z, r, gate.q0)
    elif gate.kind is GateKind.S:
        _s_inplace(x, z, r, gate.q0)
    elif gate.kind is GateKind.CNOT and gate.q1 is not None:
        _cnot_inplace(x, z, r, gate.q0, gate.q1)
    else:
        raise CircuitError(f"not a Clifford gate of the {{H, S, CNOT}} set: {gate!r}")


def _phase_exponent(x1: np.ndarray, z1: np.ndarray, x2: np.ndarray, z2: np.ndarray) -> int:
    """Sum over qubits of the power of i picked up by multiplying P1 by P2."""
    x1 = x1.astype(np.int64)
    z1 = z1.astype(np.int64)
    x2 = x2.astype(np.int64)
    z2 = z2.astype(np.int64)
    g = np.where(
        (x1 == 1) & (z1 == 1),
        z2 - x2,
        np.where((x1 == 1) & (z1 == 0), z2 * (2 * x2 - 1), np.where((x1 == 0) & (z1 == 1), x2 * (1 - 2 * z2), 0)),
    )
    return int(g.sum())


def rowsum_inplace(x: np.ndarray, z: np.ndarray, r: np.ndarray, target: int, source: int) -> None:
    """Multiply row ``source`` into row ``target`` of writable arrays, tracking the sign."""
    exponent = 2 * int(r[target]) + 2 * int(r[source]) + _phase_exponent(x[source], z[source], x[target], z[target])
    exponent %= 4
    if exponent % 2:
        raise TableauError(f"rows {source} and {target} anticommute; their product is not Hermitian")
    r[target] = exponent // 2
    x[target] ^= x[source]
    z[target] ^= z[source]


def identity_tableau(n: int, mode: TableauMode = TableauMode.STATE) -> Tableau:
    """Tableau of |0...0> (State) or of the identity unitary (Unitary).

    Raises:
        TableauError: If ``n < 1``.
    """
    if n < 1:
        raise TableauError(f"number of qubits must be positive, got {n}")
    eye = np.eye(n, dtype=np.uint8)
    zero = np.zeros((n, n), dtype=np.uint8)
    if TableauMode(mode) is TableauMode.STATE:
        return Tableau(zero, eye, np.zeros(n, dtype=np.uint8), TableauMode.STATE)
    return Tableau(
        np.concatenate([eye, zero]),
        np.concatenate([zero, eye]),
        np.zeros(2 * n, dtype=np.uint8),
        TableauMode.UNITARY,
    )


def _check_qubit(t: Tableau, q: int) -> None:
    if not 0 <= q < t.num_qubits:
        raise TableauError(f"qubit index {q} out of range 0..{t.num_qubits - 1}")


def apply_h(t: Tableau, q: int) -> Tableau:
    """Hadamard on qubit ``q``: r ^= x_q z_q, then swap x_q and z_q."""
    _check_qubit(t, q)
    x, z, r = t.copy_arrays()
    _h_inplace(x, z, r, q)
    return Tableau(x, z, r, t.mode)


def apply_s(t: Tableau, q: int) -> Tableau:
    """Phase gate on qubit ``q``: r ^= x_q z_q, then z_q ^= x_q."""
    _check_qubit(t, q)
    x, z, r = t.copy_arrays()
    _s_inplace(x, z, r, q)
    return Tableau(x, z, r, t.mode)


def apply_cnot(t: Tableau, c: int, tq: int) -> Tableau:
    """CNOT with control ``c`` and target ``tq``.

    r ^= x_c z_t (x_t ^ z_c ^ 1), x_t ^= x_c, z_c ^= z_t, all on pre-update bits.
    """
    _check_qubit(t, c)
    _check_qubit(t, tq)
    if c == tq:
        raise TableauError(f"CNOT control and target must differ, got {c}")
    x, z, r = t.copy_arrays()
    _cnot_inplace(x, z, r, c, tq)
    return Tableau(x, z, r, t.mode)


def apply_gate(t: Tableau, gate: Gate) -> Tableau:
    """Apply a single {H, S, CNOT} gate."""
    for qubit in gate.qubits:
        _check_qubit(t, qubit)
    x, z, r = t.copy_arrays()
    apply_gate_inplace(x, z, r, gate)
    return Tableau(x, z, r, t.mode)


def simulate(circuit: CliffordCircuit, start: Optional[Tableau] = None) -> Tableau:
    """Run ``circuit`` on ``start`` (default |0...0>) with the tableau update rules.

    Raises:
        CircuitError: If the qubit counts differ or a gate is not in {H, S, CNOT}.
    """
    if start is None:
        start = identity_tableau(circuit.num_qubits)
    if circuit.num_qubits != start.num_qubits:
        raise CircuitError(f"circuit has {circuit.num_qubits} qubits but tableau has {start.num_qubits}")
    x, z, r = start.copy_arrays()
    for gate in circuit.gates:
        apply_gate_inplace(x, z, r, gate)
    return Tableau(x, z, r, start.mode)


def rowsum(t: Tableau, target_row: int, source_row: int) -> Tableau:
    """Replace row ``target_row`` with the product source * target, tracking the sign exactly.

    Raises:
        TableauError: If an index is out of range, the indices are equal, or the
            two rows anticommute.
    """
    for index in (target_row, source_row):
        if not 0 <= index < t.num_rows:
            raise TableauError(f"row index {index} out of range 0..{t.num_rows - 1}")
    if target_row == source_row:
        raise TableauError("rowsum needs two distinct rows")
    x, z, r = t.copy_arrays()
    rowsum_inplace(x, z, r, target_row, source_row)
    return Tableau(x, z, r, t.mode)


def canonicalize(t: Tableau) -> Tableau:
    """Reduced row-echelon form of [X|Z] reached through rowsums and row swaps.

    Columns are ordered x_0..x_{n-1}, z_0..z_{n-1}; pivots are chosen left to
    right and every pivot column is cleared in all other rows, so the result is
    unique for a stabilizer group, signs included.

    Raises:
        TableauError: For unitary tableaus or rank-deficient input.
    """
    if t.mode is not TableauMode.STATE:
        raise TableauError("canonicalize is defined for state tableaus only")
    n = t.num_qubits
    x, z, r = t.copy_arrays()
    pivot_row = 0
    for col in range(2 * n):
        block = x if col < n else z
        q = col % n
        candidates = np.nonzero(block[pivot_row:, q])[0]
        if len(candidates) == 0:
            continue
        k = pivot_row + int(candidates[0])
        if k != pivot_row:
            x[[pivot_row, k]] = x[[k, pivot_row]]
            z[[pivot_row, k]] = z[[k, pivot_row]]
            r[[pivot_row, k]] = r[[k, pivot_row]]
        for j in range(n):
            if j != pivot_row and block[j, q]:
                rowsum_inplace(x, z, r, j, pivot_row)
        pivot_row += 1
        if pivot_row == n:
            break
    if pivot_row < n:
        raise TableauError(f"tableau has rank {pivot_row} < {n}; rows are not independent")
    return Tableau(x, z, r, TableauMode.STATE)


def equivalent(a: Tableau, b: Tableau) -> bool:
    """Whether two tableaus describe the same state (canonical compare) or unitary (exact compare)."""
    if a.mode is not b.mode or a.num_qubits != b.num_qubits:
        return False
    if a.mode is TableauMode.UNITARY:
        return a == b
    return canonicalize(a) == canonicalize(b)


def random_tableau(n: int, seed: int, mode: TableauMode = TableauMode.STATE) -> Tableau:
    """Tableau reached by 5n^2 uniformly random {H, S, CNOT} gates from the identity.

    Deterministic in ``(n, seed)``; the seed is taken modulo 2^64.
    """
    rng = np.random.default_rng(seed & _SEED_MASK)
    gates = clifford_gates(n)
    x, z, r = identity_tableau(n, mode).copy_arrays()
    for index in rng.integers(len(gates), size=RANDOM_CIRCUIT_FACTOR * n * n):
        apply_gate_inplace(x, z, r, gates[int(index)])
    return Tableau(x, z, r, mode)
