"""Breadth-first optimality oracle for stabilizer states on up to three qubits.

States are deduplicated by the key of their canonical tableau, so each entry
holds the minimal gate count over all circuits within the explored bound and
a parent pointer from which one witness circuit is rebuilt.
"""

import logging
import struct
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..circuit.models import CliffordCircuit, Gate, clifford_gates
from ..exceptions import OracleError
from ..stabilizer.models import TableauMode
from ..stabilizer.tableau import Tableau, apply_gate, canonicalize, identity_tableau

logger = logging.getLogger(__name__)

MAX_BFS_QUBITS = 3
MAX_BFS_GATES = 12

CACHE_MAGIC = b"CSATBFS1"
_HEADER = struct.Struct("<8sBBI")  # magic, n, max_gates, record count
_KEY_LENGTH = struct.Struct("<H")
_RECORD_TAIL = struct.Struct("<BiH")  # count, parent record index (-1 at the root), gate index
_NO_GATE = 0xFFFF


@dataclass(frozen=True)
class BfsEntry:
    """Minimal gate count of one state plus the last gate of a witness."""

    count: int
    parent: Optional[bytes] = None
    gate: Optional[Gate] = None


def _check_limits(num_qubits: int, max_gates: int) -> None:
    if not 1 <= num_qubits <= MAX_BFS_QUBITS:
        raise ValueError(f"BFS oracle supports 1..{MAX_BFS_QUBITS} qubits, got {num_qubits}")
    if not 0 <= max_gates <= MAX_BFS_GATES:
        raise ValueError(f"max_gates must be within 0..{MAX_BFS_GATES}, got {max_gates}")


def _state_key(t: Tableau) -> bytes:
    return canonicalize(t.stabilizer_part()).key()


class BfsDatabase:
    """Canonical state key -> minimal gate count and witness, up to ``max_gates`` gates."""

    def __init__(self, num_qubits: int, max_gates: int, gates: Optional[Sequence[Gate]] = None):
        """Create an empty database; call ``build`` or ``load`` to fill it.

        Args:
            num_qubits: Qubit count, at most ``MAX_BFS_QUBITS``.
            max_gates: Exploration bound, at most ``MAX_BFS_GATES``.
            gates: Expansion order of the gate set; defaults to ``clifford_gates``.
        """
        _check_limits(num_qubits, max_gates)
        self.num_qubits = num_qubits
        self.max_gates = max_gates
        self.gates: Tuple[Gate, ...] = tuple(gates) if gates is not None else clifford_gates(num_qubits)
        self.entries: Dict[bytes, BfsEntry] = {}
        self.exhausted = False

    @classmethod
    def build(cls, num_qubits: int, max_gates: int, gates: Optional[Sequence[Gate]] = None) -> "BfsDatabase":
        """Run the BFS from |0...0>."""
        db = cls(num_qubits, max_gates, gates)
        root = canonicalize(identity_tableau(num_qubits))
        db.entries[root.key()] = BfsEntry(0)
        frontier = [root]
        for depth in range(1, max_gates + 1):
            next_frontier: List[Tableau] = []
            for state in frontier:
                parent = state.key()
                for gate in db.gates:
                    child = canonicalize(apply_gate(state, gate))
                    key = child.key()
                    if key not in db.entries:
                        db.entries[key] = BfsEntry(depth, parent, gate)
                        next_frontier.append(child)
            frontier = next_frontier
            logger.debug("BFS n=%d depth %d: %d new states", num_qubits, depth, len(frontier))
            if not frontier:
                db.exhausted = True
                break
        return db

    def __len__(self) -> int:
        """Number of states found."""
        return len(self.entries)

    def count(self, target: Tableau) -> Optional[int]:
        """Minimal gate count of ``target``, or None if it lies beyond the bound."""
        entry = self.entries.get(self._key_for(target))
        return None if entry is None else entry.count

    def witness(self, target: Tableau) -> Optional[CliffordCircuit]:
        """One minimal circuit preparing ``target``, or None."""
        key = self._key_for(target)
        if key not in self.entries:
            return None
        return CliffordCircuit(num_qubits=self.num_qubits, gates=tuple(self._witness_from_key(key)))

    def lookup(self, target: Tableau) -> Optional[Tuple[int, CliffordCircuit]]:
        """Minimal count and witness together."""
        count = self.count(target)
        circuit = self.witness(target)
        if count is None or circuit is None:
            return None
        return count, circuit

    def _key_for(self, target: Tableau) -> bytes:
        if target.num_qubits != self.num_qubits:
            raise ValueError(f"target has {target.num_qubits} qubits, database has {self.num_qubits}")
        return _state_key(target)

    def save(self, path: Union[str, Path]) -> Path:
        """Write the binary cache and a ``.idx`` text index next to it; return the index path."""
        path = Path(path)
        standard = clifford_gates(self.num_qubits)
        order = {key: index for index, key in enumerate(self.entries)}
        with path.open("wb") as f:
            f.write(_HEADER.pack(CACHE_MAGIC, self.num_qubits, self.max_gates, len(self.entries)))
            for key, entry in self.entries.items():
                parent = -1 if entry.parent is None else order[entry.parent]
                gate = _NO_GATE if entry.gate is None else standard.index(entry.gate)
                f.write(_KEY_LENGTH.pack(len(key)))
                f.write(key)
                f.write(_RECORD_TAIL.pack(entry.count, parent, gate))

        index_path = path.with_name(path.name + ".idx")
        lines = [f"# n={self.num_qubits} max_gates={self.max_gates} states={len(self.entries)}"]
        for key in self.entries:
            circuit = self._witness_from_key(key)
            lines.append(f"{key.hex()}\t{self.entries[key].count}\t{'; '.join(str(g) for g in circuit)}")
        index_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        logger.info("Saved BFS cache with %d states to %s", len(self.entries), path)
        return index_path

    def _witness_from_key(self, key: bytes) -> List[Gate]:
        gates: List[Gate] = []
        current: Optional[bytes] = key
        while current is not None:
            entry = self.entries[current]
            if entry.gate is not None:
                gates.append(entry.gate)
            current = entry.parent
        return list(reversed(gates))

    @classmethod
    def load(cls, path: Union[str, Path]) -> "BfsDatabase":
        """Read a binary cache written by ``save``.

        Raises:
            OracleError: On a wrong magic header or a truncated file.
        """
        data = Path(path).read_bytes()
        if len(data) < _HEADER.size:
            raise OracleError(f"{path}: truncated BFS cache header")
        magic, num_qubits, max_gates, count = _HEADER.unpack_from(data, 0)
        if magic != CACHE_MAGIC:
            raise OracleError(f"{path}: not a BFS cache (magic {magic!r})")
        db = cls(num_qubits, max_gates)
        standard = clifford_gates(num_qubits)
        keys: List[bytes] = []
        offset = _HEADER.size
        try:
            for _ in range(count):
                (length,) = _KEY_LENGTH.unpack_from(data, offset)
                offset += _KEY_LENGTH.size
                key = data[offset : offset + length]
                if len(key) != length:
                    raise OracleError(f"{path}: truncated record")
                offset += length
                depth, parent, gate = _RECORD_TAIL.unpack_from(data, offset)
                offset += _RECORD_TAIL.size
                db.entries[key] = BfsEntry(
                    depth,
                    None if parent < 0 else keys[parent],
                    None if gate == _NO_GATE else standard[gate],
                )
                keys.append(key)
        except struct.error as e:
            raise OracleError(f"{path}: truncated record") from e
        db.exhausted = max((entry.count for entry in db.entries.values()), default=0) < max_gates
        return db


@lru_cache(maxsize=16)
def _shared_database(num_qubits: int, max_gates: int) -> BfsDatabase:
    return BfsDatabase.build(num_qubits, max_gates)


def bfs_optimal(num_qubits: int, target: Tableau, max_gates: int) -> Optional[Tuple[int, CliffordCircuit]]:
    """Minimal gate count and one witness for the state ``target``, or None beyond ``max_gates``.

    Raises:
        ValueError: If ``num_qubits`` or ``max_gates`` exceed the oracle limits.
    """
    _check_limits(num_qubits, max_gates)
    return _shared_database(num_qubits, max_gates).lookup(target)


def bfs_min_two_qubit(num_qubits: int, target: Tableau, max_gates: int) -> Optional[int]:
    """Fewest CNOTs over all circuits of at most ``max_gates`` gates preparing ``target``.

    A state reached at a later layer is kept only if it improves on every
    earlier layer, since an earlier arrival leaves at least as much room.

    Raises:
        ValueError: If ``num_qubits`` or ``max_gates`` exceed the oracle limits.
    """
    _check_limits(num_qubits, max_gates)
    if target.num_qubits != num_qubits:
        raise ValueError(f"target has {target.num_qubits} qubits, expected {num_qubits}")
    goal = _state_key(target)
    gates = clifford_gates(num_qubits)
    states: Dict[bytes, Tableau] = {}
    successors: Dict[Tuple[bytes, int], bytes] = {}

    root = canonicalize(identity_tableau(num_qubits, TableauMode.STATE))
    states[root.key()] = root
    best: Dict[bytes, int] = {root.key(): 0}
    layer: Dict[bytes, int] = {root.key(): 0}
    for _ in range(max_gates):
        next_layer: Dict[bytes, int] = {}
        for key, cost in layer.items():
            for index, gate in enumerate(gates):
                child = successors.get((key, index))
                if child is None:
                    child_state = canonicalize(apply_gate(states[key], gate))
                    child = child_state.key()
                    states.setdefault(child, child_state)
                    successors[(key, index)] = child
                child_cost = cost + (1 if gate.is_two_qubit else 0)
                if child_cost < best.get(child, child_cost + 1) and child_cost < next_layer.get(child, child_cost + 1):
                    next_layer[child] = child_cost
        for key, cost in next_layer.items():
            best[key] = min(cost, best.get(key, cost))
        layer = next_layer
        if not layer:
            break
    return best.get(goal)
