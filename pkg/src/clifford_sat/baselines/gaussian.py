"""Gaussian-elimination baseline synthesis for stabilizer states.

The target is reduced to |0...0> with tableau operations: Hadamards until the
X-block has full rank, row operations to make it the identity, S-dagger and
CZ to clear the (symmetric) Z-block, Hadamards on every qubit, and an X flip
for each negative sign. The circuit is the inverse of that reduction,
followed by a peephole pass.
"""

import logging
from typing import List, Sequence

import numpy as np

from ..circuit.models import CliffordCircuit, Gate, GateKind
from ..exceptions import SynthesisError, TableauError
from ..stabilizer.models import TableauMode
from ..stabilizer.tableau import (
    Tableau,
    apply_gate_inplace,
    equivalent,
    gf2_solve,
    identity_tableau,
    rowsum_inplace,
    simulate,
)

logger = logging.getLogger(__name__)


class _Reduction:
    """Mutable copy of a state tableau plus the inverse of every operation applied so far."""

    def __init__(self, target: Tableau):
        self.x, self.z, self.r = target.copy_arrays()
        self.n = target.num_qubits
        self.inverses: List[List[Gate]] = []

    def apply(self, gates: Sequence[Gate], inverse: Sequence[Gate]) -> None:
        for gate in gates:
            apply_gate_inplace(self.x, self.z, self.r, gate)
        self.inverses.append(list(inverse))

    def h(self, q: int) -> None:
        self.apply([Gate.h(q)], [Gate.h(q)])

    def s_dagger(self, q: int) -> None:
        self.apply([Gate.s(q)] * 3, [Gate.s(q)])

    def cz(self, a: int, b: int) -> None:
        gadget = [Gate.h(b), Gate.cnot(a, b), Gate.h(b)]
        self.apply(gadget, gadget)

    def pauli_x(self, q: int) -> None:
        # H S S H = H Z H = X
        gadget = [Gate.h(q), Gate.s(q), Gate.s(q), Gate.h(q)]
        self.apply(gadget, gadget)

    def _swap_rows(self, a: int, b: int) -> None:
        for array in (self.x, self.z):
            array[[a, b]] = array[[b, a]]
        self.r[[a, b]] = self.r[[b, a]]

    def reduce_x(self) -> List[int]:
        """Row-reduce the X-block in place; return the pivot column of each leading row."""
        pivots: List[int] = []
        for col in range(self.n):
            row = len(pivots)
            candidates = np.nonzero(self.x[row:, col])[0]
            if len(candidates) == 0:
                continue
            k = row + int(candidates[0])
            if k != row:
                self._swap_rows(row, k)
            for other in range(self.n):
                if other != row and self.x[other, col]:
                    rowsum_inplace(self.x, self.z, self.r, other, row)
            pivots.append(col)
            if len(pivots) == self.n:
                break
        return pivots

    def circuit_gates(self) -> List[Gate]:
        return [gate for inverse in reversed(self.inverses) for gate in inverse]


def peephole(gates: Sequence[Gate]) -> List[Gate]:
    """Cancel adjacent H.H and CNOT.CNOT pairs and runs of four S on one qubit."""
    out: List[Gate] = []
    for gate in gates:
        if gate.kind in (GateKind.H, GateKind.CNOT) and out and out[-1] == gate:
            out.pop()
        elif gate.kind is GateKind.S and len(out) >= 3 and all(g == gate for g in out[-3:]):
            del out[-3:]
        else:
            out.append(gate)
    return out


def baseline_synthesize(target: Tableau) -> CliffordCircuit:
    """Deterministic polynomial-time circuit preparing the state ``target`` from |0...0>.

    Raises:
        TableauError: If ``target`` is not a valid state tableau.
        SynthesisError: If the result fails simulation against the target.
    """
    if target.mode is not TableauMode.STATE:
        raise TableauError("baseline synthesis supports state tableaus only")
    target.validate()
    n = target.num_qubits
    red = _Reduction(target)

    pivots = red.reduce_x()
    if not pivots:
        # A computational basis state |b>: each row (-1)^r Z^z fixes z.b = r.
        bits = gf2_solve(red.z, red.r)
        if bits is None:
            raise TableauError("inconsistent Z-type stabilizer signs")
        for q in np.nonzero(bits)[0]:
            red.pauli_x(int(q))
    else:
        while len(pivots) < n:
            row = len(pivots)
            free = [q for q in range(n) if q not in pivots and red.z[row, q]]
            red.h(free[0])
            pivots = red.reduce_x()
        for q in range(n):
            if red.z[q, q]:
                red.s_dagger(q)
        for a in range(n):
            for b in range(a + 1, n):
                if red.z[a, b]:
                    red.cz(a, b)
        for q in range(n):
            red.h(q)
        for q in range(n):
            if red.r[q]:
                red.pauli_x(q)

    reduced = Tableau(red.x, red.z, red.r, TableauMode.STATE)
    if not equivalent(reduced, identity_tableau(n)):
        raise SynthesisError("baseline reduction did not reach |0...0>")

    raw = red.circuit_gates()
    gates = peephole(raw)
    circuit = CliffordCircuit(num_qubits=n, gates=tuple(gates))
    if not equivalent(simulate(circuit), target):
        raise SynthesisError("baseline circuit does not prepare the target state")
    logger.debug("Baseline: %d gates (%d before peephole), %d CNOT", len(gates), len(raw), circuit.two_qubit_count())
    return circuit
