"""Bounded SAT encoding of Clifford synthesis.

The formula unrolls the tableau over ``T`` gate slots. Boundary ``t`` holds
the tableau bits after ``t`` slots; slot ``t`` picks exactly one gate choice
(or NONE) and relates boundary ``t`` to ``t + 1`` through the tableau update
rules, each guarded by its choice variable. Bits a selected choice does not
touch are carried over by frame clauses.
"""

import logging
from typing import Dict, List, Mapping

from ..circuit.models import CliffordCircuit, Gate, GateKind
from ..cnf.formula import CnfFormula, add_and_equals, add_at_most_k, add_exactly_one, add_implied_xor
from ..exceptions import EncodingError
from ..stabilizer.models import TableauMode
from ..stabilizer.tableau import Tableau, canonicalize, equivalent, identity_tableau, simulate
from .choices import GateChoice, enumerate_choices
from .models import EncodedInstance, MatchMode, SynthesisInstance, TableauColumn

logger = logging.getLogger(__name__)

X, Z, R = TableauColumn.X, TableauColumn.Z, TableauColumn.R


def _uses_canonical_match(inst: SynthesisInstance) -> bool:
    return inst.match_mode is MatchMode.CANONICAL and inst.target.mode is TableauMode.STATE


def _is_zero_state(t: Tableau) -> bool:
    return t.mode is TableauMode.STATE and canonicalize(t) == identity_tableau(t.num_qubits)


class _Boundary:
    """Variables of one tableau boundary, indexed [row][qubit]."""

    def __init__(self, enc: EncodedInstance, step: int, rows: int, n: int):
        f = enc.formula
        self.x: List[List[int]] = []
        self.z: List[List[int]] = []
        self.r: List[int] = []
        for i in range(rows):
            x_row: List[int] = []
            z_row: List[int] = []
            for q in range(n):
                x_row.append(f.new_var(f"x[{step}][{i}][{q}]"))
                enc.tableau_vars[(step, i, X, q)] = x_row[-1]
            for q in range(n):
                z_row.append(f.new_var(f"z[{step}][{i}][{q}]"))
                enc.tableau_vars[(step, i, Z, q)] = z_row[-1]
            self.x.append(x_row)
            self.z.append(z_row)
            self.r.append(f.new_var(f"r[{step}][{i}]"))
            enc.tableau_vars[(step, i, R, 0)] = self.r[-1]

    def fix(self, f: CnfFormula, t: Tableau) -> None:
        """Unit clauses pinning every bit to ``t``."""
        for i in range(t.num_rows):
            for q in range(t.num_qubits):
                f.add_clause([self.x[i][q] if t.x[i, q] else -self.x[i][q]])
                f.add_clause([self.z[i][q] if t.z[i, q] else -self.z[i][q]])
            f.add_clause([self.r[i] if t.r[i] else -self.r[i]])

    def fix_z_strings(self, f: CnfFormula) -> None:
        """Unit clauses making every row a positive Z-string (X-block and phases 0)."""
        for i, x_row in enumerate(self.x):
            for var in x_row:
                f.add_clause([-var])
            f.add_clause([-self.r[i]])


def _encode_step(
    enc: EncodedInstance,
    step: int,
    before: _Boundary,
    after: _Boundary,
    choice_vars: Dict[GateChoice, int],
) -> None:
    f = enc.formula
    rows = len(before.r)
    n = len(before.x[0])

    x_writers: List[List[int]] = [[] for _ in range(n)]
    z_writers: List[List[int]] = [[] for _ in range(n)]
    for choice, var in choice_vars.items():
        gate = choice.gate
        if gate is None:
            continue
        if gate.kind is GateKind.H:
            x_writers[gate.q0].append(var)
            z_writers[gate.q0].append(var)
        elif gate.kind is GateKind.S:
            z_writers[gate.q0].append(var)
        elif gate.q1 is not None:
            x_writers[gate.q1].append(var)
            z_writers[gate.q0].append(var)

    for i in range(rows):
        x0, z0, r0 = before.x[i], before.z[i], before.r[i]
        x1, z1, r1 = after.x[i], after.z[i], after.r[i]

        # y[q] = x_q & z_q feeds the phase update of H(q) and S(q).
        y = [f.new_var() for _ in range(n)]
        for q in range(n):
            add_and_equals(f, y[q], [x0[q], z0[q]])
        # CNOT phase term, shared by every CNOT choice of this row and step.
        a = f.new_var()

        for q in range(n):
            f.add_clause([*x_writers[q], -x0[q], x1[q]])
            f.add_clause([*x_writers[q], x0[q], -x1[q]])
            f.add_clause([*z_writers[q], -z0[q], z1[q]])
            f.add_clause([*z_writers[q], z0[q], -z1[q]])

        for choice, g in choice_vars.items():
            enc.row_update_groups.append((step, choice, i))
            gate = choice.gate
            if gate is None:
                add_implied_xor(f, g, r1, [r0])
            elif gate.kind is GateKind.H:
                q = gate.q0
                add_implied_xor(f, g, x1[q], [z0[q]])
                add_implied_xor(f, g, z1[q], [x0[q]])
                add_implied_xor(f, g, r1, [r0, y[q]])
            elif gate.kind is GateKind.S:
                q = gate.q0
                add_implied_xor(f, g, z1[q], [z0[q], x0[q]])
                add_implied_xor(f, g, r1, [r0, y[q]])
            else:
                c, t = gate.q0, gate.q1
                assert t is not None
                # g -> (a <-> x_c & z_t & (x_t == z_c))
                f.add_clause([-g, -x0[c], -z0[t], x0[t], z0[c], a])
                f.add_clause([-g, -x0[c], -z0[t], -x0[t], -z0[c], a])
                f.add_clause([-g, -a, x0[c]])
                f.add_clause([-g, -a, z0[t]])
                f.add_clause([-g, -a, -x0[t], z0[c]])
                f.add_clause([-g, -a, x0[t], -z0[c]])
                add_implied_xor(f, g, r1, [r0, a])
                add_implied_xor(f, g, x1[t], [x0[t], x0[c]])
                add_implied_xor(f, g, z1[c], [z0[c], z0[t]])


def _add_symmetry_breaking(enc: EncodedInstance) -> None:
    f = enc.formula
    none_choice = enc.choices[0]
    for step in range(enc.time_steps - 1):
        f.add_clause([-enc.choice_vars[(step, none_choice)], enc.choice_vars[(step + 1, none_choice)]])
        for choice in enc.choices:
            if choice.gate is not None and choice.gate.kind in (GateKind.H, GateKind.CNOT):
                f.add_clause([-enc.choice_vars[(step, choice)], -enc.choice_vars[(step + 1, choice)]])


def encode(inst: SynthesisInstance) -> EncodedInstance:
    """Build the CNF for "some circuit of at most T gates maps ``initial`` to ``target``".

    In Canonical mode (state tableaus only) the last boundary is fixed to the
    canonical form of the target and the first boundary is relaxed to any set
    of positive Z-strings, so any generator set of |0...0> may be the
    preimage. Exact mode fixes both boundaries bit by bit.
    ``two_qubit_bound`` and ``gate_bound`` add sequential-counter limits on
    the CNOT choices and on the steps holding a gate.

    Raises:
        EncodingError: If Canonical mode is requested from an initial tableau
            other than |0...0>.
    """
    n = inst.num_qubits
    rows = inst.target.num_rows
    canonical = _uses_canonical_match(inst)
    if canonical and not _is_zero_state(inst.initial):
        raise EncodingError("canonical matching requires the initial tableau to be |0...0>")

    choices = tuple(enumerate_choices(n))
    f = CnfFormula()
    enc = EncodedInstance(instance=inst, formula=f, choices=choices)
    enc.final_target = canonicalize(inst.target) if canonical else inst.target

    boundaries = [_Boundary(enc, 0, rows, n)]
    for step in range(inst.time_steps):
        step_vars: Dict[GateChoice, int] = {}
        for choice in choices:
            var = f.new_var(f"choice[{step}]:{choice.label}")
            enc.choice_vars[(step, choice)] = var
            step_vars[choice] = var
            if choice.is_two_qubit:
                enc.cnot_literals.append(var)
            elif choice.gate is None:
                enc.gate_literals.append(-var)
        add_exactly_one(f, step_vars.values())
        boundaries.append(_Boundary(enc, step + 1, rows, n))
        _encode_step(enc, step, boundaries[step], boundaries[step + 1], step_vars)

    if canonical:
        boundaries[0].fix_z_strings(f)
    else:
        boundaries[0].fix(f, inst.initial)
    boundaries[-1].fix(f, enc.final_target)

    if inst.symmetry_breaking:
        _add_symmetry_breaking(enc)

    bound = inst.two_qubit_bound
    if bound is not None and bound < len(enc.cnot_literals):
        add_at_most_k(f, enc.cnot_literals, bound)
    if inst.gate_bound is not None and inst.gate_bound < inst.time_steps:
        add_at_most_k(f, enc.gate_literals, inst.gate_bound)

    logger.debug(
        "Encoded n=%d T=%d K=%s G=%s mode=%s: %d vars, %d clauses",
        n,
        inst.time_steps,
        bound,
        inst.gate_bound,
        "canonical" if canonical else "exact",
        f.num_vars,
        f.num_clauses,
    )
    return enc


def boundary_tableau(enc: EncodedInstance, model: Mapping[int, bool], boundary: int) -> Tableau:
    """Read the tableau bits of one boundary out of a model."""
    inst = enc.instance
    n, rows = inst.num_qubits, inst.target.num_rows
    x = [[int(model.get(enc.tableau_vars[(boundary, i, X, q)], False)) for q in range(n)] for i in range(rows)]
    z = [[int(model.get(enc.tableau_vars[(boundary, i, Z, q)], False)) for q in range(n)] for i in range(rows)]
    r = [int(model.get(enc.tableau_vars[(boundary, i, R, 0)], False)) for i in range(rows)]
    return Tableau(x, z, r, inst.target.mode)


def extract_circuit(enc: EncodedInstance, model: Mapping[int, bool]) -> CliffordCircuit:
    """Read the chosen gate of every step, drop NONE steps and verify by simulation.

    Raises:
        EncodingError: If a step has zero or several true choices, or the
            circuit does not reproduce the target.
    """
    inst = enc.instance
    gates: List[Gate] = []
    for step in range(enc.time_steps):
        chosen = [choice for choice in enc.choices if model.get(enc.choice_vars[(step, choice)], False)]
        if len(chosen) != 1:
            raise EncodingError(f"step {step} has {len(chosen)} true choices, expected exactly one")
        if chosen[0].gate is not None:
            gates.append(chosen[0].gate)
    circuit = CliffordCircuit(num_qubits=inst.num_qubits, gates=tuple(gates))

    final = simulate(circuit, inst.initial)
    matches = equivalent(final, inst.target) if _uses_canonical_match(inst) else final == inst.target
    if not matches:
        raise EncodingError(f"extracted circuit ({len(circuit)} gates) does not reproduce the target")
    return circuit
