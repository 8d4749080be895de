"""Tests for the bounded SAT encoding."""

import pytest

from clifford_sat.circuit.models import CliffordCircuit, Gate
from clifford_sat.encoding.encoder import boundary_tableau, encode, extract_circuit
from clifford_sat.encoding.models import MatchMode, SynthesisInstance
from clifford_sat.exceptions import EncodingError
from clifford_sat.solvers.base import SolveStatus
from clifford_sat.solvers.embedded import PySatBackend
from clifford_sat.stabilizer.models import TableauMode
from clifford_sat.stabilizer.tableau import Tableau, equivalent, identity_tableau, random_tableau, simulate

BELL = Tableau.from_rows(["+XX", "+ZZ"])


@pytest.fixture(scope="module")
def backend():
    return PySatBackend()


def _solve(backend, inst):
    enc = encode(inst)
    outcome = backend.solve(enc.formula)
    return enc, outcome


class TestEncodingStructure:
    """Test the variable layout of encoded instances."""

    def test_two_qubit_counts(self):
        """Test 10 tableau variables per boundary and 14 row-update groups per step for n=2."""
        enc = encode(SynthesisInstance(target=BELL, time_steps=3))
        stats = enc.stats()
        assert stats.tableau_vars_per_boundary == 10
        assert stats.row_update_groups_per_step == 14
        assert stats.choices_per_step == 7
        assert stats.cnot_literals == 6
        assert stats.time_steps == 3
        assert stats.num_vars == enc.formula.num_vars
        for boundary in range(4):
            assert len(enc.boundary_vars(boundary)) == 10

    def test_state_bit_budget(self):
        """Test n(2n+1) tableau variables per boundary in state mode."""
        for n in (1, 3, 4):
            enc = encode(SynthesisInstance(target=random_tableau(n, 1), time_steps=1))
            assert enc.stats().tableau_vars_per_boundary == n * (2 * n + 1)

    def test_choice_names(self):
        """Test the semantic variable names."""
        enc = encode(SynthesisInstance(target=BELL, time_steps=2))
        names = enc.formula.name_map
        assert names["choice[1]:cx(0,1)"] == enc.choice_vars[(1, enc.choices[5])]
        assert names["x[0][1][0]"] in enc.boundary_vars(0)
        assert "r[2][1]" in names
        assert enc.step_choice_vars(0) == [enc.choice_vars[(0, c)] for c in enc.choices]

    def test_gate_literals(self):
        """Test one negated NONE literal per step."""
        enc = encode(SynthesisInstance(target=BELL, time_steps=3, gate_bound=1))
        none_choice = enc.choices[0]
        assert enc.gate_literals == [-enc.choice_vars[(step, none_choice)] for step in range(3)]

    def test_canonical_final_target(self):
        """Test that canonical matching fixes the canonical form of the target."""
        swapped = Tableau.from_rows(["+ZZ", "+XX"])
        enc = encode(SynthesisInstance(target=swapped, time_steps=2))
        assert enc.final_target is not None
        assert equivalent(enc.final_target, swapped)
        exact = encode(SynthesisInstance(target=swapped, time_steps=2, match_mode=MatchMode.EXACT))
        assert exact.final_target == swapped

    def test_zero_steps(self):
        """Test that T=0 has no choice variables."""
        enc = encode(SynthesisInstance(target=identity_tableau(2), time_steps=0))
        assert enc.choice_vars == {}
        assert enc.stats().row_update_groups_per_step == 0


class TestBellDecisions:
    """Test the SAT/UNSAT boundary for the Bell state."""

    def test_one_step_unsat(self, backend):
        """Test that no single gate prepares a Bell state."""
        _, outcome = _solve(backend, SynthesisInstance(target=BELL, time_steps=1))
        assert outcome.status is SolveStatus.UNSAT

    def test_two_steps_sat(self, backend):
        """Test that two gates suffice and the extracted circuit re-verifies."""
        enc, outcome = _solve(backend, SynthesisInstance(target=BELL, time_steps=2))
        assert outcome.status is SolveStatus.SAT
        circuit = extract_circuit(enc, outcome.model)
        assert circuit.gate_count() == 2
        assert circuit.two_qubit_count() == 1
        assert equivalent(simulate(circuit), BELL)

    def test_exact_mode(self, backend):
        """Test bit-exact matching from the |00> tableau."""
        enc, outcome = _solve(backend, SynthesisInstance(target=BELL, time_steps=2, match_mode=MatchMode.EXACT))
        assert outcome.status is SolveStatus.SAT
        circuit = extract_circuit(enc, outcome.model)
        assert simulate(circuit) == BELL
        assert boundary_tableau(enc, outcome.model, 0) == identity_tableau(2)
        assert boundary_tableau(enc, outcome.model, 2) == BELL

    def test_cnot_bound(self, backend):
        """Test that K=0 forbids the entangling gate and K=1 allows it."""
        _, outcome = _solve(backend, SynthesisInstance(target=BELL, time_steps=4, two_qubit_bound=0))
        assert outcome.status is SolveStatus.UNSAT
        enc, outcome = _solve(backend, SynthesisInstance(target=BELL, time_steps=4, two_qubit_bound=1))
        assert outcome.status is SolveStatus.SAT
        assert extract_circuit(enc, outcome.model).two_qubit_count() == 1

    def test_gate_bound(self, backend):
        """Test that at T=4 a budget of one gate is UNSAT and two gates is SAT."""
        _, outcome = _solve(backend, SynthesisInstance(target=BELL, time_steps=4, gate_bound=1))
        assert outcome.status is SolveStatus.UNSAT
        enc, outcome = _solve(backend, SynthesisInstance(target=BELL, time_steps=4, gate_bound=2))
        assert outcome.status is SolveStatus.SAT
        assert extract_circuit(enc, outcome.model).gate_count() <= 2

    def test_zero_steps(self, backend):
        """Test T=0: SAT for |00>, UNSAT for the Bell state."""
        enc, outcome = _solve(backend, SynthesisInstance(target=identity_tableau(2), time_steps=0))
        assert outcome.status is SolveStatus.SAT
        assert extract_circuit(enc, outcome.model).gate_count() == 0
        _, outcome = _solve(backend, SynthesisInstance(target=BELL, time_steps=0))
        assert outcome.status is SolveStatus.UNSAT


class TestEncodingProperties:
    """Property checks over random targets."""

    @pytest.mark.parametrize("symmetry_breaking", [True, False])
    def test_monotone_in_time_steps(self, backend, symmetry_breaking):
        """Test SAT at T implies SAT at T+1, and extracted circuits fit in T gates."""
        for seed in range(6):
            target = random_tableau(2, seed)
            previous = False
            for steps in range(0, 6):
                inst = SynthesisInstance(target=target, time_steps=steps, symmetry_breaking=symmetry_breaking)
                enc, outcome = _solve(backend, inst)
                sat = outcome.status is SolveStatus.SAT
                assert sat or not previous
                if sat:
                    circuit = extract_circuit(enc, outcome.model)
                    assert circuit.gate_count() <= steps
                    assert equivalent(simulate(circuit), target)
                previous = sat

    def test_gate_bound_matches_step_limit(self, backend):
        """Test a gate budget G at T=6 is SAT exactly when T=G is SAT."""
        for seed in range(4):
            target = random_tableau(2, seed)
            for budget in range(0, 5):
                bounded = SynthesisInstance(target=target, time_steps=6, gate_bound=budget)
                enc, outcome = _solve(backend, bounded)
                _, plain = _solve(backend, SynthesisInstance(target=target, time_steps=budget))
                assert outcome.status is plain.status, f"seed {seed} budget {budget}"
                if outcome.status is SolveStatus.SAT:
                    assert extract_circuit(enc, outcome.model).gate_count() <= budget

    def test_unitary_target(self, backend):
        """Test synthesis of a full unitary from the identity tableau."""
        start = identity_tableau(2, TableauMode.UNITARY)
        target = simulate(CliffordCircuit(num_qubits=2, gates=(Gate.h(0), Gate.cnot(0, 1))), start)
        _, outcome = _solve(backend, SynthesisInstance(target=target, time_steps=1))
        assert outcome.status is SolveStatus.UNSAT
        enc, outcome = _solve(backend, SynthesisInstance(target=target, time_steps=2))
        assert outcome.status is SolveStatus.SAT
        assert simulate(extract_circuit(enc, outcome.model), start) == target

    def test_three_qubit_state(self, backend):
        """Test a GHZ state needs exactly three gates."""
        ghz = Tableau.from_rows(["+XXX", "+ZZI", "+IZZ"])
        _, outcome = _solve(backend, SynthesisInstance(target=ghz, time_steps=2))
        assert outcome.status is SolveStatus.UNSAT
        enc, outcome = _solve(backend, SynthesisInstance(target=ghz, time_steps=3))
        assert outcome.status is SolveStatus.SAT
        assert equivalent(simulate(extract_circuit(enc, outcome.model)), ghz)


class TestEncodingErrors:
    """Test encoder and extractor error paths."""

    def test_canonical_needs_zero_state(self):
        """Test that canonical matching rejects other initial tableaus."""
        inst = SynthesisInstance(target=BELL, initial=Tableau.from_rows(["+XI", "+IZ"]), time_steps=2)
        with pytest.raises(EncodingError):
            encode(inst)

    def test_exact_mode_any_initial(self, backend):
        """Test exact matching from |0+> to the Bell state in one CNOT."""
        inst = SynthesisInstance(
            target=BELL, initial=Tableau.from_rows(["+XI", "+IZ"]), time_steps=1, match_mode=MatchMode.EXACT
        )
        enc, outcome = _solve(backend, inst)
        assert outcome.status is SolveStatus.SAT
        assert extract_circuit(enc, outcome.model).gates == (Gate.cnot(0, 1),)

    def test_instance_shape_checks(self):
        """Test that initial and target must agree in width and mode."""
        with pytest.raises(ValueError):
            SynthesisInstance(target=BELL, initial=identity_tableau(3), time_steps=1)
        with pytest.raises(ValueError):
            SynthesisInstance(target=BELL, initial=identity_tableau(2, TableauMode.UNITARY), time_steps=1)
        with pytest.raises(ValueError):
            SynthesisInstance(target=BELL, time_steps=-1)

    def test_bad_model(self, backend):
        """Test that a model without a chosen gate is rejected."""
        enc = encode(SynthesisInstance(target=BELL, time_steps=2))
        with pytest.raises(EncodingError, match="exactly one"):
            extract_circuit(enc, {})

    def test_model_for_wrong_target(self, backend):
        """Test that extraction re-verifies against the target."""
        enc, outcome = _solve(backend, SynthesisInstance(target=BELL, time_steps=2))
        model = dict(outcome.model)
        for step in range(2):
            for choice in enc.choices:
                model[enc.choice_vars[(step, choice)]] = choice.is_none
        with pytest.raises(EncodingError, match="does not reproduce"):
            extract_circuit(enc, model)
