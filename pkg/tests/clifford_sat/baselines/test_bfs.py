"""Tests for the exhaustive BFS oracle."""

import pytest

from clifford_sat.baselines.bfs import MAX_BFS_GATES, BfsDatabase, bfs_min_two_qubit, bfs_optimal
from clifford_sat.circuit.models import clifford_gates
from clifford_sat.exceptions import OracleError
from clifford_sat.stabilizer.tableau import Tableau, equivalent, identity_tableau, random_tableau, simulate

BELL = Tableau.from_rows(["+XX", "+ZZ"])


class TestBfsOptimal:
    """Test bfs_optimal."""

    def test_bell(self):
        """Test the Bell state needs two gates."""
        count, witness = bfs_optimal(2, BELL, 6)
        assert count == 2
        assert witness.gate_count() == 2
        assert equivalent(simulate(witness), BELL)

    def test_zero_state(self):
        """Test |0...0> needs none."""
        count, witness = bfs_optimal(3, identity_tableau(3), 2)
        assert count == 0
        assert witness.gate_count() == 0

    def test_beyond_bound(self):
        """Test that states out of reach return None."""
        assert bfs_optimal(2, BELL, 1) is None

    def test_witnesses_match_counts(self):
        """Test that witnesses have the reported length and prepare the target."""
        for seed in range(10):
            target = random_tableau(2, seed)
            count, witness = bfs_optimal(2, target, 12)
            assert witness.gate_count() == count
            assert equivalent(simulate(witness), target)

    @pytest.mark.parametrize("n,max_gates", [(0, 3), (4, 3), (2, -1), (2, MAX_BFS_GATES + 1)])
    def test_limits(self, n, max_gates):
        """Test the qubit and depth caps."""
        with pytest.raises(ValueError):
            bfs_optimal(n, identity_tableau(max(n, 1)), max_gates)


class TestBfsDatabase:
    """Test the database and its cache files."""

    def test_state_counts(self):
        """Test the number of one- and two-qubit stabilizer states."""
        one = BfsDatabase.build(1, 8)
        two = BfsDatabase.build(2, 12)
        assert len(one) == 6 and one.exhausted
        assert len(two) == 60 and two.exhausted

    @pytest.mark.parametrize("n,max_gates", [(2, 12), (3, 5)])
    def test_gate_order_irrelevant(self, n, max_gates):
        """Test a reversed expansion order finds the same states at the same counts."""
        default = BfsDatabase.build(n, max_gates)
        reordered = BfsDatabase.build(n, max_gates, gates=tuple(reversed(clifford_gates(n))))
        assert reordered.gates != default.gates
        assert {key: e.count for key, e in reordered.entries.items()} == {
            key: e.count for key, e in default.entries.items()
        }
        assert reordered.exhausted == default.exhausted
        for seed in range(10):
            target = random_tableau(n, seed)
            witness = reordered.witness(target)
            if witness is None:
                continue
            assert len(witness) == default.count(target)
            assert equivalent(simulate(witness), target)

    def test_not_exhausted(self):
        """Test a shallow search does not claim exhaustion."""
        assert not BfsDatabase.build(2, 1).exhausted

    def test_width_mismatch(self):
        """Test lookups of a target with the wrong width."""
        with pytest.raises(ValueError):
            BfsDatabase.build(1, 2).count(BELL)

    def test_save_load(self, tmp_path):
        """Test that a saved cache loads back with equal counts and witnesses."""
        db = BfsDatabase.build(2, 12)
        path = tmp_path / "bfs2.bin"
        index = db.save(path)
        assert index == tmp_path / "bfs2.bin.idx"
        assert index.read_text().startswith("# n=2 max_gates=12 states=60\n")

        loaded = BfsDatabase.load(path)
        assert len(loaded) == 60
        assert loaded.exhausted
        for seed in range(5):
            target = random_tableau(2, seed)
            assert loaded.count(target) == db.count(target)
            assert loaded.witness(target) == db.witness(target)

    def test_load_errors(self, tmp_path):
        """Test bad magic and truncated files."""
        short = tmp_path / "short.bin"
        short.write_bytes(b"CSAT")
        with pytest.raises(OracleError, match="truncated"):
            BfsDatabase.load(short)

        wrong = tmp_path / "wrong.bin"
        wrong.write_bytes(b"NOTACACHE" + bytes(16))
        with pytest.raises(OracleError, match="not a BFS cache"):
            BfsDatabase.load(wrong)

        path = tmp_path / "cut.bin"
        BfsDatabase.build(1, 4).save(path)
        data = path.read_bytes()
        path.write_bytes(data[:-3])
        with pytest.raises(OracleError, match="truncated"):
            BfsDatabase.load(path)


class TestBfsMinTwoQubit:
    """Test bfs_min_two_qubit."""

    def test_bell(self):
        """Test the Bell state needs one CNOT."""
        assert bfs_min_two_qubit(2, BELL, 4) == 1

    def test_product_state(self):
        """Test product states need none."""
        assert bfs_min_two_qubit(2, Tableau.from_rows(["+XI", "-IZ"]), 6) == 0

    def test_out_of_reach(self):
        """Test targets beyond the gate bound."""
        assert bfs_min_two_qubit(2, BELL, 1) is None

    def test_width_mismatch(self):
        """Test the qubit count check."""
        with pytest.raises(ValueError):
            bfs_min_two_qubit(3, BELL, 4)
