"""Random-tableau benchmark harness.

Each cell of the grid (n, seed, method) prepares ``random_tableau(n, seed)``
and runs one method on it. Cells run in a process pool when ``jobs > 1``;
rows are always emitted in (n, seed, method) order.
"""

import csv
import logging
import re
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, TextIO, Tuple

from pydantic import BaseModel, ConfigDict, Field

from .._utils.log import job_id_context
from ..baselines.gaussian import baseline_synthesize
from ..exceptions import CliffordSatError
from ..solvers import make_backend
from ..solvers.base import SolveStatus
from ..stabilizer.tableau import random_tableau
from ..synthesis.models import Objective, Optimality, SynthesisConfig
from ..synthesis.optimizer import synthesize

logger = logging.getLogger(__name__)

CSV_HEADER = ("n", "method", "seed", "status", "t_seconds", "total_gates", "two_qubit_gates")

_RANGE = re.compile(r"^(\d+)\.\.(\d+)$")


class BenchMethod(str, Enum):
    """Method run in one benchmark cell."""

    SAT_MIN_GATES = "sat"
    SAT_MIN_TWO_QUBIT = "sat-2q"
    BASELINE = "baseline"


class BenchStatus(str, Enum):
    """Outcome of one cell; baseline rows are upper bounds and report TIME_BOUNDED."""

    PROVEN = "proven"
    TIME_BOUNDED = "time-bounded"
    FAILED = "failed"


_METHOD_ORDER = {method: index for index, method in enumerate(BenchMethod)}
_EXCESS_METRICS = ((BenchMethod.SAT_MIN_GATES, "total_gates"), (BenchMethod.SAT_MIN_TWO_QUBIT, "two_qubit_gates"))


class BenchRow(BaseModel):
    """One CSV row; the metric fields are None for failed cells."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    method: BenchMethod
    seed: int
    status: BenchStatus
    t_seconds: float = Field(ge=0)
    total_gates: Optional[int] = None
    two_qubit_gates: Optional[int] = None

    @property
    def sort_key(self) -> Tuple[int, int, int]:
        """(n, seed, method) ordering used by the collector."""
        return self.n, self.seed, _METHOD_ORDER[self.method]

    def csv_cells(self) -> List[str]:
        """Cells in ``CSV_HEADER`` order; metrics are empty for failed rows."""
        failed = self.status is BenchStatus.FAILED
        return [
            str(self.n),
            self.method.value,
            str(self.seed),
            self.status.value,
            f"{self.t_seconds:.3f}",
            "" if failed or self.total_gates is None else str(self.total_gates),
            "" if failed or self.two_qubit_gates is None else str(self.two_qubit_gates),
        ]


def parse_qubit_range(text: str) -> List[int]:
    """Parse ``"2..4"``, ``"3"`` or ``"2,3,5"`` into a sorted list of qubit counts.

    Raises:
        ValueError: On malformed input, an empty range or a count below 1.
    """
    text = text.strip()
    match = _RANGE.match(text)
    if match:
        low, high = int(match.group(1)), int(match.group(2))
        if low > high:
            raise ValueError(f"empty qubit range {text!r}")
        values = list(range(low, high + 1))
    else:
        try:
            values = [int(part) for part in text.split(",") if part.strip()]
        except ValueError:
            raise ValueError(f"invalid qubit range {text!r} (expected e.g. '2..4' or '2,3')") from None
    if not values or min(values) < 1:
        raise ValueError(f"qubit counts must be at least 1, got {text!r}")
    return sorted(set(values))


def parse_methods(text: str) -> List[BenchMethod]:
    """Parse a comma-separated method list such as ``"sat,baseline"``.

    Raises:
        ValueError: On an unknown or missing method name.
    """
    names = [part.strip() for part in text.split(",") if part.strip()]
    if not names:
        raise ValueError("no benchmark methods given")
    try:
        methods = {BenchMethod(name) for name in names}
    except ValueError:
        known = ", ".join(m.value for m in BenchMethod)
        raise ValueError(f"unknown method in {text!r} (known: {known})") from None
    return sorted(methods, key=_METHOD_ORDER.__getitem__)


def _failed_row(n: int, seed: int, method: BenchMethod, started: float) -> BenchRow:
    elapsed = time.perf_counter() - started
    return BenchRow(n=n, method=method, seed=seed, status=BenchStatus.FAILED, t_seconds=elapsed)


def run_cell(
    n: int,
    seed: int,
    method: BenchMethod,
    timeout: float,
    backend: Optional[str] = None,
    solver_command: Optional[str] = None,
) -> BenchRow:
    """Run one benchmark cell; solver and synthesis failures become FAILED rows.

    A SAT cell whose solver never answered SAT within the timeout is FAILED
    too, since its circuit is only the fallback witness.
    """
    token = job_id_context.set(f"n={n} seed={seed} method={method.value}")
    started = time.perf_counter()
    try:
        target = random_tableau(n, seed)
        if method is BenchMethod.BASELINE:
            circuit = baseline_synthesize(target)
            status = BenchStatus.TIME_BOUNDED
        else:
            objective = Objective.TOTAL_GATES if method is BenchMethod.SAT_MIN_GATES else Objective.TWO_QUBIT_GATES
            cfg = SynthesisConfig(objective=objective, total_timeout=timeout, seed=seed, backend=backend)
            result = synthesize(target, cfg, backend=make_backend(backend, solver_command))
            if not result.is_proven and not any(call.status is SolveStatus.SAT for call in result.calls):
                logger.warning("Timed out after %d solver calls without a SAT answer", len(result.calls))
                return _failed_row(n, seed, method, started)
            circuit = result.circuit
            status = BenchStatus.PROVEN if result.optimal is Optimality.PROVEN else BenchStatus.TIME_BOUNDED
        elapsed = time.perf_counter() - started
        logger.info(
            "%s: %d gates, %d CNOTs in %.2fs", status.value, circuit.gate_count(), circuit.two_qubit_count(), elapsed
        )
        return BenchRow(
            n=n,
            method=method,
            seed=seed,
            status=status,
            t_seconds=elapsed,
            total_gates=circuit.gate_count(),
            two_qubit_gates=circuit.two_qubit_count(),
        )
    except CliffordSatError as e:
        logger.warning("Cell failed: %s", e)
        return _failed_row(n, seed, method, started)
    finally:
        job_id_context.reset(token)


def run_bench(
    qubits: Sequence[int],
    runs: int,
    methods: Sequence[BenchMethod],
    timeout: float,
    jobs: int = 1,
    seed_base: int = 0,
    backend: Optional[str] = None,
    solver_command: Optional[str] = None,
) -> List[BenchRow]:
    """Run every (n, seed, method) cell and return the rows in (n, seed, method) order.

    Seeds are ``seed_base .. seed_base + runs - 1`` for every n.
    """
    if runs < 1:
        raise ValueError(f"runs must be at least 1, got {runs}")
    if jobs < 1:
        raise ValueError(f"jobs must be at least 1, got {jobs}")
    cells = [
        (n, seed, method)
        for n in qubits
        for seed in range(seed_base, seed_base + runs)
        for method in sorted(methods, key=_METHOD_ORDER.__getitem__)
    ]
    logger.info("Running %d benchmark cells with %d job(s)", len(cells), jobs)

    rows: List[BenchRow] = []
    if jobs == 1:
        rows = [run_cell(n, seed, method, timeout, backend, solver_command) for n, seed, method in cells]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = {
                pool.submit(run_cell, n, seed, method, timeout, backend, solver_command): (n, seed, method)
                for n, seed, method in cells
            }
            for future in as_completed(futures):
                n, seed, method = futures[future]
                try:
                    rows.append(future.result())
                except Exception:
                    logger.exception("Worker for n=%d seed=%d method=%s crashed", n, seed, method.value)
                    rows.append(BenchRow(n=n, method=method, seed=seed, status=BenchStatus.FAILED, t_seconds=0.0))
    return sorted(rows, key=lambda row: row.sort_key)


def write_csv(rows: Iterable[BenchRow], out: TextIO) -> None:
    """Write the header and one line per row."""
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.csv_cells())


def write_jsonl(rows: Iterable[BenchRow], out: TextIO) -> None:
    """Write one JSON object per row."""
    for row in rows:
        out.write(row.model_dump_json() + "\n")


def _mean(values: Sequence[float]) -> Optional[float]:
    return sum(values) / len(values) if values else None


def summarize(rows: Sequence[BenchRow]) -> List[str]:
    """Per-n averages over successful rows, plus the baseline's excess over each SAT method.

    The excess is the mean of ``(baseline - sat) / sat`` over seeds where both
    succeeded and the SAT cost is nonzero: total gates against ``sat`` and
    CNOTs against ``sat-2q``.
    """
    lines: List[str] = []
    by_cell: Dict[Tuple[int, int, BenchMethod], BenchRow] = {(r.n, r.seed, r.method): r for r in rows}
    for n in sorted({r.n for r in rows}):
        for method in BenchMethod:
            ok = [r for r in rows if r.n == n and r.method is method and r.status is not BenchStatus.FAILED]
            total = [r for r in rows if r.n == n and r.method is method]
            if not total:
                continue
            if not ok:
                lines.append(f"n={n} {method.value}: 0/{len(total)} succeeded")
                continue
            lines.append(
                f"n={n} {method.value}: {len(ok)}/{len(total)} ok, "
                f"avg gates {_mean([float(r.total_gates or 0) for r in ok]):.2f}, "
                f"avg CNOTs {_mean([float(r.two_qubit_gates or 0) for r in ok]):.2f}, "
                f"avg time {_mean([r.t_seconds for r in ok]):.3f}s"
            )

        for method, metric in _EXCESS_METRICS:
            excess: List[float] = []
            for (cell_n, seed, cell_method), row in by_cell.items():
                if cell_n != n or cell_method is not method or row.status is BenchStatus.FAILED:
                    continue
                base = by_cell.get((n, seed, BenchMethod.BASELINE))
                if base is None or base.status is BenchStatus.FAILED:
                    continue
                sat_cost, base_cost = getattr(row, metric), getattr(base, metric)
                if sat_cost:
                    excess.append(100.0 * (base_cost - sat_cost) / sat_cost)
            mean_excess = _mean(excess)
            if mean_excess is not None:
                label = "gates" if metric == "total_gates" else "CNOTs"
                lines.append(f"n={n} baseline excess over {method.value} ({label}): {mean_excess:+.1f}%")
    return lines
