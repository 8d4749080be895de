"""Optimization loops over the SAT encoding.

A job first probes geometrically growing time-step limits until one is
feasible, capped by the length of a known circuit (the baseline, or the input
circuit). It then minimizes the total gate count by searching over T (or over
a gate-count bound at T0 when cost tightening), or the CNOT count by searching
over K at a padded, fixed T.
"""

import logging
import math
import time
from typing import List, Literal, Optional, Tuple

from ..baselines.gaussian import baseline_synthesize
from ..circuit.models import CliffordCircuit
from ..encoding.encoder import encode, extract_circuit
from ..encoding.models import MatchMode, SynthesisInstance
from ..exceptions import SynthesisError
from ..solvers import SatBackend, make_backend
from ..solvers.base import SolveStatus
from ..stabilizer.models import TableauMode
from ..stabilizer.tableau import Tableau, equivalent, identity_tableau, simulate
from .models import Objective, Optimality, SolverCall, Strategy, SynthesisConfig, SynthesisResult

logger = logging.getLogger(__name__)


def _realizes(circuit: CliffordCircuit, target: Tableau, match_mode: MatchMode) -> bool:
    final = simulate(circuit, identity_tableau(target.num_qubits, target.mode))
    if match_mode is MatchMode.CANONICAL and target.mode is TableauMode.STATE:
        return equivalent(final, target)
    return final == target


class _Session:
    """Backend, deadline and call log shared by the phases of one job."""

    def __init__(self, target: Tableau, cfg: SynthesisConfig, backend: Optional[SatBackend] = None):
        self.target = target
        self.cfg = cfg
        self.backend = backend or make_backend(cfg.backend)
        self.deadline = time.monotonic() + cfg.total_timeout
        self.calls: List[SolverCall] = []
        logger.debug(
            "Synthesis job: n=%d objective=%s strategy=%s seed=%d backend=%s",
            target.num_qubits,
            cfg.objective.value,
            cfg.strategy.value,
            cfg.seed,
            self.backend.name,
        )

    def remaining(self) -> float:
        return self.deadline - time.monotonic()

    def expired(self) -> bool:
        return self.remaining() <= 0

    def solve(
        self, time_steps: int, cnot_bound: Optional[int] = None, gate_bound: Optional[int] = None
    ) -> Tuple[SolveStatus, Optional[CliffordCircuit]]:
        """Encode and solve one instance; the call is appended to ``calls``.

        A ``T`` call's bound is the gate budget: ``gate_bound`` when given,
        otherwise the number of steps.
        """
        kind: Literal["T", "K"] = "T" if cnot_bound is None else "K"
        if cnot_bound is not None:
            bound = cnot_bound
        else:
            bound = time_steps if gate_bound is None else gate_bound
        timeout = self.remaining()
        if self.cfg.per_call_timeout is not None:
            timeout = min(timeout, self.cfg.per_call_timeout)
        if timeout <= 0:
            self.calls.append(
                SolverCall(kind=kind, bound=bound, time_steps=time_steps, status=SolveStatus.TIMED_OUT, seconds=0.0)
            )
            return SolveStatus.TIMED_OUT, None

        inst = SynthesisInstance(
            target=self.target,
            time_steps=time_steps,
            two_qubit_bound=cnot_bound,
            gate_bound=gate_bound,
            match_mode=self.cfg.match_mode,
            symmetry_breaking=self.cfg.symmetry_breaking,
        )
        enc = encode(inst)
        outcome = self.backend.solve(enc.formula, timeout=timeout)
        self.calls.append(
            SolverCall(
                kind=kind,
                bound=bound,
                time_steps=time_steps,
                status=outcome.status,
                seconds=outcome.stats.seconds,
            )
        )
        logger.debug("%s=%d (T=%d): %s in %.3fs", kind, bound, time_steps, outcome.status.value, outcome.stats.seconds)
        if outcome.status is not SolveStatus.SAT or outcome.model is None:
            return outcome.status, None
        return SolveStatus.SAT, extract_circuit(enc, outcome.model)

    def recorded(self, kind: str, bound: int, status: SolveStatus, time_steps: Optional[int] = None) -> bool:
        return any(
            call.kind == kind
            and call.bound == bound
            and call.status is status
            and (time_steps is None or call.time_steps == time_steps)
            for call in self.calls
        )

    def result(self, circuit: CliffordCircuit, proven: bool, time_steps: int) -> SynthesisResult:
        if not _realizes(circuit, self.target, self.cfg.match_mode):
            raise SynthesisError("synthesized circuit failed re-verification against the target")
        return SynthesisResult(
            circuit=circuit,
            total_gates=circuit.gate_count(),
            two_qubit_gates=circuit.two_qubit_count(),
            optimal=Optimality.PROVEN if proven else Optimality.TIME_BOUNDED_UPPER,
            objective=self.cfg.objective,
            time_steps=time_steps,
            calls=list(self.calls),
        )


def _known_upper_bound(
    target: Tableau, cfg: SynthesisConfig, input_circuit: Optional[CliffordCircuit]
) -> Optional[CliffordCircuit]:
    """Shortest circuit known to realize the target without solving."""
    candidates: List[CliffordCircuit] = []
    if input_circuit is not None and _realizes(input_circuit, target, cfg.match_mode):
        candidates.append(input_circuit)
    if target.mode is TableauMode.STATE:
        baseline = baseline_synthesize(target)
        if _realizes(baseline, target, cfg.match_mode):
            candidates.append(baseline)
    return min(candidates, key=len, default=None)


def _probe(
    session: _Session, input_circuit: Optional[CliffordCircuit] = None
) -> Tuple[int, CliffordCircuit]:
    """Grow T geometrically from the start value until SAT or the cap is reached."""
    target, cfg = session.target, session.cfg
    n = target.num_qubits
    witness = _known_upper_bound(target, cfg, input_circuit)
    cap = len(witness) if witness is not None else None
    if cfg.max_time_steps is not None and (cap is None or cfg.max_time_steps < cap):
        cap, witness = cfg.max_time_steps, None

    start = cfg.initial_time_steps or n
    # A zero-length witness keeps the first probe at the start value.
    t = min(start, cap) if cap else start
    step = 0
    while True:
        status, circuit = session.solve(t)
        if circuit is not None:
            logger.info("Initial limit T0=%d found", t)
            return t, circuit
        if session.expired() or (cap is not None and t >= cap):
            if witness is not None:
                logger.warning("Probing stopped at T=%d; using the known %d-gate circuit", t, len(witness))
                return len(witness), witness
            raise SynthesisError(f"no feasible time-step limit found (last probe T={t}: {status.value})")
        step += 1
        t = max(t + 1, math.ceil(start * cfg.growth_factor**step))
        if cap is not None and t >= cap:
            if witness is not None:
                logger.info("Initial limit T0=%d taken from a known %d-gate circuit", cap, len(witness))
                return cap, witness
            t = cap


def find_initial_limit(
    target: Tableau, cfg: SynthesisConfig, input_circuit: Optional[CliffordCircuit] = None
) -> int:
    """First feasible T of the sequence n, ceil(n*g), ceil(n*g^2), ..., capped by a known circuit's length.

    Raises:
        SynthesisError: If no feasible limit is found before the total timeout
            or ``max_time_steps``.
    """
    t0, _ = _probe(_Session(target, cfg), input_circuit)
    return t0


def _empty_result(target: Tableau, cfg: SynthesisConfig) -> Optional[SynthesisResult]:
    empty = CliffordCircuit(num_qubits=target.num_qubits)
    if not _realizes(empty, target, cfg.match_mode):
        return None
    logger.info("Target equals the initial tableau; returning the empty circuit")
    return SynthesisResult(
        circuit=empty,
        total_gates=0,
        two_qubit_gates=0,
        optimal=Optimality.PROVEN,
        objective=cfg.objective,
        time_steps=0,
    )


def _min_gates(
    target: Tableau, cfg: SynthesisConfig, input_circuit: Optional[CliffordCircuit], backend: Optional[SatBackend]
) -> SynthesisResult:
    trivial = _empty_result(target, cfg)
    if trivial is not None:
        return trivial
    session = _Session(target, cfg, backend)
    t0, best = _probe(session, input_circuit)

    # UNSAT answers seen while probing raise the floor.
    lo = 1 + max(
        (c.bound for c in session.calls if c.kind == "T" and c.status is SolveStatus.UNSAT and c.bound < t0),
        default=-1,
    )
    hi = min(t0, len(best))

    if cfg.strategy is Strategy.LINEAR_DOWN:
        while hi > lo and not session.expired():
            _, circuit = session.solve(hi - 1)
            if circuit is None:
                break
            best, hi = circuit, hi - 1
    elif cfg.strategy is Strategy.COST_TIGHTENING:
        # T stays at T0; each model's gate count tightens the cardinality bound.
        while hi > lo and not session.expired():
            _, circuit = session.solve(t0, gate_bound=hi - 1)
            if circuit is None:
                break
            best, hi = circuit, len(circuit)
    else:
        while lo < hi and not session.expired():
            mid = (lo + hi) // 2
            _, circuit = session.solve(mid)
            if circuit is not None:
                best, hi = circuit, len(circuit)
            else:
                # UNSAT raises the floor; a timeout leaves mid unknown and moves on.
                lo = mid + 1

    if hi > 0 and not session.recorded("T", hi, SolveStatus.SAT):
        _, circuit = session.solve(hi)
        if circuit is not None:
            best = circuit
    proven = len(best) == hi and (
        hi == 0
        or (session.recorded("T", hi, SolveStatus.SAT) and session.recorded("T", hi - 1, SolveStatus.UNSAT))
    )
    if proven:
        logger.info("Proven optimum: %d gates", hi)
    else:
        logger.warning("Returning %d gates without a minimality proof", len(best))
    return session.result(best, proven, hi)


def _min_two_qubit(
    target: Tableau, cfg: SynthesisConfig, input_circuit: Optional[CliffordCircuit], backend: Optional[SatBackend]
) -> SynthesisResult:
    trivial = _empty_result(target, cfg)
    if trivial is not None:
        return trivial
    session = _Session(target, cfg, backend)
    t0, best = _probe(session, input_circuit)
    padding = cfg.padding if cfg.padding is not None else target.num_qubits
    steps = t0 + padding
    hi = best.two_qubit_count()
    lo = 0

    if cfg.strategy is Strategy.LINEAR_DOWN:
        while hi > lo and not session.expired():
            _, circuit = session.solve(steps, hi - 1)
            if circuit is None:
                break
            best, hi = circuit, hi - 1
    elif cfg.strategy is Strategy.COST_TIGHTENING:
        while hi > lo and not session.expired():
            _, circuit = session.solve(steps, hi - 1)
            if circuit is None:
                break
            best, hi = circuit, circuit.two_qubit_count()
    else:
        while lo < hi and not session.expired():
            mid = (lo + hi) // 2
            _, circuit = session.solve(steps, mid)
            if circuit is not None:
                best, hi = circuit, circuit.two_qubit_count()
            else:
                lo = mid + 1

    if hi > 0 and not session.recorded("K", hi, SolveStatus.SAT, steps):
        _, circuit = session.solve(steps, hi)
        if circuit is not None:
            best = circuit
    proven = best.two_qubit_count() == hi and (
        hi == 0
        or (
            session.recorded("K", hi, SolveStatus.SAT, steps)
            and session.recorded("K", hi - 1, SolveStatus.UNSAT, steps)
        )
    )
    if proven:
        logger.info("Proven minimum at T=%d: %d CNOTs", steps, hi)
    else:
        logger.warning("Returning %d CNOTs without a minimality proof", best.two_qubit_count())
    return session.result(best, proven, steps)


def synthesize_min_gates(
    target: Tableau,
    cfg: Optional[SynthesisConfig] = None,
    backend: Optional[SatBackend] = None,
) -> SynthesisResult:
    """Circuit with the fewest gates realizing ``target``, by search over the time-step limit.

    Raises:
        SynthesisError: If no circuit is found or the result fails re-verification.
    """
    cfg = (cfg or SynthesisConfig()).model_copy(update={"objective": Objective.TOTAL_GATES})
    return _min_gates(target.validate(), cfg, None, backend)


def synthesize_min_two_qubit(
    target: Tableau,
    cfg: Optional[SynthesisConfig] = None,
    backend: Optional[SatBackend] = None,
) -> SynthesisResult:
    """Circuit with the fewest CNOTs realizing ``target`` within T0 + padding steps.

    Minimality is relative to that fixed number of steps.

    Raises:
        SynthesisError: If no circuit is found or the result fails re-verification.
    """
    cfg = (cfg or SynthesisConfig()).model_copy(update={"objective": Objective.TWO_QUBIT_GATES})
    return _min_two_qubit(target.validate(), cfg, None, backend)


def synthesize(
    target: Tableau,
    cfg: Optional[SynthesisConfig] = None,
    input_circuit: Optional[CliffordCircuit] = None,
    backend: Optional[SatBackend] = None,
) -> SynthesisResult:
    """Dispatch on ``cfg.objective``; ``input_circuit``, if it realizes the target, caps the search."""
    cfg = cfg or SynthesisConfig()
    target = target.validate()
    if cfg.objective is Objective.TWO_QUBIT_GATES:
        return _min_two_qubit(target, cfg, input_circuit, backend)
    return _min_gates(target, cfg, input_circuit, backend)


def synthesize_circuit(
    circuit: CliffordCircuit,
    cfg: Optional[SynthesisConfig] = None,
    mode: TableauMode = TableauMode.STATE,
    backend: Optional[SatBackend] = None,
) -> SynthesisResult:
    """Re-synthesize ``circuit``: its tableau is the target and its length an upper bound."""
    target = simulate(circuit, identity_tableau(circuit.num_qubits, mode))
    return synthesize(target, cfg, input_circuit=circuit, backend=backend)
