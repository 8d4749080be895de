"""Subcommand implementations. Each takes the parsed namespace and returns an exit code."""

import argparse
import json
import logging
import sys
import time
from pathlib import Path
from typing import Optional, Tuple

from .._utils.log import job_id_context
from ..baselines.bfs import bfs_min_two_qubit, bfs_optimal
from ..circuit.io import parse_circuit, serialize_circuit
from ..circuit.models import CliffordCircuit
from ..cnf.formula import name_map_text, to_dimacs
from ..encoding.encoder import encode
from ..encoding.models import EncodedInstance, MatchMode, SynthesisInstance
from ..exceptions import CircuitError, CliffordSatError, ParseError, SolverError, SynthesisError, TableauError
from ..solvers import make_backend
from ..stabilizer.io import parse_tableau, serialize_tableau
from ..stabilizer.models import TableauMode
from ..stabilizer.tableau import Tableau, equivalent, identity_tableau, random_tableau, simulate
from ..synthesis.models import Objective, Strategy, SynthesisConfig, SynthesisResult
from ..synthesis.optimizer import synthesize
from . import bench

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_SOLVER = 3


def _mode(args: argparse.Namespace) -> Optional[TableauMode]:
    return TableauMode.UNITARY if getattr(args, "unitary", False) else None


def _is_circuit_text(text: str) -> bool:
    for raw in text.splitlines():
        content = raw.split("#", 1)[0].strip()
        if content:
            return content.split()[0].lower() == "qubits"
    return False


def load_target(path: str, mode: Optional[TableauMode] = None) -> Tuple[Tableau, Optional[CliffordCircuit]]:
    """Read a target from a tableau file, or from a circuit file which is simulated first.

    Returns:
        The target tableau and, for circuit files, the circuit itself.
    """
    text = Path(path).read_text(encoding="utf-8")
    if _is_circuit_text(text):
        circuit = parse_circuit(text)
        start = identity_tableau(circuit.num_qubits, mode or TableauMode.STATE)
        return simulate(circuit, start), circuit
    return parse_tableau(text, mode), None


def _write_text(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _checked_circuit_text(circuit: CliffordCircuit, target: Tableau, match_mode: MatchMode) -> str:
    """Serialize ``circuit`` after checking the text re-parses into a circuit realizing ``target``."""
    text = serialize_circuit(circuit)
    reparsed = parse_circuit(text)
    final = simulate(reparsed, identity_tableau(target.num_qubits, target.mode))
    if match_mode is MatchMode.CANONICAL and target.mode is TableauMode.STATE:
        ok = equivalent(final, target)
    else:
        ok = final == target
    if reparsed != circuit or not ok:
        raise SynthesisError("written circuit does not re-verify against the target")
    return text


def _write_dimacs(path: str, enc: EncodedInstance) -> None:
    cnf_path = Path(path)
    cnf_path.write_text(to_dimacs(enc.formula), encoding="utf-8")
    names_path = cnf_path.with_name(cnf_path.name + ".names")
    names_path.write_text(name_map_text(enc.formula), encoding="utf-8")
    logger.info("Wrote DIMACS to %s and variable names to %s", cnf_path, names_path)


def _summary(args: argparse.Namespace, target: Tableau, result: SynthesisResult, seconds: float) -> str:
    record = {
        "target": args.target,
        "n": target.num_qubits,
        "mode": target.mode.value,
        "objective": result.objective.value,
        "status": result.optimal.value,
        "total_gates": result.total_gates,
        "two_qubit_gates": result.two_qubit_gates,
        "time_steps": result.time_steps,
        "solver_calls": len(result.calls),
        "seconds": round(seconds, 3),
    }
    return json.dumps(record, sort_keys=True)


def cmd_synth(args: argparse.Namespace) -> int:
    """Synthesize an optimal circuit for ``--target`` and write it with a JSON summary line."""
    target, input_circuit = load_target(args.target, _mode(args))
    cfg_fields = {
        "objective": Objective(args.objective),
        "strategy": Strategy(args.strategy),
        "match_mode": MatchMode(args.match),
        "symmetry_breaking": not args.no_symmetry_breaking,
        "padding": args.padding,
        "max_time_steps": args.max_time_steps,
        "per_call_timeout": args.call_timeout,
        "seed": args.seed,
        "backend": args.backend,
    }
    if args.timeout is not None:
        cfg_fields["total_timeout"] = args.timeout
    cfg = SynthesisConfig(**cfg_fields)
    backend = make_backend(args.backend, args.solver_command)

    token = job_id_context.set("synth")
    started = time.perf_counter()
    try:
        result = synthesize(target, cfg, input_circuit=input_circuit, backend=backend)
        text = _checked_circuit_text(result.circuit, target, cfg.match_mode)
    finally:
        job_id_context.reset(token)
    seconds = time.perf_counter() - started

    _write_text(args.output, text)
    summary = _summary(args, target, result, seconds)
    if args.log:
        with open(args.log, "a", encoding="utf-8") as f:
            f.write(summary + "\n")
    else:
        print(summary, file=sys.stderr)

    if args.dimacs or args.verbose:
        cnot_bound = result.two_qubit_gates if cfg.objective is Objective.TWO_QUBIT_GATES else None
        enc = encode(
            SynthesisInstance(
                target=target,
                time_steps=result.time_steps,
                two_qubit_bound=cnot_bound,
                match_mode=cfg.match_mode,
                symmetry_breaking=cfg.symmetry_breaking,
            )
        )
        stats = enc.stats()
        logger.info(
            "Final instance: %d vars, %d clauses, %d choices/step, %d tableau vars/boundary",
            stats.num_vars,
            stats.num_clauses,
            stats.choices_per_step,
            stats.tableau_vars_per_boundary,
        )
        if args.dimacs:
            _write_dimacs(args.dimacs, enc)
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    """Run the random-tableau benchmark grid and write CSV (and optionally JSON lines)."""
    qubits = bench.parse_qubit_range(args.qubits)
    methods = bench.parse_methods(args.methods)
    timeout = args.timeout if args.timeout is not None else SynthesisConfig().total_timeout
    csv_path = None if args.csv in (None, "-") else Path(args.csv)
    if csv_path is not None:
        csv_path.touch()
    rows = bench.run_bench(
        qubits,
        args.runs,
        methods,
        timeout,
        jobs=args.jobs,
        seed_base=args.seed_base,
        backend=args.backend,
        solver_command=args.solver_command,
    )
    if csv_path is not None:
        with csv_path.open("w", encoding="utf-8", newline="") as f:
            bench.write_csv(rows, f)
    else:
        bench.write_csv(rows, sys.stdout)
    if args.jsonl:
        with open(args.jsonl, "w", encoding="utf-8") as f:
            bench.write_jsonl(rows, f)
    for line in bench.summarize(rows):
        print(line, file=sys.stderr)
    return EXIT_OK


def cmd_simulate(args: argparse.Namespace) -> int:
    """Print the tableau a circuit file prepares from the zero state (or the identity with ``--unitary``)."""
    circuit = parse_circuit(Path(args.circuit).read_text(encoding="utf-8"))
    mode = TableauMode.UNITARY if args.unitary else TableauMode.STATE
    final = simulate(circuit, identity_tableau(circuit.num_qubits, mode))
    sys.stdout.write(serialize_tableau(final))
    return EXIT_OK


def cmd_random(args: argparse.Namespace) -> int:
    """Write a seeded random tableau."""
    mode = TableauMode.UNITARY if args.unitary else TableauMode.STATE
    _write_text(args.output, serialize_tableau(random_tableau(args.qubits, args.seed, mode)))
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    """Print the BFS-minimal gate count (or CNOT count) of a state target."""
    target, _ = load_target(args.target, TableauMode.STATE)
    if args.two_qubit:
        count = bfs_min_two_qubit(target.num_qubits, target, args.max_gates)
        if count is None:
            print(f"no circuit within {args.max_gates} gates", file=sys.stderr)
            return EXIT_SOLVER
        print(count)
        return EXIT_OK

    found = bfs_optimal(target.num_qubits, target, args.max_gates)
    if found is None:
        print(f"no circuit within {args.max_gates} gates", file=sys.stderr)
        return EXIT_SOLVER
    count, witness = found
    print(count)
    if args.witness:
        sys.stdout.write(_checked_circuit_text(witness, target, MatchMode.CANONICAL))
    return EXIT_OK


def cmd_encode(args: argparse.Namespace) -> int:
    """Write the CNF of one (T, K) decision instance plus its variable-name sidecar."""
    target, _ = load_target(args.target, _mode(args))
    enc = encode(
        SynthesisInstance(
            target=target,
            time_steps=args.time_steps,
            two_qubit_bound=args.cnot_bound,
            match_mode=MatchMode(args.match),
            symmetry_breaking=not args.no_symmetry_breaking,
        )
    )
    _write_dimacs(args.output, enc)
    stats = enc.stats()
    print(f"{stats.num_vars} variables, {stats.num_clauses} clauses", file=sys.stderr)
    return EXIT_OK


def exit_code_for(error: BaseException) -> int:
    """Map an exception raised by a subcommand to the process exit code."""
    if isinstance(error, (ParseError, TableauError, CircuitError, OSError)):
        return EXIT_INPUT
    if isinstance(error, (SynthesisError, SolverError, CliffordSatError)):
        return EXIT_SOLVER
    return EXIT_USAGE
