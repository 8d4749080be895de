"""Command-line entry point: ``clifford-sat <command> [options]``.

Exit codes: 0 success, 1 usage, 2 unreadable or malformed input, 3 solver
failure or timeout without a result.
"""

import argparse
import logging
import sys
from typing import NoReturn, Optional, Sequence

from .._utils.log import configure_logging
from ..exceptions import CliffordSatError
from ..synthesis.models import Objective, Strategy
from .commands import (
    EXIT_OK,
    EXIT_USAGE,
    cmd_bench,
    cmd_encode,
    cmd_oracle,
    cmd_random,
    cmd_simulate,
    cmd_synth,
    exit_code_for,
    load_target,
)

logger = logging.getLogger(__name__)


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that exits with the usage code 1 instead of argparse's 2."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_solver_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--backend", default=None, help="'pysat:<solver>' or 'external' (default: $CLIFFORD_SAT_BACKEND)"
    )
    parser.add_argument(
        "--solver-cmd",
        dest="solver_command",
        default=None,
        help="external solver command line (default: $CLIFFORD_SAT_SOLVER)",
    )


def _add_encoding_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--unitary", action="store_true", help="treat the target as a full Clifford unitary (2n rows)")
    parser.add_argument(
        "--match",
        choices=["canonical", "exact"],
        default="canonical",
        help="state targets: match the generated group (canonical) or the rows verbatim (exact)",
    )
    parser.add_argument("--no-symmetry-breaking", action="store_true", help="omit the symmetry-breaking clauses")


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with all subcommands."""
    parser = _Parser(prog="clifford-sat", description="Gate-count-optimal Clifford circuit synthesis via SAT")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logging")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    synth = sub.add_parser("synth", help="synthesize an optimal circuit for a tableau or circuit file")
    synth.add_argument("--target", required=True, help="tableau file, or circuit file to re-synthesize")
    synth.add_argument("--objective", choices=[o.value for o in Objective], default=Objective.TOTAL_GATES.value)
    synth.add_argument("--strategy", choices=[s.value for s in Strategy], default=Strategy.BINARY_SEARCH.value)
    synth.add_argument("--timeout", type=float, default=None, help="total seconds (default: $CLIFFORD_SAT_TIMEOUT)")
    synth.add_argument("--call-timeout", type=float, default=None, help="seconds per solver call")
    synth.add_argument("--padding", type=int, default=None, help="extra time steps for CNOT minimization (default: n)")
    synth.add_argument("--max-time-steps", type=int, default=None, help="cap on the probed time-step limit")
    synth.add_argument("--seed", type=int, default=0, help="recorded in logs for reproducibility")
    synth.add_argument("-o", "--output", default=None, help="circuit output file (default: stdout)")
    synth.add_argument("--log", default=None, help="append the JSON summary line here (default: stderr)")
    synth.add_argument("--dimacs", default=None, help="also write the final instance as DIMACS, plus a .names sidecar")
    _add_encoding_options(synth)
    _add_solver_options(synth)
    synth.set_defaults(handler=cmd_synth)

    bench = sub.add_parser("bench", help="run the random-tableau benchmark and emit CSV")
    bench.add_argument("--qubits", required=True, help="qubit counts, e.g. '2..4' or '3,5'")
    bench.add_argument("--runs", type=int, default=10, help="random tableaus per qubit count")
    bench.add_argument("--seed-base", type=int, default=0, help="first seed; seeds are consecutive")
    bench.add_argument("--methods", default="sat,baseline", help="comma-separated: sat, sat-2q, baseline")
    bench.add_argument("--timeout", type=float, default=None, help="seconds per run")
    bench.add_argument("--jobs", type=int, default=1, help="cells run in parallel")
    bench.add_argument("--csv", default=None, help="CSV output file (default: stdout)")
    bench.add_argument("--jsonl", default=None, help="also write one JSON object per row here")
    _add_solver_options(bench)
    bench.set_defaults(handler=cmd_bench)

    simulate = sub.add_parser("simulate", help="print the tableau a circuit prepares")
    simulate.add_argument("circuit", help="circuit file")
    simulate.add_argument("--unitary", action="store_true", help="start from the 2n-row identity tableau")
    simulate.set_defaults(handler=cmd_simulate)

    random = sub.add_parser("random", help="write a seeded random tableau")
    random.add_argument("-n", "--qubits", type=int, required=True)
    random.add_argument("--seed", type=int, default=0)
    random.add_argument("--unitary", action="store_true")
    random.add_argument("-o", "--output", default=None, help="tableau output file (default: stdout)")
    random.set_defaults(handler=cmd_random)

    oracle = sub.add_parser("oracle", help="exhaustive minimal gate count for n <= 3 state targets")
    oracle.add_argument("--target", required=True, help="tableau or circuit file")
    oracle.add_argument("--max-gates", type=int, default=8)
    oracle.add_argument("--two-qubit", action="store_true", help="report the minimal CNOT count instead")
    oracle.add_argument("--witness", action="store_true", help="also print a minimal circuit")
    oracle.set_defaults(handler=cmd_oracle)

    enc = sub.add_parser("encode", help="write the CNF of one decision instance")
    enc.add_argument("--target", required=True, help="tableau or circuit file")
    enc.add_argument("-T", "--time-steps", type=int, required=True)
    enc.add_argument("-K", "--cnot-bound", type=int, default=None)
    enc.add_argument("-o", "--output", required=True, help="DIMACS output file; names go to <output>.names")
    _add_encoding_options(enc)
    enc.set_defaults(handler=cmd_encode)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI and return the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    configure_logging(args.verbose)
    try:
        return int(args.handler(args))
    except (CliffordSatError, OSError, ValueError) as e:
        logger.debug("Command failed", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return exit_code_for(e)


__all__ = ["EXIT_OK", "build_parser", "load_target", "main"]
