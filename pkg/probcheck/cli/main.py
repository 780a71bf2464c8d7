"""
Command-line entry point.

Exit codes: 0 ok, 1 parse or validation error, 2 space too large for
enumeration, 3 internal mismatch between exact methods, 4 consistency failure.
"""

import argparse
import secrets
import sys
from collections.abc import Sequence
from pathlib import Path

from loguru import logger
from pydantic import ValidationError

from .. import __version__
from ..core.exceptions import ConsistencyFailureError, ProbCheckError, ProblemParseError
from ..exact.models import DEFAULT_MAX_ENUMERATION
from ..logging_config import configure_logging
from ..parsers.models import ProblemSet
from ..parsers.parser import load_problem
from ..sampling.models import DEFAULT_BATCH_SIZE, DEFAULT_Z_THRESHOLD
from .commands import (
    DEFAULT_CLI_TRIALS,
    CommandOptions,
    cmd_analyze,
    cmd_check,
    cmd_corpus,
    cmd_eval,
    cmd_simulate,
    load_expected,
)
from .report import RunReport, render_text


RANDOM_SEED = "random"


def _seed(text: str) -> int | None:
    if text == RANDOM_SEED:
        return None
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer or '{RANDOM_SEED}', got '{text}'") from None


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subcommand per command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text", help="report format (default: text)")
    common.add_argument(
        "--max-enumeration",
        type=int,
        default=DEFAULT_MAX_ENUMERATION,
        help=f"largest space to enumerate (default: {DEFAULT_MAX_ENUMERATION})",
    )
    common.add_argument(
        "--trials", type=int, default=DEFAULT_CLI_TRIALS, help=f"Monte Carlo trials (default: {DEFAULT_CLI_TRIALS})"
    )
    common.add_argument("--seed", type=_seed, default=0, help=f"root seed, or '{RANDOM_SEED}' (default: 0)")
    common.add_argument(
        "--z", type=float, default=DEFAULT_Z_THRESHOLD, help=f"z-score threshold (default: {DEFAULT_Z_THRESHOLD:g})"
    )
    common.add_argument("--workers", type=int, default=1, help="sampling threads (default: 1)")
    common.add_argument(
        "--batch-size", type=int, default=DEFAULT_BATCH_SIZE, help=f"outcomes per batch (default: {DEFAULT_BATCH_SIZE})"
    )
    common.add_argument("-v", "--verbose", action="store_true", help="log to stderr (level from PROBCHECK_LOG_LEVEL)")

    parser = argparse.ArgumentParser(
        prog="probcheck", description="Exact and Monte Carlo probabilities of events over uniform categorical draws."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser("eval", parents=[common], help="exact probabilities by two methods").add_argument(
        "file", help="problem file, or - for stdin"
    )
    commands.add_parser("simulate", parents=[common], help="Monte Carlo estimates").add_argument(
        "file", help="problem file, or - for stdin"
    )
    check = commands.add_parser("check", parents=[common], help="compare estimates with exact values")
    check.add_argument("file", help="problem file, or - for stdin")
    check.add_argument("--expected", metavar="FILE", help='JSON object of event name -> "num/den" to check against')
    analyze = commands.add_parser("analyze", parents=[common], help="'not both' versus 'neither' analysis")
    analyze.add_argument("file", help="problem file, or - for stdin")
    selector = analyze.add_mutually_exclusive_group()
    selector.add_argument("--event", metavar="NAME", help="report ambiguity sites of one event")
    selector.add_argument("--atoms", metavar="ATOMS", help="compare both readings of a comma-separated atom list")
    selector.add_argument("--fork", metavar="NAME", help="compare both readings of a declared fork")
    commands.add_parser("corpus", parents=[common], help="print and check the built-in corpus")
    return parser


def _read_problem(path: str) -> ProblemSet:
    if path == "-":
        return load_problem(sys.stdin.read(), "<stdin>")
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ProbCheckError(f"Cannot read {path}: {e.strerror or e}") from e
    return load_problem(text, path)


def _options(args: argparse.Namespace) -> CommandOptions:
    seed = args.seed
    if seed is None:
        seed = secrets.randbits(64)
        logger.info(f"Drew random seed {seed}")
    return CommandOptions(
        max_enumeration=args.max_enumeration,
        trials=args.trials,
        seed=seed,
        z=args.z,
        workers=args.workers,
        batch_size=args.batch_size,
    )


def _run(args: argparse.Namespace) -> RunReport:
    options = _options(args)
    if args.command == "corpus":
        return cmd_corpus(options)
    problem = _read_problem(args.file)
    if args.command == "eval":
        return cmd_eval(problem, options)
    if args.command == "simulate":
        return cmd_simulate(problem, options)
    if args.command == "check":
        expected = load_expected(args.expected) if args.expected else None
        return cmd_check(problem, options, expected)
    return cmd_analyze(problem, options, event=args.event, atoms=args.atoms, fork=args.fork)


def _report_error(error: Exception) -> None:
    sys.stderr.write(f"error: {error}\n")
    if isinstance(error, ProblemParseError):
        for diagnostic in error.diagnostics:
            sys.stderr.write(f"  {error.source_name}:{diagnostic}\n")


def main(argv: Sequence[str] | None = None) -> int:
    """
    Run probcheck with `argv` and return the exit code.

    The report goes to stdout; errors and logs go to stderr. A `check` or `corpus`
    run with failed verdicts still prints its report before exiting with 4.
    """
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        # usage errors are parse errors; --help and --version exit 0
        return 0 if e.code in (0, None) else 1
    configure_logging(verbose=args.verbose)
    try:
        report = _run(args)
        sys.stdout.write(report.to_json() + "\n" if args.format == "json" else render_text(report))
        failed = report.failed_events()
        if failed:
            raise ConsistencyFailureError(failed)
    except ProbCheckError as e:
        _report_error(e)
        return e.exit_code
    except ValidationError as e:
        sys.stderr.write(f"error: invalid option value: {e.errors()[0]['msg']} ({e.errors()[0]['loc']})\n")
        return 1
    return 0


def run() -> None:
    """Console-script entry point."""
    sys.exit(main())
