"""
The probcheck commands.

Each command takes a parsed problem set and the shared options and returns a
RunReport. Commands raise ProbCheckError subclasses for every failure; turning
them into exit codes is left to the entry point.
"""

from fractions import Fraction
from pathlib import Path

import jiter
from loguru import logger
from pydantic import BaseModel, Field

from .. import __version__
from ..ambiguity.analyzer import detect_ambiguity_sites, dual_readings, explain
from ..ambiguity.models import ReadingReport
from ..core.exceptions import MethodMismatchError, ProbCheckError, ProblemParseError, UnknownEventError
from ..core.models import Atom, EventExpr
from ..core.rational import format_fraction, parse_fraction
from ..exact.compositional import prob_compositional
from ..exact.enumeration import prob_enumerate
from ..exact.models import DEFAULT_MAX_ENUMERATION, ExactConfig, ExactResult
from ..exact.repeating import to_repeating_decimal
from ..parsers.models import ParseDiagnostic, ProblemSet
from ..parsers.parser import load_problem, parse_atoms
from ..parsers.printer import pretty_print
from ..sampling.estimator import consistency_check, estimate
from ..sampling.models import DEFAULT_BATCH_SIZE, DEFAULT_Z_THRESHOLD, McConfig
from .corpus import CORPUS_SOURCE, CORPUS_TEXT
from .report import EnumerationRecord, EstimateRecord, EventRecord, RunReport, SamplingRecord, SiteRecord, VerdictRecord


DEFAULT_CLI_TRIALS = 1_000_000


class CommandOptions(BaseModel):
    """
    Options shared by every command.

    Attributes:
        max_enumeration: Enumeration cap in outcomes
        trials: Monte Carlo trials
        seed: Resolved root seed
        z: z-score threshold for check
        workers: Sampling threads
        batch_size: Outcomes per sampling batch
    """

    max_enumeration: int = Field(default=DEFAULT_MAX_ENUMERATION, ge=1)
    trials: int = Field(default=DEFAULT_CLI_TRIALS, ge=1)
    seed: int = Field(default=0, ge=0, lt=1 << 64)
    z: float = Field(default=DEFAULT_Z_THRESHOLD, gt=0)
    workers: int = Field(default=1, ge=1)
    batch_size: int = Field(default=DEFAULT_BATCH_SIZE, ge=1)

    @property
    def exact_config(self) -> ExactConfig:
        """Exact-engine settings."""
        return ExactConfig(max_enumeration=self.max_enumeration)

    @property
    def mc_config(self) -> McConfig:
        """Sampler settings."""
        return McConfig(trials=self.trials, seed=self.seed, batch_size=self.batch_size, workers=self.workers)

    @property
    def sampling_record(self) -> SamplingRecord:
        """The sampling block of a report."""
        return SamplingRecord(seed=self.seed, trials=self.trials, batch_size=self.batch_size)


def load_expected(path: str | Path) -> dict[str, Fraction]:
    """
    Read an expected-values override file.

    The file is a JSON object mapping event names to ``"num/den"`` strings (or integers).

    Raises:
        ProbCheckError: If the file cannot be read or does not have that shape.
    """
    try:
        data = jiter.from_json(Path(path).read_bytes())
    except (OSError, ValueError) as e:
        raise ProbCheckError(f"Cannot read expected values from {path}: {e}") from e
    if not isinstance(data, dict):
        raise ProbCheckError(f"Expected values in {path} must be a JSON object of name -> \"num/den\"")
    expected: dict[str, Fraction] = {}
    for name, value in data.items():
        try:
            expected[name] = parse_fraction(str(value))
        except ValueError as e:
            raise ProbCheckError(f"Expected value for '{name}' in {path}: {e}") from e
    return expected


def _exact_pair(name: str, expr: EventExpr, problem: ProblemSet, options: CommandOptions) -> ExactResult:
    enumerated = prob_enumerate(problem.space, expr, options.exact_config)
    compositional = prob_compositional(problem.space, expr, options.exact_config)
    if enumerated.probability != compositional.probability:
        raise MethodMismatchError(name, enumerated.probability, compositional.probability)
    return enumerated


def _exact_record(name: str, expr: EventExpr, problem: ProblemSet, options: CommandOptions) -> EventRecord:
    result = _exact_pair(name, expr, problem, options)
    assert result.satisfying_count is not None
    return EventRecord(
        name=name,
        expression=pretty_print(expr),
        exact=format_fraction(result.probability),
        exact_decimal=to_repeating_decimal(result.probability),
        compositional=format_fraction(result.probability),
        enumeration=EnumerationRecord(satisfying_count=result.satisfying_count, space_size=result.space_size),
    )


def _site_records(expr: EventExpr) -> list[SiteRecord]:
    return [
        SiteRecord(location=list(site.location), expression=pretty_print(site.sub_expression))
        for site in detect_ambiguity_sites(expr)
    ]


def _fork_reports(problem: ProblemSet, options: CommandOptions) -> list[ReadingReport]:
    return [explain(dual_readings(problem.space, fork.atoms, options.exact_config), fork.name) for fork in problem.forks]


def cmd_eval(problem: ProblemSet, options: CommandOptions) -> RunReport:
    """
    Exact probability of every event by enumeration and by composition.

    Raises:
        SpaceTooLargeError: If the space exceeds the enumeration cap.
        MethodMismatchError: If the two methods disagree on any event.
    """
    records = [_exact_record(event.name, event.expr, problem, options) for event in problem.events]
    logger.success(f"Evaluated {len(records)} event(s) exactly")
    return RunReport(version=__version__, command="eval", source=problem.source_name, events=records)


def cmd_simulate(problem: ProblemSet, options: CommandOptions) -> RunReport:
    """One shared-outcome Monte Carlo pass over every event."""
    estimates = estimate(problem.space, [(event.name, event.expr) for event in problem.events], options.mc_config)
    records = [
        EventRecord(
            name=event.name,
            expression=pretty_print(event.expr),
            estimate=EstimateRecord(hits=est.hits, trials=est.trials, p_hat=est.p_hat, std_err=est.std_err),
        )
        for event, est in zip(problem.events, estimates, strict=True)
    ]
    logger.success(f"Simulated {len(records)} event(s) over {options.trials} trials")
    return RunReport(
        version=__version__,
        command="simulate",
        source=problem.source_name,
        events=records,
        sampling=options.sampling_record,
    )


def cmd_check(
    problem: ProblemSet, options: CommandOptions, expected: dict[str, Fraction] | None = None
) -> RunReport:
    """
    Exact value, estimate and z-test verdict for every event.

    Parameters:
        problem (ProblemSet): The problem.
        options (CommandOptions): Shared options; `z` is the verdict threshold.
        expected (dict[str, Fraction] | None): Values that replace the computed exact value in verdicts.

    Returns:
        RunReport: The report; use `failed_events()` to see which verdicts failed.

    Raises:
        UnknownEventError: If `expected` names an undeclared event.
    """
    expected = expected or {}
    for name in expected:
        if problem.event(name) is None:
            raise UnknownEventError(name, problem.event_names)

    records = [_exact_record(event.name, event.expr, problem, options) for event in problem.events]
    estimates = estimate(problem.space, [(event.name, event.expr) for event in problem.events], options.mc_config)

    checked = []
    for record, est in zip(records, estimates, strict=True):
        assert record.exact is not None
        target = expected.get(record.name, parse_fraction(record.exact))
        if record.name in expected:
            logger.info(f"Checking '{record.name}' against supplied value {format_fraction(target)}")
        verdict = consistency_check(est, target, options.z)
        checked.append(
            record.model_copy(
                update={
                    "estimate": EstimateRecord(hits=est.hits, trials=est.trials, p_hat=est.p_hat, std_err=est.std_err),
                    "verdict": VerdictRecord(
                        p_exact=format_fraction(verdict.p_exact),
                        z_score=verdict.z_score,
                        threshold=verdict.threshold,
                        passed=verdict.passed,
                    ),
                }
            )
        )

    report = RunReport(
        version=__version__,
        command="check",
        source=problem.source_name,
        events=checked,
        sampling=options.sampling_record,
    )
    if not report.failed_events():
        logger.success(f"All {len(checked)} event(s) passed at z <= {options.z:g}")
    return report


def cmd_analyze(
    problem: ProblemSet,
    options: CommandOptions,
    event: str | None = None,
    atoms: str | None = None,
    fork: str | None = None,
) -> RunReport:
    """
    Ambiguity analysis.

    With `event`, reports the ambiguity sites of that event. With `atoms` (an atom
    list such as ``person[0]==may, person[1]==may``) or `fork` (a declared fork),
    reports both readings and their divergence. With no selector, reports sites for
    every event and readings for every fork.

    Raises:
        UnknownEventError: If `event` or `fork` is not declared.
        ProblemParseError: If `atoms` does not parse.
    """
    records: list[EventRecord] = []
    analysis: list[ReadingReport] = []

    if event is not None:
        named = problem.event(event)
        if named is None:
            raise UnknownEventError(event, problem.event_names)
        records.append(EventRecord(name=named.name, expression=pretty_print(named.expr), sites=_site_records(named.expr)))
    if atoms is not None:
        parsed = parse_atoms(atoms, problem.space)
        diagnostics = [item for item in parsed if isinstance(item, ParseDiagnostic)]
        if diagnostics:
            raise ProblemParseError("<atoms>", diagnostics)
        atom_list = [item for item in parsed if isinstance(item, Atom)]
        analysis.append(explain(dual_readings(problem.space, atom_list, options.exact_config)))
    if fork is not None:
        declared = problem.fork(fork)
        if declared is None:
            raise UnknownEventError(fork, problem.fork_names)
        analysis.append(explain(dual_readings(problem.space, declared.atoms, options.exact_config), declared.name))
    if event is None and atoms is None and fork is None:
        records = [
            EventRecord(name=named.name, expression=pretty_print(named.expr), sites=_site_records(named.expr))
            for named in problem.events
        ]
        analysis = _fork_reports(problem, options)

    logger.success(f"Analyzed {len(records)} event(s) and {len(analysis)} reading pair(s)")
    return RunReport(
        version=__version__,
        command="analyze",
        source=problem.source_name,
        events=records,
        analysis=analysis,
    )


def cmd_corpus(options: CommandOptions) -> RunReport:
    """
    Check the built-in corpus and analyze its forks.

    The report carries the corpus text; event records carry both verdicts and
    ambiguity sites.
    """
    problem = load_problem(CORPUS_TEXT, CORPUS_SOURCE)
    checked = cmd_check(problem, options)
    events = [
        record.model_copy(update={"sites": _site_records(named.expr)})
        for record, named in zip(checked.events, problem.events, strict=True)
    ]
    return checked.model_copy(
        update={
            "command": "corpus",
            "events": events,
            "analysis": _fork_reports(problem, options),
            "problem_text": CORPUS_TEXT,
        }
    )
