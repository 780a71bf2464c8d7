"""
Run reports: the JSON document every command produces, and its text rendering.

JSON is the source of truth. Fractions are ``"num/den"`` strings, reals are
floats serialized at shortest round-trip precision, and an infinite z-score is
written as the string ``"Infinity"``.
"""

from pydantic import BaseModel, ConfigDict, Field

from ..ambiguity.models import ReadingReport


class EnumerationRecord(BaseModel):
    """Outcome counts from full enumeration."""

    satisfying_count: int = Field(..., ge=0)
    space_size: int = Field(..., ge=1)


class EstimateRecord(BaseModel):
    """A Monte Carlo estimate."""

    model_config = ConfigDict(ser_json_inf_nan="strings")

    hits: int = Field(..., ge=0)
    trials: int = Field(..., ge=1)
    p_hat: float
    std_err: float


class VerdictRecord(BaseModel):
    """A z-test of an estimate against an exact value."""

    model_config = ConfigDict(ser_json_inf_nan="strings")

    p_exact: str
    z_score: float
    threshold: float
    passed: bool


class SiteRecord(BaseModel):
    """An ambiguity site inside an event."""

    location: list[int]
    expression: str


class EventRecord(BaseModel):
    """Everything a command found out about one event."""

    name: str
    expression: str
    exact: str | None = None
    exact_decimal: str | None = None
    compositional: str | None = None
    enumeration: EnumerationRecord | None = None
    estimate: EstimateRecord | None = None
    verdict: VerdictRecord | None = None
    sites: list[SiteRecord] | None = None


class SamplingRecord(BaseModel):
    """Sampling parameters, recorded whenever a command sampled."""

    seed: int
    trials: int
    batch_size: int


class RunReport(BaseModel):
    """
    Result of one command.

    Attributes:
        version: probcheck version that produced the report
        command: eval, simulate, check, analyze or corpus
        source: Problem file path, or ``<corpus>``
        events: Per-event records in declaration order
        sampling: Seed and trials when sampling was used, otherwise null
        analysis: Reading reports for forks or atom lists
        problem_text: The problem file itself (corpus command only)
    """

    model_config = ConfigDict(ser_json_inf_nan="strings")

    version: str
    command: str
    source: str
    events: list[EventRecord] = Field(default_factory=list)
    sampling: SamplingRecord | None = None
    analysis: list[ReadingReport] = Field(default_factory=list)
    problem_text: str | None = None

    def failed_events(self) -> list[str]:
        """Names of events whose verdict failed."""
        return [event.name for event in self.events if event.verdict is not None and not event.verdict.passed]

    def to_json(self) -> str:
        """Serialize to indented JSON."""
        return self.model_dump_json(indent=2)


def _site_lines(event: EventRecord) -> list[str]:
    if event.sites is None:
        return []
    if not event.sites:
        return ["  no ambiguity sites"]
    lines = []
    for site in event.sites:
        where = "root" if not site.location else "path " + ".".join(str(i) for i in site.location)
        lines.append(f"  ambiguity site at {where}: {site.expression}")
    return lines


def _event_lines(event: EventRecord) -> list[str]:
    lines = [f"{event.name}: {event.expression}"]
    if event.exact is not None:
        line = f"  exact: {event.exact} = {event.exact_decimal}"
        if event.enumeration is not None:
            line += f" ({event.enumeration.satisfying_count} of {event.enumeration.space_size} outcomes"
            line += f"; compositional {event.compositional})" if event.compositional is not None else ")"
        lines.append(line)
    if event.estimate is not None:
        lines.append(f"  estimate: {event.estimate.p_hat!r} ± {event.estimate.std_err!r}")
    if event.verdict is not None:
        status = "PASS" if event.verdict.passed else "FAIL"
        lines.append(
            f"  check: z = {event.verdict.z_score:.3f} against {event.verdict.p_exact} "
            f"(threshold {event.verdict.threshold:g}) {status}"
        )
    lines.extend(_site_lines(event))
    return lines


def render_text(report: RunReport) -> str:
    """
    Render a report for the terminal.

    Estimates use the ``value ± stderr`` form at full float precision.
    """
    lines: list[str] = []
    if report.problem_text is not None:
        lines.extend(report.problem_text.rstrip("\n").splitlines())
        lines.append("")
    header = f"# probcheck {report.version} {report.command} {report.source}"
    if report.sampling is not None:
        header += f" (seed {report.sampling.seed}, trials {report.sampling.trials})"
    lines.append(header)
    for event in report.events:
        lines.extend(_event_lines(event))
    for reading in report.analysis:
        lines.extend(reading.render())
    failed = report.failed_events()
    if any(event.verdict is not None for event in report.events):
        lines.append("all checks passed" if not failed else f"failed: {', '.join(failed)}")
    return "\n".join(lines) + "\n"
