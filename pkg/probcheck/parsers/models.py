"""
Models for problem files: source locations, diagnostics and parsed problem sets.
"""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..core.models import Atom, EventExpr, SampleSpace


class SourceSpan(BaseModel):
    """Location of a piece of source text (1-based line and column)."""

    model_config = ConfigDict(frozen=True)

    line: int = Field(..., ge=1)
    column: int = Field(..., ge=1)
    length: int = Field(default=0, ge=0)

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


class Severity(str, Enum):
    """Diagnostic severity."""

    ERROR = "error"
    WARNING = "warning"


class ParseDiagnostic(BaseModel):
    """
    A problem found while reading a problem file.

    Attributes:
        span: Where the problem is
        message: What is wrong
        severity: ERROR makes the parse fail; WARNING does not
    """

    model_config = ConfigDict(frozen=True)

    span: SourceSpan
    message: str = Field(..., min_length=1)
    severity: Severity = Severity.ERROR

    def __str__(self) -> str:
        return f"{self.span}: {self.severity.value}: {self.message}"


class NamedEvent(BaseModel):
    """An ``event NAME: expr`` declaration."""

    model_config = ConfigDict(frozen=True)

    name: str
    expr: EventExpr


class Fork(BaseModel):
    """A ``fork NAME: atom, atom, ...`` declaration: the ingredients of a negated condition."""

    model_config = ConfigDict(frozen=True)

    name: str
    atoms: tuple[Atom, ...] = Field(..., min_length=1)


class ProblemSet(BaseModel):
    """
    A parsed and validated problem file.

    Attributes:
        space: The declared sample space
        events: Named events in declaration order
        forks: Named atom lists for ambiguity analysis, in declaration order
        source_name: Where the text came from
        warnings: Non-fatal diagnostics
    """

    model_config = ConfigDict(frozen=True)

    space: SampleSpace
    events: tuple[NamedEvent, ...] = Field(default_factory=tuple)
    forks: tuple[Fork, ...] = Field(default_factory=tuple)
    source_name: str = "<string>"
    warnings: tuple[ParseDiagnostic, ...] = Field(default_factory=tuple)

    @model_validator(mode="after")
    def _check_unique_names(self) -> "ProblemSet":
        names = [event.name for event in self.events] + [fork.name for fork in self.forks]
        duplicates = {name for name in names if names.count(name) > 1}
        if duplicates:
            raise ValueError(f"Duplicate names: {sorted(duplicates)}")
        return self

    @property
    def event_names(self) -> list[str]:
        """Event names in declaration order."""
        return [event.name for event in self.events]

    @property
    def fork_names(self) -> list[str]:
        """Fork names in declaration order."""
        return [fork.name for fork in self.forks]

    def event(self, name: str) -> NamedEvent | None:
        """The event called `name`, or None."""
        return next((event for event in self.events if event.name == name), None)

    def fork(self, name: str) -> Fork | None:
        """The fork called `name`, or None."""
        return next((fork for fork in self.forks if fork.name == name), None)

    def same_content(self, other: "ProblemSet") -> bool:
        """True when both sets declare the same space, events and forks, ignoring source and warnings."""
        return (self.space, self.events, self.forks) == (other.space, other.events, other.forks)
