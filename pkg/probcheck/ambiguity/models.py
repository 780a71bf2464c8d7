"""
Models for De Morgan ambiguity analysis.
"""

from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..core.models import And, EventExpr, Not


class ReadingPair(BaseModel):
    """
    The two readings of a negated condition over several atoms.

    The loose reading ("not both") negates the conjunction; the strict reading
    ("neither") conjoins the negations. The strict reading implies the loose one.

    Attributes:
        loose_reading: Not(And(atoms)), or Not(atom) for a single atom
        strict_reading: And(Not(atom), ...), or Not(atom) for a single atom
        p_loose: Exact probability of the loose reading
        p_strict: Exact probability of the strict reading
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    loose_reading: EventExpr
    strict_reading: EventExpr
    p_loose: Fraction
    p_strict: Fraction

    @model_validator(mode="after")
    def _check_order(self) -> "ReadingPair":
        if self.p_strict > self.p_loose:
            raise ValueError(f"strict reading ({self.p_strict}) cannot be more likely than loose ({self.p_loose})")
        return self

    @property
    def divergence(self) -> Fraction:
        """p_loose - p_strict, never negative."""
        return self.p_loose - self.p_strict

    @property
    def ambiguous(self) -> bool:
        """True when the two readings describe different events."""
        return self.divergence != 0


class AmbiguitySite(BaseModel):
    """
    A ``Not(And(...))`` subexpression, where "not both" and "neither" part ways.

    Attributes:
        location: Child positions from the root to the site
        sub_expression: The negated conjunction
    """

    model_config = ConfigDict(frozen=True)

    location: tuple[int, ...] = Field(default_factory=tuple)
    sub_expression: Not

    @model_validator(mode="after")
    def _check_shape(self) -> "AmbiguitySite":
        child = self.sub_expression.child
        if not isinstance(child, And) or len(child.children) < 2:
            raise ValueError("An ambiguity site must be a negated conjunction of two or more events")
        return self


class ReadingReport(BaseModel):
    """
    Rendered comparison of a ReadingPair.

    Fractions are ``num/den`` strings; decimals use repeating notation.
    """

    model_config = ConfigDict(frozen=True)

    name: str | None = None
    loose_reading: str
    strict_reading: str
    p_loose: str
    p_loose_decimal: str
    p_strict: str
    p_strict_decimal: str
    divergence: str
    divergence_decimal: str
    equivalent: bool
    summary: str

    def render(self) -> list[str]:
        """Text lines for terminal output."""
        title = f"fork {self.name}" if self.name else "readings"
        return [
            f"{title}:",
            f"  not both: {self.loose_reading}",
            f"            {self.p_loose} = {self.p_loose_decimal}",
            f"  neither:  {self.strict_reading}",
            f"            {self.p_strict} = {self.p_strict_decimal}",
            f"  divergence: {self.divergence} = {self.divergence_decimal}",
            f"  {self.summary}",
        ]
