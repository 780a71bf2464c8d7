"""
Core models for probcheck.

Sample spaces are products of independent uniform categorical draws. Events
over them are boolean expression trees whose leaves compare draws with each
other or with category values. Every model here is a frozen pydantic model:
immutable, hashable, and compared structurally.
"""

import math
from enum import Enum
from fractions import Fraction
from typing import Annotated, Literal, TypeAlias

from pydantic import BaseModel, ConfigDict, Field, model_validator


# Exact probabilities are plain fractions: always reduced, denominator positive.
Rational: TypeAlias = Fraction


class CategoricalFamily(BaseModel):
    """
    A named group of independent draws sharing one uniform categorical distribution.

    Attributes:
        name: Identifier used by draw references, e.g. ``person``
        count: Number of draws in the family (two people)
        cardinality: Number of equally likely categories (twelve months)
    """

    model_config = ConfigDict(frozen=True)

    name: str = Field(..., min_length=1, description="Family identifier")
    count: int = Field(..., ge=1, description="Number of draws")
    cardinality: int = Field(..., ge=1, description="Number of categories, valued 1..cardinality")


def space_size(families: tuple[CategoricalFamily, ...] | list[CategoricalFamily]) -> int:
    """
    Number of outcomes of the product space over `families`.

    Returns:
        int: The product of cardinality ** count over all families (1 for no families).
    """
    return math.prod(family.cardinality**family.count for family in families)


class SampleSpace(BaseModel):
    """
    Product space of declared families, in declaration order.

    Outcomes are ordered row-major: families in declaration order, draws in
    index order, the last draw varying fastest.
    """

    model_config = ConfigDict(frozen=True)

    families: tuple[CategoricalFamily, ...] = Field(default_factory=tuple)

    @model_validator(mode="after")
    def _check_unique_names(self) -> "SampleSpace":
        seen: set[str] = set()
        for family in self.families:
            if family.name in seen:
                raise ValueError(f"Duplicate family name '{family.name}'")
            seen.add(family.name)
        return self

    @property
    def total_size(self) -> int:
        """Total number of equally likely outcomes."""
        return space_size(self.families)

    def family(self, name: str) -> CategoricalFamily | None:
        """
        Look up a family by name.

        Returns:
            CategoricalFamily | None: The family, or None if it is not declared.
        """
        for family in self.families:
            if family.name == name:
                return family
        return None

    def draws(self) -> list["VarRef"]:
        """
        All draws of the space in enumeration order.

        Returns:
            list[VarRef]: One reference per draw, families in declaration order and indices ascending.
        """
        return [VarRef(family=f.name, index=i) for f in self.families for i in range(f.count)]

    def cardinality_of(self, ref: "VarRef") -> int:
        """Cardinality of the family `ref` draws from; the reference must be valid."""
        family = self.family(ref.family)
        if family is None:
            raise KeyError(ref.family)
        return family.cardinality


class VarRef(BaseModel):
    """Reference to one draw: ``family[index]``."""

    model_config = ConfigDict(frozen=True)

    family: str = Field(..., min_length=1)
    index: int = Field(..., ge=0)

    def __str__(self) -> str:
        return f"{self.family}[{self.index}]"


class Comparison(str, Enum):
    """Atom comparison operator."""

    EQ = "=="
    NEQ = "!="

    def flipped(self) -> "Comparison":
        """The opposite operator; negating an atom flips it."""
        return Comparison.NEQ if self is Comparison.EQ else Comparison.EQ


class Atom(BaseModel):
    """
    Leaf event comparing a draw with another draw or with a category value.

    Attributes:
        lhs: The draw on the left
        cmp: EQ or NEQ
        rhs: Another draw, or a constant category value (1-based)
    """

    model_config = ConfigDict(frozen=True)

    kind: Literal["atom"] = "atom"
    lhs: VarRef
    cmp: Comparison
    rhs: VarRef | int


class Not(BaseModel):
    """Negation of an event."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["not"] = "not"
    child: "EventExpr"


class And(BaseModel):
    """Conjunction of two or more events."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["and"] = "and"
    children: tuple["EventExpr", ...] = Field(..., min_length=2)


class Or(BaseModel):
    """Disjunction of two or more events."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["or"] = "or"
    children: tuple["EventExpr", ...] = Field(..., min_length=2)


class TrueExpr(BaseModel):
    """The certain event."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["true"] = "true"


class FalseExpr(BaseModel):
    """The impossible event."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["false"] = "false"


EventExpr = Annotated[
    Atom | Not | And | Or | TrueExpr | FalseExpr,
    Field(discriminator="kind"),
]

Not.model_rebuild()
And.model_rebuild()
Or.model_rebuild()

TRUE = TrueExpr()
FALSE = FalseExpr()


def var(family: str, index: int) -> VarRef:
    """Shorthand for ``VarRef(family=family, index=index)``."""
    return VarRef(family=family, index=index)


def eq(lhs: VarRef, rhs: VarRef | int) -> Atom:
    """Atom ``lhs == rhs``."""
    return Atom(lhs=lhs, cmp=Comparison.EQ, rhs=rhs)


def neq(lhs: VarRef, rhs: VarRef | int) -> Atom:
    """Atom ``lhs != rhs``."""
    return Atom(lhs=lhs, cmp=Comparison.NEQ, rhs=rhs)


def not_(child: EventExpr) -> Not:
    """Negation node."""
    return Not(child=child)


def and_(*children: EventExpr) -> And:
    """Conjunction node over two or more children."""
    return And(children=children)


def or_(*children: EventExpr) -> Or:
    """Disjunction node over two or more children."""
    return Or(children=children)


class Outcome(BaseModel):
    """
    One point of a sample space: a category value for every draw.

    Values are keyed by ``(family, index)``.
    """

    model_config = ConfigDict(frozen=True)

    values: dict[tuple[str, int], int] = Field(default_factory=dict)

    def value_of(self, ref: VarRef) -> int | None:
        """Value assigned to `ref`, or None when the outcome does not cover it."""
        return self.values.get((ref.family, ref.index))

    @classmethod
    def from_draws(cls, space: SampleSpace, draws: dict[str, list[int] | tuple[int, ...]]) -> "Outcome":
        """
        Build a total outcome for `space` from per-family value lists.

        Parameters:
            space (SampleSpace): The space the outcome belongs to.
            draws (dict): Family name to the list of its draw values, in index order.

        Returns:
            Outcome: The outcome.

        Raises:
            ValueError: If a family is missing, has the wrong number of values, or a value is out of range.
        """
        values: dict[tuple[str, int], int] = {}
        for family in space.families:
            family_values = draws.get(family.name)
            if family_values is None or len(family_values) != family.count:
                raise ValueError(f"Family '{family.name}' needs exactly {family.count} values")
            for index, value in enumerate(family_values):
                if not 1 <= value <= family.cardinality:
                    raise ValueError(f"{family.name}[{index}] = {value} is outside 1..{family.cardinality}")
                values[(family.name, index)] = int(value)
        unknown = set(draws) - {family.name for family in space.families}
        if unknown:
            raise ValueError(f"Unknown families in outcome: {sorted(unknown)}")
        return cls(values=values)


class Diagnostic(BaseModel):
    """
    One validation problem found in an event expression.

    Attributes:
        code: Machine-readable kind of problem
        message: Human-readable description
        expr: The offending subexpression (always an atom)
    """

    model_config = ConfigDict(frozen=True)

    code: Literal["unknown_family", "index_out_of_range", "constant_out_of_range", "self_comparison"]
    message: str = Field(..., min_length=1)
    expr: Atom
