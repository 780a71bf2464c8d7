"""
Models for exact probability results and their configuration.
"""

from enum import Enum
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, model_validator


DEFAULT_MAX_ENUMERATION = 10_000_000


class ExactMethod(str, Enum):
    """How an exact probability was obtained."""

    ENUMERATION = "enumeration"
    COMPOSITIONAL = "compositional"


class ExactConfig(BaseModel):
    """
    Configuration for exact evaluation.

    Attributes:
        max_enumeration: Largest number of outcomes an enumeration may visit
    """

    max_enumeration: int = Field(default=DEFAULT_MAX_ENUMERATION, ge=1, description="Enumeration cap in outcomes")
    chunk_size: int = Field(default=1 << 20, ge=1, description="Outcomes decoded per vectorized step")


class ExactResult(BaseModel):
    """
    An exact event probability.

    Attributes:
        probability: The reduced fraction
        method: ENUMERATION or COMPOSITIONAL
        satisfying_count: Outcomes in the event (enumeration only)
        space_size: Outcomes in the space
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    probability: Fraction
    method: ExactMethod
    satisfying_count: int | None = Field(default=None, ge=0)
    space_size: int = Field(..., ge=1)

    @model_validator(mode="after")
    def _check_consistency(self) -> "ExactResult":
        if not 0 <= self.probability <= 1:
            raise ValueError(f"Probability {self.probability} outside [0, 1]")
        if self.method is ExactMethod.ENUMERATION:
            if self.satisfying_count is None:
                raise ValueError("Enumeration results must report satisfying_count")
            if Fraction(self.satisfying_count, self.space_size) != self.probability:
                raise ValueError("probability must equal satisfying_count / space_size")
        return self
