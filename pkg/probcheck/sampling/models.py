"""
Models for Monte Carlo estimation: configuration, estimates and verdicts.
"""

from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from .stats import std_error


FULL_SCALE_TRIALS = 10_000_000
DEFAULT_BATCH_SIZE = 1 << 16
DEFAULT_Z_THRESHOLD = 5.0


class McConfig(BaseModel):
    """
    Configuration for a Monte Carlo run.

    Attributes:
        trials: Number of sampled outcomes shared by all events
        seed: Root seed, an unsigned 64-bit integer
        batch_size: Outcomes per batch; each batch has its own generator stream
        workers: Threads used to run batches; results do not depend on it
    """

    trials: int = Field(default=FULL_SCALE_TRIALS, ge=1, description="Number of sampled outcomes")
    seed: int = Field(default=0, ge=0, lt=1 << 64, description="Root seed")
    batch_size: int = Field(default=DEFAULT_BATCH_SIZE, ge=1, description="Outcomes per batch")
    workers: int = Field(default=1, ge=1, description="Worker threads")

    @property
    def batch_count(self) -> int:
        """Number of batches needed to cover all trials."""
        return -(-self.trials // self.batch_size)


class McEstimate(BaseModel):
    """
    Hit count of one event over a Monte Carlo run.

    `p_hat` and `std_err` are derived from `hits` and `trials` on access.
    """

    model_config = ConfigDict(frozen=True)

    event_name: str
    hits: int = Field(..., ge=0)
    trials: int = Field(..., ge=1)

    @model_validator(mode="after")
    def _check_hits(self) -> "McEstimate":
        if self.hits > self.trials:
            raise ValueError(f"hits ({self.hits}) cannot exceed trials ({self.trials})")
        return self

    @computed_field  # type: ignore[prop-decorator]
    @property
    def p_hat(self) -> float:
        """Observed proportion hits / trials."""
        return self.hits / self.trials

    @computed_field  # type: ignore[prop-decorator]
    @property
    def std_err(self) -> float:
        """Bernoulli standard error at the observed proportion."""
        return std_error(self.p_hat, self.trials)

    def format(self) -> str:
        """``"<p_hat> ± <std_err>"``, each at full float precision."""
        return f"{self.p_hat!r} ± {self.std_err!r}"


class ConsistencyVerdict(BaseModel):
    """
    Whether an estimate agrees with an exact value.

    Attributes:
        event_name: Event checked
        p_exact: Exact probability
        p_hat: Monte Carlo estimate
        std_err: Standard error of the estimate
        z_score: |p_hat - p_exact| / std_err (infinite when std_err is 0 and the values differ)
        threshold: z threshold used
        passed: z_score <= threshold
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    event_name: str
    p_exact: Fraction
    p_hat: float
    std_err: float = Field(..., ge=0)
    z_score: float = Field(..., ge=0)
    threshold: float = Field(..., gt=0)
    passed: bool

    @model_validator(mode="after")
    def _check_passed(self) -> "ConsistencyVerdict":
        if self.passed != (self.z_score <= self.threshold):
            raise ValueError("passed must equal z_score <= threshold")
        return self
