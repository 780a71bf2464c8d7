"""
Seeded Monte Carlo estimation with Bernoulli standard errors.
"""

from .estimator import consistency_check, estimate
from .models import DEFAULT_BATCH_SIZE, DEFAULT_Z_THRESHOLD, FULL_SCALE_TRIALS, ConsistencyVerdict, McConfig, McEstimate
from .rng import batch_generator, draw_columns, sample_outcome
from .stats import std_error


__all__ = [
    "DEFAULT_BATCH_SIZE",
    "DEFAULT_Z_THRESHOLD",
    "FULL_SCALE_TRIALS",
    "ConsistencyVerdict",
    "McConfig",
    "McEstimate",
    "batch_generator",
    "consistency_check",
    "draw_columns",
    "estimate",
    "sample_outcome",
    "std_error",
]
