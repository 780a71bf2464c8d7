"""
Monte Carlo estimation of event probabilities.

One run draws `trials` outcomes and evaluates every event on each of them, so
all events share the same sampled outcomes. Work is split into batches with
independent generator streams; per-event hit counts are summed as integers,
which makes the result identical for any number of workers. Only the draws some
event references are sampled.
"""

import math
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import numpy as np
from loguru import logger

from ..core.evaluation import evaluate_columns
from ..core.exceptions import ExpressionValidationError
from ..core.models import EventExpr, SampleSpace, VarRef
from ..core.transforms import free_vars
from ..core.validation import validate
from .models import DEFAULT_Z_THRESHOLD, ConsistencyVerdict, McConfig, McEstimate
from .rng import batch_generator, draw_columns


def _run_batch(
    space: SampleSpace, exprs: Sequence[EventExpr], draws: frozenset[VarRef], config: McConfig, batch_index: int
) -> list[int]:
    size = min(config.batch_size, config.trials - batch_index * config.batch_size)
    rng = batch_generator(config.seed, batch_index)
    columns = draw_columns(space, rng, size, draws)
    return [int(np.count_nonzero(evaluate_columns(expr, columns, size))) for expr in exprs]


def estimate(
    space: SampleSpace, events: Sequence[tuple[str, EventExpr]], config: McConfig | None = None
) -> list[McEstimate]:
    """
    Estimate the probability of each event from shared sampled outcomes.

    Parameters:
        space (SampleSpace): The sample space.
        events (Sequence[tuple[str, EventExpr]]): Named events to estimate.
        config (McConfig | None): Trials, seed, batching and workers; defaults apply when omitted.

    Returns:
        list[McEstimate]: One estimate per event, in input order, each over `config.trials` outcomes.

    Raises:
        ExpressionValidationError: If any event does not validate against `space`.
    """
    config = config or McConfig()
    for name, expr in events:
        diagnostics = validate(expr, space)
        if diagnostics:
            raise ExpressionValidationError(diagnostics, event_name=name)

    exprs = [expr for _, expr in events]
    draws: frozenset[VarRef] = frozenset().union(*(free_vars(expr) for expr in exprs))
    batches = range(config.batch_count)
    logger.info(
        f"Sampling {config.trials} outcomes in {config.batch_count} batch(es) "
        f"for {len(exprs)} event(s) (seed={config.seed}, workers={config.workers})"
    )

    totals = [0] * len(exprs)
    if config.workers == 1:
        results = (_run_batch(space, exprs, draws, config, index) for index in batches)
        for counts in results:
            totals = [total + count for total, count in zip(totals, counts, strict=True)]
    else:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            for counts in pool.map(lambda index: _run_batch(space, exprs, draws, config, index), batches):
                totals = [total + count for total, count in zip(totals, counts, strict=True)]

    return [
        McEstimate(event_name=name, hits=hits, trials=config.trials)
        for (name, _), hits in zip(events, totals, strict=True)
    ]


def consistency_check(
    estimate: McEstimate, exact: Fraction, z_threshold: float = DEFAULT_Z_THRESHOLD
) -> ConsistencyVerdict:
    """
    Test whether an estimate is within `z_threshold` standard errors of an exact value.

    The distance is computed exactly from the hit count. When the standard error
    is zero (every trial hit, or none did) the check passes only if the estimate
    equals the exact value.

    Parameters:
        estimate (McEstimate): The Monte Carlo estimate.
        exact (Fraction): The exact probability.
        z_threshold (float): Allowed number of standard errors, > 0.

    Returns:
        ConsistencyVerdict: The z-score and the pass/fail decision.
    """
    if z_threshold <= 0:
        raise ValueError(f"z threshold must be positive, got {z_threshold}")
    exact = Fraction(exact)
    distance = abs(Fraction(estimate.hits, estimate.trials) - exact)
    std_err = estimate.std_err
    if std_err == 0:
        z_score = 0.0 if distance == 0 else math.inf
    else:
        z_score = float(distance) / std_err
    verdict = ConsistencyVerdict(
        event_name=estimate.event_name,
        p_exact=exact,
        p_hat=estimate.p_hat,
        std_err=std_err,
        z_score=z_score,
        threshold=z_threshold,
        passed=z_score <= z_threshold,
    )
    if not verdict.passed:
        logger.warning(f"'{estimate.event_name}': estimate {estimate.p_hat} is {z_score:.1f} SE from {exact}")
    return verdict
