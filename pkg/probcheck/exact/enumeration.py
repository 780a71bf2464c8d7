"""
Exhaustive enumeration of a sample space.

Outcomes are numbered row-major (families in declaration order, draws in index
order, last draw fastest) and decoded in chunks by repeated `numpy.divmod`, one
mixed-radix digit per draw, so the expression is evaluated on whole arrays at a
time. Single-category draws are constant columns and add no digit.
"""

from collections.abc import Iterator, Sequence
from fractions import Fraction

import numpy as np
from loguru import logger

from ..core.evaluation import evaluate_columns
from ..core.exceptions import ExpressionValidationError, SpaceTooLargeError
from ..core.models import EventExpr, SampleSpace, VarRef
from ..core.validation import validate
from .models import ExactConfig, ExactMethod, ExactResult


def iter_assignment_chunks(
    draws: Sequence[VarRef], cardinalities: Sequence[int], chunk_size: int
) -> Iterator[tuple[dict[VarRef, np.ndarray], int]]:
    """
    Yield every joint assignment of `draws` in row-major order, chunk by chunk.

    Parameters:
        draws (Sequence[VarRef]): The draws to enumerate, slowest first.
        cardinalities (Sequence[int]): Number of categories for each draw.
        chunk_size (int): Maximum number of assignments per chunk.

    Yields:
        tuple[dict[VarRef, np.ndarray], int]: Columns of 1-based category values and the chunk length.
    """
    total = 1
    for cardinality in cardinalities:
        total *= cardinality
    if not draws:
        yield {}, 1
        return
    for start in range(0, total, chunk_size):
        stop = min(start + chunk_size, total)
        remaining = np.arange(start, stop, dtype=np.int64)
        columns: dict[VarRef, np.ndarray] = {}
        for ref, cardinality in zip(reversed(draws), reversed(cardinalities), strict=True):
            if cardinality == 1:
                columns[ref] = np.ones(stop - start, dtype=np.int64)
                continue
            remaining, digit = np.divmod(remaining, cardinality)
            columns[ref] = digit + 1
        yield {ref: columns[ref] for ref in draws}, stop - start


def count_satisfying(
    expr: EventExpr, draws: Sequence[VarRef], cardinalities: Sequence[int], chunk_size: int
) -> tuple[int, int]:
    """
    Count the joint assignments of `draws` on which `expr` holds.

    Returns:
        tuple[int, int]: ``(satisfying, total)`` as exact integers.
    """
    satisfying = 0
    total = 0
    for columns, size in iter_assignment_chunks(draws, cardinalities, chunk_size):
        satisfying += int(np.count_nonzero(evaluate_columns(expr, columns, size)))
        total += size
    return satisfying, total


def prob_enumerate(space: SampleSpace, expr: EventExpr, config: ExactConfig | None = None) -> ExactResult:
    """
    Exact probability of `expr` by visiting every outcome of `space` once.

    Parameters:
        space (SampleSpace): The sample space.
        expr (EventExpr): The event.
        config (ExactConfig | None): Enumeration cap and chunking; defaults apply when omitted.

    Returns:
        ExactResult: ``satisfying_count / total_size`` with the count reported.

    Raises:
        ExpressionValidationError: If `expr` does not validate against `space`.
        SpaceTooLargeError: If the space has more outcomes than the cap allows.
    """
    config = config or ExactConfig()
    diagnostics = validate(expr, space)
    if diagnostics:
        raise ExpressionValidationError(diagnostics)
    size = space.total_size
    if size > config.max_enumeration:
        raise SpaceTooLargeError(size, config.max_enumeration)

    draws = space.draws()
    cardinalities = [space.cardinality_of(ref) for ref in draws]
    satisfying, total = count_satisfying(expr, draws, cardinalities, config.chunk_size)
    logger.debug(f"Enumerated {total} outcomes, {satisfying} satisfy the event")
    return ExactResult(
        probability=Fraction(satisfying, total),
        method=ExactMethod.ENUMERATION,
        satisfying_count=satisfying,
        space_size=total,
    )
