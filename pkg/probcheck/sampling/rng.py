"""
Seeded random streams for sampling.

Every batch gets its own Philox (counter-based) generator keyed by
``SeedSequence(seed, spawn_key=(batch_index,))``. A batch's draws therefore
depend only on the root seed and the batch index, never on which worker runs
it or in what order. Category values come from `Generator.integers`, which
rejects the partial top interval, so every category is exactly equally likely.
"""

from collections.abc import Collection

import numpy as np

from ..core.models import Outcome, SampleSpace, VarRef


def batch_generator(seed: int, batch_index: int) -> np.random.Generator:
    """
    Generator for one batch of a run.

    Parameters:
        seed (int): Root seed of the run.
        batch_index (int): Position of the batch in the run.

    Returns:
        numpy.random.Generator: A Philox-backed generator independent of every other batch's.
    """
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(batch_index,))))


def draw_columns(
    space: SampleSpace, rng: np.random.Generator, size: int, draws: Collection[VarRef] | None = None
) -> dict[VarRef, np.ndarray]:
    """
    Sample `size` outcomes of `space`, returned column-wise.

    Families are drawn in declaration order, each as a ``(size, k)`` block over
    its requested draws in index order. Families with no requested draw consume
    nothing from `rng`.

    Parameters:
        space (SampleSpace): The sample space.
        rng (numpy.random.Generator): Stream to draw from.
        size (int): Number of outcomes.
        draws (Collection[VarRef] | None): Draws to sample; every draw of `space` when omitted.

    Returns:
        dict[VarRef, np.ndarray]: One int64 array of length `size` per sampled draw, values in 1..cardinality.
    """
    columns: dict[VarRef, np.ndarray] = {}
    for family in space.families:
        if draws is None:
            indices = list(range(family.count))
        else:
            indices = sorted(ref.index for ref in draws if ref.family == family.name)
        if not indices:
            continue
        block = rng.integers(1, family.cardinality, size=(size, len(indices)), endpoint=True, dtype=np.int64)
        for position, index in enumerate(indices):
            columns[VarRef(family=family.name, index=index)] = block[:, position]
    return columns


def sample_outcome(space: SampleSpace, rng: np.random.Generator) -> Outcome:
    """
    Draw one outcome: every draw independently uniform over its categories.

    Advances `rng`; the same generator state always yields the same outcome.
    """
    columns = draw_columns(space, rng, 1)
    return Outcome(values={(ref.family, ref.index): int(column[0]) for ref, column in columns.items()})
