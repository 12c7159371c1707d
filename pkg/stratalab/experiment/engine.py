# This work is licensed under the GNU GPLv3.

"""The two exact-capacity labelling procedures.

First Way: for every coordinate i, all N balls are shuffled into n_i pots of
capacity N/n_i and the pot number becomes a_i; the balls are then dumped back.

Second Way: round 1 is the same, but afterwards the balls stay in their pots.
In round i every previous pot is split on its own, sending exactly
N/(n_(i-1) n_i) balls to each of the n_i new pots.
"""

from __future__ import annotations
import itertools
import logging
import math
from collections import Counter
from collections.abc import Sequence
import numpy as np
from data_structures.label_matrix import CountHistogram, LabelMatrix
from experiment import CapacityMismatchError
from experiment.random_source import RandomSource
from experiment.spec import ExperimentSpec, Method

logger = logging.getLogger(__name__)

def shuffle_partition(item_ids: Sequence, capacities: Sequence[int],
                      rng: RandomSource) -> list[list]:
    """Distribute items uniformly at random into groups of given sizes.

    A full unbiased shuffle is cut into consecutive blocks, which makes every
    ordered set partition with these block sizes equally likely.
    """
    items = list(item_ids)
    if (sum(capacities) != len(items)
            or any(capacity <= 0 for capacity in capacities)):
        raise CapacityMismatchError(
            f"capacities {list(capacities)} do not partition "
            f"{len(items)} items",
            capacities=",".join(map(str, capacities)),
            items=len(items))
    if not items:
        return []
    shuffled = [items[j] for j in rng.permutation(len(items))]
    bounds = [0, *itertools.accumulate(capacities)]
    return [shuffled[a:b] for a, b in zip(bounds, bounds[1:])]

def _assemble(spec: ExperimentSpec, columns: list[list[int]]) -> LabelMatrix:
    return LabelMatrix(spec, tuple(zip(*columns)))

def _drop_into_pots(column: list[int], groups: list[list]):
    for pot, group in enumerate(groups, start=1):
        for ball in group:
            column[ball] = pot

def assign_first_way(spec: ExperimentSpec, rng: RandomSource) -> LabelMatrix:
    """Run the First Way once."""
    balls = range(spec.ball_count)
    columns = []
    for i, n in enumerate(spec.pot_counts):
        column = [0]*spec.ball_count
        _drop_into_pots(column,
                        shuffle_partition(balls, [spec.capacity(i)]*n, rng))
        columns.append(column)
    return _assemble(spec, columns)

def assign_second_way(spec: ExperimentSpec, rng: RandomSource) -> LabelMatrix:
    """Run the Second Way once."""
    balls = range(spec.ball_count)
    pots = spec.pot_counts
    column = [0]*spec.ball_count
    _drop_into_pots(column, shuffle_partition(balls, [spec.capacity(0)]*pots[0],
                                              rng))
    columns = [column]
    for i in range(1, len(pots)):
        previous = columns[-1]
        column = [0]*spec.ball_count
        # previous pots in increasing order, members in increasing ball id
        for pot in range(1, pots[i - 1] + 1):
            members = [ball for ball in balls if previous[ball] == pot]
            _drop_into_pots(column,
                            shuffle_partition(members,
                                              [spec.cell_capacity(i)]*pots[i],
                                              rng))
        columns.append(column)
    return _assemble(spec, columns)

def assign(method: Method, spec: ExperimentSpec,
           rng: RandomSource) -> LabelMatrix:
    """Run either procedure once."""
    if method is Method.FIRST_WAY:
        return assign_first_way(spec, rng)
    return assign_second_way(spec, rng)

def label_counts(matrix: LabelMatrix) -> CountHistogram:
    """Count the balls per label."""
    return CountHistogram(matrix.spec, Counter(matrix.labels))

def _split_groups(groups: np.ndarray, group_size: int, cell: int,
                  rng: RandomSource) -> np.ndarray:
    """Split every group of every row uniformly into consecutive cells."""
    trials, balls = groups.shape
    order = np.lexsort((rng.priorities(trials, balls), groups), axis=-1)
    pot_of_position = np.arange(balls) % group_size//cell + 1
    pots = np.empty_like(groups)
    np.put_along_axis(pots, order,
                      np.broadcast_to(pot_of_position, groups.shape), axis=1)
    return pots

def assign_batch(method: Method, spec: ExperimentSpec, rng: RandomSource,
                 trials: int) -> np.ndarray:
    """Run `trials` independent experiments at once.

    Returns an integer array of shape (trials, N, r) holding 1-based labels.
    """
    shape = (trials, spec.ball_count)
    labels = np.empty(shape + (spec.coordinate_count,), dtype=np.int64)
    for i in range(spec.coordinate_count):
        if method is Method.FIRST_WAY or i == 0:
            groups = np.zeros(shape, dtype=np.int64)
            group_size, cell = spec.ball_count, spec.capacity(i)
        else:
            groups = labels[:, :, i - 1]
            group_size, cell = spec.capacity(i - 1), spec.cell_capacity(i)
        labels[:, :, i] = _split_groups(groups, group_size, cell, rng)
    return labels

def encode_labels(spec: ExperimentSpec, labels: np.ndarray) -> np.ndarray:
    """Map label vectors in the last axis to their mixed-radix indices."""
    pots = spec.pot_counts
    strides = np.array([math.prod(pots[i + 1:]) for i in range(len(pots))],
                       dtype=np.int64)
    return ((labels - 1)*strides).sum(axis=-1)
