"""Test the labelling procedures."""

import math
from collections import Counter
import numpy as np
import pytest
from scipy import stats
from analytics.oracle import enumerate_outcomes
from experiment import CapacityMismatchError, ValidationError
from experiment.engine import (assign, assign_batch, assign_first_way,
                               assign_second_way, encode_labels,
                               label_counts, shuffle_partition)
from experiment.random_source import RandomSource
from experiment.spec import Method, label_space_size, validate_spec

CRITICAL_LEVEL = 0.999

def test_shuffle_partition_edges():
    """One pot, no items, bad capacities."""
    rng = RandomSource(0)
    assert sorted(shuffle_partition([3, 1, 4, 5], [4], rng)[0]) == [1, 3, 4, 5]
    assert shuffle_partition([], [], rng) == []
    groups = shuffle_partition(range(10), [2, 3, 5], rng)
    assert [len(g) for g in groups] == [2, 3, 5]
    assert sorted(sum(groups, [])) == list(range(10))
    for capacities in ([2, 1], [3, 2], [5], [4, 0], [5, -1]):
        with pytest.raises(CapacityMismatchError) as excinfo:
            shuffle_partition(range(4), capacities, rng)
        assert excinfo.value.code == "CAPACITY_MISMATCH"

def test_shuffle_partition_uniformity():
    """Every pot-1 subset of a 2+2 split is equally likely."""
    rng = RandomSource(seed=0)
    draws = 120000
    tally = Counter(frozenset(shuffle_partition(range(4), [2, 2], rng)[0])
                    for _ in range(draws))
    assert len(tally) == math.comb(4, 2)
    statistic = stats.chisquare(list(tally.values())).statistic
    assert statistic < stats.chi2.ppf(CRITICAL_LEVEL, 5)
    assert stats.chi2.ppf(CRITICAL_LEVEL, 5) == pytest.approx(20.52, abs=0.01)
    for count in tally.values():
        assert count/draws == pytest.approx(1/6, abs=4*math.sqrt(5/36/draws))

def test_random_source():
    """Determinism, stream independence and seed range."""
    a = RandomSource(7, 3).permutation(50)
    assert np.array_equal(a, RandomSource(7, 3).permutation(50))
    assert not np.array_equal(a, RandomSource(7, 4).permutation(50))
    assert not np.array_equal(a, RandomSource(8, 3).permutation(50))
    RandomSource(2**64 - 1)
    for seed, stream_id in [(-1, 0), (2**64, 0), (0, -1)]:
        with pytest.raises(ValidationError) as excinfo:
            RandomSource(seed, stream_id)
        assert excinfo.value.code == "BAD_SEED"

def test_first_way_capacities():
    """Every value appears N/n_i times per coordinate."""
    spec = validate_spec(4, [2, 2])
    for seed in range(20):
        matrix = assign_first_way(spec, RandomSource(seed))
        assert len(matrix) == 4
        assert matrix.capacities_hold()
        assert Counter(matrix.column(0)) == {1: 2, 2: 2}

def test_degenerate_coordinates():
    """n_i = 1 gives every ball component 1."""
    spec = validate_spec(6, [1, 1])
    for method in Method:
        matrix = assign(method, spec, RandomSource(5))
        assert set(matrix.labels) == {(1, 1)}
        assert label_counts(matrix).counts == {(1, 1): 6}

def test_second_way_exact():
    """Second Way with r = 2 hits every label exactly N/(n1 n2) times."""
    spec = validate_spec(4, [2, 2])
    for seed in range(20):
        histogram = label_counts(assign_second_way(spec, RandomSource(seed)))
        assert histogram.is_constant(1)
        assert histogram.total == 4
    spec = validate_spec(8, [2, 2, 2])
    for seed in range(20):
        matrix = assign_second_way(spec, RandomSource(seed))
        assert matrix.capacities_hold()
        assert matrix.pair_quotas_hold()
        pairs = Counter(zip(matrix.column(1), matrix.column(2)))
        assert set(pairs.values()) == {2}

def test_hard_capacity_invariants():
    """1000 seeded runs of both engines keep every capacity and quota."""
    spec = validate_spec(60, [3, 4, 5])
    for seed in range(1000):
        first = assign_first_way(spec, RandomSource(seed))
        second = assign_second_way(spec, RandomSource(seed))
        assert first.capacities_hold()
        assert second.capacities_hold()
        assert second.pair_quotas_hold()
    spec = validate_spec(60, [3, 4])
    for seed in range(1000):
        histogram = label_counts(assign_second_way(spec, RandomSource(seed)))
        assert histogram.is_constant(5)

def test_conservation_and_histogram():
    """Histogram values sum to N and absent labels count 0."""
    spec = validate_spec(24, [2, 3, 4])
    histogram = label_counts(assign_first_way(spec, RandomSource(1)))
    assert histogram.total == 24
    assert sum(histogram[v] for v in histogram.counts) == 24
    assert histogram[(9, 9, 9)] == 0

def test_determinism():
    """Same seed and stream, same outcome."""
    spec = validate_spec(60, [3, 4, 5])
    for method in Method:
        assert (assign(method, spec, RandomSource(11, 2))
                == assign(method, spec, RandomSource(11, 2)))
        assert (assign(method, spec, RandomSource(11, 2))
                != assign(method, spec, RandomSource(11, 3)))

@pytest.mark.parametrize("method, ball_count, pot_counts, outcomes", [
    (Method.FIRST_WAY, 4, [2, 2], 36),
    (Method.SECOND_WAY, 4, [2, 2], 24),
    ])
def test_outcomes_equally_likely(method, ball_count, pot_counts, outcomes):
    """Simulated outcomes cover the enumerated set uniformly."""
    spec = validate_spec(ball_count, pot_counts)
    rng = RandomSource(3)
    draws = 1000*outcomes
    tally = Counter(assign(method, spec, rng).labels for _ in range(draws))
    enumerated = {m.labels for m in enumerate_outcomes(method, spec)}
    assert len(enumerated) == outcomes
    assert set(tally) == enumerated
    statistic = stats.chisquare(list(tally.values())).statistic
    assert statistic < stats.chi2.ppf(CRITICAL_LEVEL, outcomes - 1)

@pytest.mark.parametrize("method", list(Method))
def test_batch_invariants(method):
    """Vectorised runs keep capacities and quotas on every row."""
    spec = validate_spec(60, [3, 4, 5])
    labels = assign_batch(method, spec, RandomSource(4), 200)
    assert labels.shape == (200, 60, 3)
    for i, n in enumerate(spec.pot_counts):
        for row in labels[:, :, i]:
            assert np.array_equal(np.bincount(row, minlength=n + 1)[1:],
                                  np.full(n, spec.capacity(i)))
    if method is Method.SECOND_WAY:
        for i in range(1, 3):
            pairs = (labels[:, :, i - 1] - 1)*spec.pot_counts[i] \
                    + labels[:, :, i] - 1
            for row in pairs:
                assert set(np.bincount(row)) == {spec.cell_capacity(i)}
    assert np.array_equal(labels,
                          assign_batch(method, spec, RandomSource(4), 200))

def test_batch_r2_exact():
    """Vectorised Second Way with r = 2 is perfectly equi-distributed."""
    spec = validate_spec(60, [3, 4])
    codes = encode_labels(spec, assign_batch(Method.SECOND_WAY, spec,
                                             RandomSource(9), 500))
    for row in codes:
        assert np.array_equal(np.bincount(row, minlength=12),
                              np.full(12, 5))

@pytest.mark.parametrize("method", list(Method))
def test_marginal_uniformity(method):
    """Ball 0 gets (1, ..., 1) with probability prod(1/n_i)."""
    spec = validate_spec(24, [2, 3, 4])
    runs = 100000
    labels = assign_batch(method, spec, RandomSource(21), runs)
    hits = np.all(labels[:, 0, :] == 1, axis=1).sum()
    p = 1/label_space_size(spec)
    assert abs(hits/runs - p) <= 4*math.sqrt(p*(1 - p)/runs)
