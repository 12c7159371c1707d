# This work is licensed under the GNU GPLv3.

"""Seeded repeated simulation with empirical moments.

Trials run in fixed-size chunks. Chunk c of the method with ordinal m draws
from stream 2c + m of the seed, so the result only depends on
(spec, method, trials, seed) and the two methods never share a stream.
Chunks are merged through sufficient statistics.
"""

from __future__ import annotations
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional
import numpy as np
from scipy import stats
from analytics.exact import analyze
from data_structures.reports import (MethodCheck, PairedReport,
                                     SimulationReport)
from experiment import ValidationError
from experiment.engine import assign_batch, encode_labels
from experiment.random_source import RandomSource
from experiment.spec import (ExperimentSpec, LabelVector, Method, all_ones,
                             label_index, label_space_size, validate_label)
from generic.system import Timer

logger = logging.getLogger(__name__)

CHUNK_TRIALS = 8192
MAX_CHUNK_ENTRIES = 2**22
PASS_BAND = 3

@dataclass
class TrialStatistics:
    """Mergeable sufficient statistics of the target-label count."""
    trials: int = 0
    total: int = 0
    total_squares: int = 0
    minimum: Optional[int] = None
    maximum: Optional[int] = None
    tallies: Optional[np.ndarray] = None

    def merge(self, other: TrialStatistics) -> TrialStatistics:
        """Combine two disjoint sets of trials; order does not matter."""
        if not self.trials:
            return other
        if not other.trials:
            return self
        return TrialStatistics(
            self.trials + other.trials,
            self.total + other.total,
            self.total_squares + other.total_squares,
            min(self.minimum, other.minimum),
            max(self.maximum, other.maximum),
            self.tallies + other.tallies)

    @property
    def variance(self) -> Optional[Fraction]:
        """Unbiased sample variance, exact."""
        if self.trials < 2:
            return None
        return (Fraction(self.total_squares)
                - Fraction(self.total**2, self.trials))/(self.trials - 1)

def chunk_size(spec: ExperimentSpec) -> int:
    """Trials per chunk, bounded so a chunk's label array stays small."""
    entries = spec.ball_count*spec.coordinate_count
    return max(1, min(CHUNK_TRIALS, MAX_CHUNK_ENTRIES//entries))

def run_chunk(method: Method, spec: ExperimentSpec, target: LabelVector,
              trials: int, rng: RandomSource) -> TrialStatistics:
    """Simulate one chunk of trials."""
    codes = encode_labels(spec, assign_batch(method, spec, rng, trials))
    counts = (codes == label_index(spec, target)).sum(axis=1)
    return TrialStatistics(
        trials,
        int(counts.sum()),
        int((counts**2).sum()),
        int(counts.min()),
        int(counts.max()),
        np.bincount(codes.ravel(), minlength=label_space_size(spec)))

def chi_square(spec: ExperimentSpec, statistics: TrialStatistics) -> float:
    """Pooled goodness-of-fit statistic of all labels against uniformity."""
    size = label_space_size(spec)
    if size == 1:
        return 0.0
    expected = statistics.trials*spec.ball_count/size
    return float(stats.chisquare(statistics.tallies,
                                 np.full(size, expected)).statistic)

def simulate(method: Method, spec: ExperimentSpec, trials: int,
             seed: int = 0, target: LabelVector | None = None
             ) -> SimulationReport:
    """Run `trials` independent experiments and summarize one label count."""
    if trials < 1:
        raise ValidationError(f"trials must be positive, not {trials}",
                              code="BAD_TRIALS", trials=trials)
    target = validate_label(spec, target or all_ones(spec))
    size = chunk_size(spec)
    statistics = TrialStatistics()
    with Timer(logger.debug,
               f"Simulated {trials} {method.name} trials in {{time:.2f}} s"):
        for chunk, start in enumerate(range(0, trials, size)):
            rng = RandomSource(seed, stream_id=2*chunk + method.ordinal)
            statistics = statistics.merge(
                run_chunk(method, spec, target, min(size, trials - start),
                          rng))
    return summarize(method, spec, seed, target, statistics)

def summarize(method: Method, spec: ExperimentSpec, seed: int,
              target: LabelVector,
              statistics: TrialStatistics) -> SimulationReport:
    """Turn merged statistics into a report."""
    variance = statistics.variance
    stderr = None
    if variance is not None:
        stderr = math.sqrt(2/(statistics.trials - 1))*float(variance)
    return SimulationReport(
        method=method,
        spec=spec,
        trials=statistics.trials,
        seed=seed,
        target_label=target,
        empirical_mean=float(Fraction(statistics.total, statistics.trials)),
        empirical_variance=None if variance is None else float(variance),
        min_count=statistics.minimum,
        max_count=statistics.maximum,
        chi_square_statistic=chi_square(spec, statistics),
        stderr_of_variance=stderr)

def empirical_vs_exact(spec: ExperimentSpec, trials: int, seed: int = 0,
                       target: LabelVector | None = None) -> PairedReport:
    """Simulate both methods and check them against the exact variance."""
    if trials < 2:
        raise ValidationError(f"at least 2 trials are needed, not {trials}",
                              code="BAD_TRIALS", trials=trials)
    checks = []
    for method in Method:
        simulation = simulate(method, spec, trials, seed, target)
        analytics = analyze(method, spec)
        band = PASS_BAND*simulation.stderr_of_variance
        passed = (abs(simulation.empirical_variance
                      - float(analytics.variance_exact)) <= band)
        logger.info(f"{method.name}: empirical variance "
                    f"{simulation.empirical_variance:.6g}, exact "
                    f"{analytics.renderings['variance_exact']} -> "
                    f"{'PASS' if passed else 'FAIL'}")
        checks.append(MethodCheck(simulation, analytics, passed))
    return PairedReport(spec, tuple(checks))
