# This work is licensed under the GNU GPLv3.

"""Brute-force enumeration of all outcomes of tiny experiments.

Nothing here uses the closed forms except to refuse instances whose outcome
count exceeds the budget.
"""

from __future__ import annotations
import itertools
import logging
from collections import Counter
from collections.abc import Iterator, Sequence
from fractions import Fraction
from analytics.exact import expected_count, outcome_count, variance_exact
from data_structures.label_matrix import LabelMatrix
from data_structures.reports import AlphaPmf, EnumerationReport
from experiment import BudgetExceededError
from experiment.spec import (ExperimentSpec, LabelVector, Method, all_ones,
                             validate_label)
from generic.system import Timer

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**7

def ordered_partitions(items: Sequence[int],
                       size: int, parts: int) -> Iterator[tuple[tuple, ...]]:
    """Yield every split of items into `parts` ordered groups of `size`.

    Groups are chosen by lexicographic combination generation.
    """
    if parts == 0:
        yield ()
        return
    for group in itertools.combinations(items, size):
        chosen = set(group)
        rest = [item for item in items if item not in chosen]
        for tail in ordered_partitions(rest, size, parts - 1):
            yield (group,) + tail

def _pot_columns(items: Sequence[int], size: int,
                 parts: int) -> Iterator[dict]:
    """Like ordered_partitions, as {ball: pot} mappings."""
    for groups in ordered_partitions(items, size, parts):
        yield {ball: pot for pot, group in enumerate(groups, start=1)
               for ball in group}

def _first_way_columns(spec: ExperimentSpec) -> Iterator[tuple]:
    balls = list(range(spec.ball_count))
    rounds = []
    for i, n in enumerate(spec.pot_counts):
        rounds.append([tuple(column[ball] for ball in balls)
                       for column in _pot_columns(balls, spec.capacity(i), n)])
    return itertools.product(*rounds)

def _second_way_columns(spec: ExperimentSpec, columns: tuple = ()
                        ) -> Iterator[tuple]:
    balls = list(range(spec.ball_count))
    i = len(columns)
    if i == spec.coordinate_count:
        yield columns
        return
    n = spec.pot_counts[i]
    if i == 0:
        for column in _pot_columns(balls, spec.capacity(0), n):
            yield from _second_way_columns(
                spec, (tuple(column[ball] for ball in balls),))
        return
    previous = columns[-1]
    splits = [list(_pot_columns([b for b in balls if previous[b] == pot],
                                spec.cell_capacity(i), n))
              for pot in range(1, spec.pot_counts[i - 1] + 1)]
    for combination in itertools.product(*splits):
        merged = {}
        for part in combination:
            merged.update(part)
        yield from _second_way_columns(
            spec, columns + (tuple(merged[ball] for ball in balls),))

def enumerate_outcomes(method: Method, spec: ExperimentSpec,
                       budget: int = DEFAULT_BUDGET) -> Iterator[LabelMatrix]:
    """Stream every outcome exactly once.

    Raises BudgetExceededError before yielding anything when |S| > budget.
    """
    total = outcome_count(method, spec)
    if total > budget:
        raise BudgetExceededError(
            f"{total} outcomes exceed the enumeration budget {budget}",
            outcome_count=total,
            budget=budget)
    return _stream(method, spec)

def _stream(method: Method, spec: ExperimentSpec) -> Iterator[LabelMatrix]:
    if method is Method.FIRST_WAY:
        rounds = _first_way_columns(spec)
    else:
        rounds = _second_way_columns(spec)
    for columns in rounds:
        yield LabelMatrix(spec, tuple(zip(*columns)))

def alpha_distribution(method: Method, spec: ExperimentSpec,
                       target: LabelVector | None = None,
                       budget: int = DEFAULT_BUDGET) -> AlphaPmf:
    """Exact distribution of the number of balls labelled `target`."""
    target = validate_label(spec, target or all_ones(spec))
    tally: Counter = Counter()
    with Timer(logger.debug, f"Enumerated {method.name} in {{time:.2f}} s"):
        for outcome in enumerate_outcomes(method, spec, budget):
            tally[outcome.labels.count(target)] += 1
    total = sum(tally.values())
    return AlphaPmf(spec, method, target,
                    {k: Fraction(tally[k], total) for k in sorted(tally)},
                    total)

def moments_from_pmf(pmf: AlphaPmf) -> tuple[Fraction, Fraction]:
    """Return the exact mean and variance of a distribution."""
    mean = sum((k*p for k, p in pmf.support.items()), Fraction(0))
    square = sum((k*k*p for k, p in pmf.support.items()), Fraction(0))
    return mean, square - mean**2

def committed_count_by_enumeration(method: Method, spec: ExperimentSpec,
                                   balls: Sequence[int],
                                   target: LabelVector | None = None,
                                   budget: int = DEFAULT_BUDGET) -> int:
    """Count outcomes in which every ball in `balls` is labelled `target`."""
    target = validate_label(spec, target or all_ones(spec))
    return sum(all(outcome.labels[ball] == target for ball in balls)
               for outcome in enumerate_outcomes(method, spec, budget))

def oracle_diff(pmf: AlphaPmf) -> EnumerationReport:
    """Compare enumerated moments and outcome count with the closed forms."""
    mean, variance = moments_from_pmf(pmf)
    closed = {"outcome_count": (pmf.outcomes,
                                outcome_count(pmf.method, pmf.spec)),
              "average": (mean, expected_count(pmf.spec)),
              "variance_exact": (variance,
                                 variance_exact(pmf.method, pmf.spec))}
    diff = {name: pair for name, pair in closed.items() if pair[0] != pair[1]}
    if diff:
        logger.warning(f"Oracle disagrees with analytics: {sorted(diff)}")
    return EnumerationReport(pmf, mean, variance, diff)
