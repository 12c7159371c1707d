# This work is licensed under the GNU GPLv3.

"""Closed-form label-count statistics in exact rational arithmetic.

alpha is the number of balls that receive a fixed label v. Over the set S of
equally likely outcomes:

    av   = N/prod(n_i)
    W    = sum over S of C(alpha, 2) / |S|
    V    = 2 W + av - av^2

W is found by counting the outcomes in which two designated balls are both
labelled v ("committed" outcomes) and multiplying by the C(N, 2) ball pairs.
"""

from __future__ import annotations
import logging
from collections.abc import Iterable, Sequence
from fractions import Fraction
from data_structures.reports import AnalyticsReport, ComparisonReport
from experiment import BadCommitCountError
from experiment.spec import (ExperimentSpec, Method, divisibility_modulus,
                             label_space_size, required_pots, validate_spec)
from generic.formulas import (committed_multinomial, fraction_product,
                              multinomial, pair_count)

logger = logging.getLogger(__name__)

def outcome_count(method: Method, spec: ExperimentSpec) -> int:
    """Return |S|, the number of equally likely outcomes."""
    N, pots = spec.ball_count, spec.pot_counts
    if method is Method.FIRST_WAY:
        result = 1
        for i, n in enumerate(pots):
            result *= multinomial(N, spec.capacity(i), n)
        return result
    result = multinomial(N, spec.capacity(0), pots[0])
    for i in range(1, len(pots)):
        result *= multinomial(spec.capacity(i - 1), spec.cell_capacity(i),
                              pots[i])**pots[i - 1]
    return result

def committed_outcome_count(method: Method, spec: ExperimentSpec,
                            committed: int) -> int:
    """Outcomes in which `committed` designated balls all get the label v.

    Zero when some pot on the path of v cannot hold that many balls.
    """
    if committed not in (1, 2):
        raise BadCommitCountError(f"committed must be 1 or 2, "
                                  f"not {committed}",
                                  committed=committed)
    N, pots, k = spec.ball_count, spec.pot_counts, committed
    if method is Method.FIRST_WAY:
        result = 1
        for i, n in enumerate(pots):
            result *= committed_multinomial(N, spec.capacity(i), n, k)
        return result
    result = committed_multinomial(N, spec.capacity(0), pots[0], k)
    for i in range(1, len(pots)):
        source, cell = spec.capacity(i - 1), spec.cell_capacity(i)
        # the pot holding the committed balls, then the other previous pots
        result *= (committed_multinomial(source, cell, pots[i], k)
                   *multinomial(source, cell, pots[i])**(pots[i - 1] - 1))
    return result

def expected_count(spec: ExperimentSpec) -> Fraction:
    """Return av = N/prod(n_i)."""
    return Fraction(spec.ball_count, label_space_size(spec))

def _w_factors(method: Method, spec: ExperimentSpec) -> Iterable[Fraction]:
    """Per-round factors of W/C(N, 2), lazily, in round order."""
    N, pots = spec.ball_count, spec.pot_counts
    # (1 - n/N)/(1 - 1/N) n^-2 written as (N - n)/((N - 1) n^2)
    if N == pots[0]:
        yield Fraction(0)
        return
    yield Fraction(N - pots[0], (N - 1)*pots[0]**2)
    for i in range(1, len(pots)):
        if method is Method.FIRST_WAY:
            numerator, denominator = N - pots[i], N - 1
        else:
            numerator, denominator = N - pots[i - 1]*pots[i], N - pots[i - 1]
        if numerator == 0:
            yield Fraction(0)
            return
        yield Fraction(numerator, denominator*pots[i]**2)

def w_statistic(method: Method, spec: ExperimentSpec) -> Fraction:
    """Return W(alpha) from the closed form."""
    return pair_count(spec.ball_count)*fraction_product(_w_factors(method,
                                                                   spec))

def w_statistic_from_counts(method: Method, spec: ExperimentSpec) -> Fraction:
    """Return W(alpha) as C(N, 2) times the two-ball committed fraction."""
    return Fraction(pair_count(spec.ball_count)
                    *committed_outcome_count(method, spec, 2),
                    outcome_count(method, spec))

def variance_exact(method: Method, spec: ExperimentSpec) -> Fraction:
    """Return V(alpha) = 2 W + av - av^2."""
    av = expected_count(spec)
    return 2*w_statistic(method, spec) + av - av**2

def variance_asymptotic(method: Method, spec: ExperimentSpec) -> Fraction:
    """Return the large-N variance with the O(1) term dropped."""
    N, pots = spec.ball_count, spec.pot_counts
    size = label_space_size(spec)
    if method is Method.FIRST_WAY:
        spread = 1 + sum(n - 1 for n in pots)
    else:
        spread = pots[0] + sum((b - 1)*a for a, b in zip(pots, pots[1:]))
    return Fraction(N, size) - Fraction(N*spread, size**2)

def analyze(method: Method, spec: ExperimentSpec) -> AnalyticsReport:
    """Collect every exact statistic of one method."""
    av = expected_count(spec)
    w = w_statistic(method, spec)
    report = AnalyticsReport(
        method=method,
        spec=spec,
        outcome_count=outcome_count(method, spec),
        average=av,
        w_statistic=w,
        variance_exact=2*w + av - av**2,
        variance_asymptotic=variance_asymptotic(method, spec),
        pots_needed=required_pots(method, spec.pot_counts))
    logger.debug(f"{method.name}: V = {report.variance_exact} "
                 f"({report.renderings['variance_exact']})")
    return report

def compare_methods(spec: ExperimentSpec) -> ComparisonReport:
    """Analyze both methods."""
    return ComparisonReport(spec,
                            analyze(Method.FIRST_WAY, spec),
                            analyze(Method.SECOND_WAY, spec))

def remainder_series(method: Method, pot_counts: Sequence[int],
                     exponents: Iterable[int]) -> list[tuple[int, Fraction]]:
    """Exact minus asymptotic variance along N = modulus*2^k."""
    modulus = divisibility_modulus(pot_counts)
    series = []
    for k in exponents:
        spec = validate_spec(modulus*2**k, pot_counts)
        series.append((spec.ball_count,
                       variance_exact(method, spec)
                       - variance_asymptotic(method, spec)))
    return series
