# This work is licensed under the GNU GPLv3.

"""Report data structures."""

from __future__ import annotations
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple
from experiment.spec import ExperimentSpec, LabelVector, Method
from generic.converters import fraction_to_decimal
from generic.formulas import sqrt_fraction

RATIONAL_FIELDS = ("average", "w_statistic", "variance_exact",
                   "variance_asymptotic")

@dataclass(frozen=True)
class AnalyticsReport:
    """Exact label-count statistics of one method."""
    method: Method
    spec: ExperimentSpec
    outcome_count: int
    average: Fraction
    w_statistic: Fraction
    variance_exact: Fraction
    variance_asymptotic: Fraction
    pots_needed: int

    @property
    def remainder(self) -> Fraction:
        """The O(1) gap between exact and asymptotic variance."""
        return self.variance_exact - self.variance_asymptotic

    @property
    def standard_deviation(self) -> float:
        """Square root of the exact variance."""
        return sqrt_fraction(self.variance_exact)

    @property
    def renderings(self) -> Dict[str, str]:
        """15-significant-digit decimal strings of the rational fields."""
        return {name: fraction_to_decimal(getattr(self, name))
                for name in RATIONAL_FIELDS}

@dataclass(frozen=True)
class ComparisonReport:
    """Both methods side by side."""
    spec: ExperimentSpec
    first: AnalyticsReport
    second: AnalyticsReport

    @property
    def delta_exact(self) -> Fraction:
        """V_first - V_second, exact."""
        return self.first.variance_exact - self.second.variance_exact

    @property
    def delta_asymptotic(self) -> Fraction:
        """Difference of the asymptotic variances."""
        return self.first.variance_asymptotic - self.second.variance_asymptotic

@dataclass(frozen=True)
class AlphaPmf:
    """Exact distribution of the number of balls given the target label."""
    spec: ExperimentSpec
    method: Method
    target_label: LabelVector
    support: Dict[int, Fraction]
    outcomes: int

    def __post_init__(self):
        if sum(self.support.values()) != 1:
            raise ValueError("probabilities do not sum to 1")
        bound = self.spec.count_bound(self.method)
        if any(not 0 <= k <= bound for k in self.support):
            raise ValueError(f"support {sorted(self.support)} leaves "
                             f"[0, {bound}]")

@dataclass(frozen=True)
class SimulationReport:
    """Empirical label-count statistics over repeated seeded runs."""
    method: Method
    spec: ExperimentSpec
    trials: int
    seed: int
    target_label: LabelVector
    empirical_mean: float
    empirical_variance: Optional[float]
    min_count: int
    max_count: int
    chi_square_statistic: float
    stderr_of_variance: Optional[float]

@dataclass(frozen=True)
class MethodCheck:
    """A simulation set against the exact analytics of the same method."""
    simulation: SimulationReport
    analytics: AnalyticsReport
    passed: bool

@dataclass(frozen=True)
class PairedReport:
    """Both methods simulated on independent streams, with verdicts."""
    spec: ExperimentSpec
    checks: Tuple[MethodCheck, ...] = field(default=())

    @property
    def first_variance_exceeds_second(self) -> bool:
        """Ordering of the empirical variances."""
        first, second = (check.simulation.empirical_variance or 0.0
                         for check in self.checks)
        return first > second

@dataclass(frozen=True)
class EnumerationReport:
    """Oracle distribution, its moments, and disagreements with analytics."""
    pmf: AlphaPmf
    mean: Fraction
    variance: Fraction
    diff: Dict[str, Tuple[Fraction, Fraction]] = field(default_factory=dict)
