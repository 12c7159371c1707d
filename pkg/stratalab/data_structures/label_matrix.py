# This work is licensed under the GNU GPLv3.

"""Experiment outcome data structures."""

from __future__ import annotations
from collections import Counter
from dataclasses import dataclass, field
from typing import Tuple
from experiment.spec import ExperimentSpec, LabelVector, label_space_size

@dataclass(frozen=True)
class LabelMatrix:
    """One outcome: the label vector of every ball, indexed by ball id."""
    spec: ExperimentSpec
    labels: Tuple[LabelVector, ...]

    def __len__(self):
        return len(self.labels)

    def column(self, i: int) -> Tuple[int, ...]:
        """Return the i-th components (0-based) of all balls."""
        return tuple(label[i] for label in self.labels)

    def capacities_hold(self) -> bool:
        """Check that every pot of every round holds exactly N/n_i balls."""
        for i, n in enumerate(self.spec.pot_counts):
            expected = {c: self.spec.capacity(i) for c in range(1, n + 1)}
            if Counter(self.column(i)) != expected:
                return False
        return True

    def pair_quotas_hold(self) -> bool:
        """Check the exact N/(n_(i-1) n_i) quota of every adjacent pair."""
        pots = self.spec.pot_counts
        for i in range(1, len(pots)):
            quota = self.spec.cell_capacity(i)
            pairs = Counter(zip(self.column(i - 1), self.column(i)))
            if (len(pairs) != pots[i - 1]*pots[i]
                    or any(count != quota for count in pairs.values())):
                return False
        return True

@dataclass
class CountHistogram:
    """Number of balls per label; absent labels count 0."""
    spec: ExperimentSpec
    counts: Counter = field(default_factory=Counter)

    def __getitem__(self, label):
        return self.counts.get(tuple(label), 0)

    @property
    def total(self) -> int:
        """Return the number of balls counted."""
        return sum(self.counts.values())

    def is_constant(self, value: int) -> bool:
        """Check that every label of the label space occurs `value` times."""
        if value == 0:
            return not self.counts
        return (len(self.counts) == label_space_size(self.spec)
                and all(count == value for count in self.counts.values()))
