# This work is licensed under the GNU GPLv3.

"""Experiment parameters and scheme-independent quantities."""

from __future__ import annotations
import itertools
import logging
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from enum import Enum
from typing import Tuple
from experiment import ValidationError
from generic.formulas import lcm_of_adjacent_products

logger = logging.getLogger(__name__)

LabelVector = Tuple[int, ...]

_GATE = object()

class Method(Enum):
    """Labelling procedure."""
    FIRST_WAY = "first"
    SECOND_WAY = "second"

    @property
    def ordinal(self) -> int:
        """Return 0 for the First Way and 1 for the Second Way."""
        return list(Method).index(self)

    @classmethod
    def parse(cls, text: str) -> Method:
        """Accept "first", "FIRST_WAY", "second", ... ."""
        text = text.strip()
        for method in cls:
            if text.lower() in (method.value, method.name.lower()):
                return method
        raise ValueError(f"unknown method {text!r}")

@dataclass(frozen=True)
class ExperimentSpec:
    """Validated ball count N and pot counts n_1..n_r.

    Only validate_spec() constructs instances, so every ExperimentSpec in
    hand satisfies the divisibility assumption.
    """
    ball_count: int
    pot_counts: Tuple[int, ...]
    _gate: object = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self._gate is not _GATE:
            raise TypeError("ExperimentSpec is constructed by validate_spec()")

    @property
    def coordinate_count(self) -> int:
        """Return r."""
        return len(self.pot_counts)

    def capacity(self, i: int) -> int:
        """Capacity N/n_i of each pot in round i (0-based)."""
        return self.ball_count//self.pot_counts[i]

    def cell_capacity(self, i: int) -> int:
        """Balls one previous pot sends to each new pot in a Second Way round.

        N/(n_(i-1) n_i) for i >= 1, and N/n_1 for the first round.
        """
        if i == 0:
            return self.capacity(0)
        return self.ball_count//(self.pot_counts[i - 1]*self.pot_counts[i])

    def count_bound(self, method: Method) -> int:
        """Most balls one label can receive: the smallest pot on its path."""
        if method is Method.FIRST_WAY:
            return min(map(self.capacity, range(self.coordinate_count)))
        return min(map(self.cell_capacity, range(self.coordinate_count)))

def divisibility_modulus(pot_counts: Sequence[int]) -> int:
    """Return lcm(n1 n2, ..., n(r-1) nr), or n1 when r = 1."""
    if not pot_counts:
        raise ValidationError("at least one pot count is required",
                              code="EMPTY_POT_LIST")
    if len(pot_counts) == 1:
        return pot_counts[0]
    return lcm_of_adjacent_products(pot_counts)

def validate_spec(ball_count: int, pot_counts: Sequence[int]) -> ExperimentSpec:
    """Return an ExperimentSpec or raise ValidationError."""
    pot_counts = tuple(pot_counts)
    if not pot_counts:
        raise ValidationError("at least one pot count is required",
                              code="EMPTY_POT_LIST")
    if ball_count <= 0 or any(n <= 0 for n in pot_counts):
        raise ValidationError(
            "ball count and pot counts must be positive",
            code="NON_POSITIVE",
            ball_count=ball_count,
            pot_counts=",".join(map(str, pot_counts)))
    modulus = divisibility_modulus(pot_counts)
    if ball_count % modulus:
        raise ValidationError(
            f"ball count {ball_count} is not divisible by {modulus}",
            code="INDIVISIBLE",
            ball_count=ball_count,
            modulus=modulus)
    return ExperimentSpec(ball_count, pot_counts, _GATE)

def label_space_size(spec: ExperimentSpec) -> int:
    """Return the number of possible labels, the product of the n_i."""
    return math.prod(spec.pot_counts)

def required_pots(method: Method, pot_counts: Sequence[int]) -> int:
    """Pots needed to run a procedure, assuming pots are reused."""
    if not pot_counts:
        raise ValidationError("at least one pot count is required",
                              code="EMPTY_POT_LIST")
    if method is Method.FIRST_WAY:
        return 1 + max(pot_counts)
    return max([1 + pot_counts[0]]
               + [a + b for a, b in zip(pot_counts, pot_counts[1:])])

def validate_label(spec: ExperimentSpec,
                   components: Sequence[int]) -> LabelVector:
    """Return components as a LabelVector of spec or raise ValidationError."""
    label = tuple(components)
    if (len(label) != spec.coordinate_count
            or any(not 1 <= a <= n for a, n in zip(label, spec.pot_counts))):
        raise ValidationError(
            f"label {label} does not fit pot counts {spec.pot_counts}",
            code="BAD_LABEL",
            label=",".join(map(str, label)))
    return label

def all_ones(spec: ExperimentSpec) -> LabelVector:
    """Return the label (1, ..., 1)."""
    return (1,)*spec.coordinate_count

def iter_labels(spec: ExperimentSpec) -> Iterator[LabelVector]:
    """Iterate over all labels in increasing index order."""
    return itertools.product(*(range(1, n + 1) for n in spec.pot_counts))

def label_index(spec: ExperimentSpec, label: Sequence[int]) -> int:
    """Mixed-radix index of a label; the first coordinate is most significant."""
    index = 0
    for a, n in zip(label, spec.pot_counts):
        index = index*n + (a - 1)
    return index
