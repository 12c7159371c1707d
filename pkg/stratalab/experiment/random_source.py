# This work is licensed under the GNU GPLv3.

"""Seeded random streams.

Every stream is a numpy PCG64 generator seeded by
SeedSequence(seed, spawn_key=(stream_id,)). The generator family is part of
the reproducibility contract: the same (seed, stream_id) pair gives the same
draws, and distinct stream ids give independent streams.
"""

from __future__ import annotations
import logging
from dataclasses import dataclass, field
import numpy as np
from experiment import ValidationError

logger = logging.getLogger(__name__)

MAX_SEED = 2**64 - 1

@dataclass
class RandomSource:
    """Deterministic random stream."""
    seed: int = 0
    stream_id: int = 0
    generator: np.random.Generator = field(init=False, repr=False,
                                           compare=False)

    def __post_init__(self):
        if not 0 <= self.seed <= MAX_SEED:
            raise ValidationError(f"seed {self.seed} is not a 64-bit "
                                  "unsigned integer",
                                  code="BAD_SEED", seed=self.seed)
        if self.stream_id < 0:
            raise ValidationError(f"stream id {self.stream_id} is negative",
                                  code="BAD_SEED", stream_id=self.stream_id)
        sequence = np.random.SeedSequence(self.seed,
                                          spawn_key=(self.stream_id,))
        self.generator = np.random.Generator(np.random.PCG64(sequence))

    def permutation(self, n: int) -> np.ndarray:
        """Return a uniformly random permutation of range(n)."""
        return self.generator.permutation(n)

    def priorities(self, rows: int, n: int) -> np.ndarray:
        """Return `rows` independent uniformly random permutations of range(n).

        Used as tie-free random sort keys.
        """
        return self.generator.permuted(np.tile(np.arange(n), (rows, 1)),
                                       axis=1)
