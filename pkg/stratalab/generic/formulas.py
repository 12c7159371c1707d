# This work is licensed under the GNU GPLv3.

"""Calculations based on mathematical formulae or alike."""

from __future__ import annotations
import functools
import logging
import math
from collections.abc import Iterable
from fractions import Fraction

logger = logging.getLogger(__name__)

@functools.lru_cache(maxsize=4096)
def factorial(n: int) -> int:
    """Return n! (memoized)."""
    return math.factorial(n)

def multinomial(total: int, part: int, parts: int) -> int:
    """Number of ordered splits of `total` items into `parts` pots of `part`.

    Equals total!/(part!)^parts.
    """
    return factorial(total)//factorial(part)**parts

def committed_multinomial(total: int, part: int, parts: int, k: int) -> int:
    """Ordered splits in which k designated items all land in one given pot.

    Equals (total - k)!/((part - k)! (part!)^(parts - 1)), and 0 when the pot
    cannot hold k items.
    """
    if part < k or total < k:
        return 0
    return (factorial(total - k)
            //(factorial(part - k)*factorial(part)**(parts - 1)))

def lcm_of_adjacent_products(values: Iterable[int]) -> int:
    """Return lcm(v1*v2, v2*v3, ...)."""
    values = list(values)
    return math.lcm(*(a*b for a, b in zip(values, values[1:])))

def pair_count(n: int) -> int:
    """Return n choose 2."""
    return math.comb(n, 2)

def fraction_product(factors: Iterable[Fraction]) -> Fraction:
    """Multiply fractions in order, stopping at the first zero factor."""
    result = Fraction(1)
    for factor in factors:
        if not factor:
            return Fraction(0)
        result *= factor
    return result

def sqrt_fraction(x: Fraction) -> float:
    """Return the square root of a nonnegative fraction as a float."""
    return math.sqrt(float(x))
