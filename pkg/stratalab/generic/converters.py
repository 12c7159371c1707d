# This work is licensed under the GNU GPLv3.

"""Converters."""

from __future__ import annotations
import logging
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction

logger = logging.getLogger(__name__)

SIGNIFICANT_DIGITS = 15

def fraction_to_decimal(value: Fraction | int,
                        digits: int = SIGNIFICANT_DIGITS) -> str:
    """Render a rational with `digits` significant digits, half-even."""
    value = Fraction(value)
    with localcontext() as context:
        context.prec = digits
        context.rounding = ROUND_HALF_EVEN
        decimal = Decimal(value.numerator)/Decimal(value.denominator)
    return str(decimal)

def fraction_to_dict(value: Fraction | int) -> dict:
    """Convert to {"num", "den", "decimal"} with exact decimal strings."""
    value = Fraction(value)
    return {"num": str(value.numerator),
            "den": str(value.denominator),
            "decimal": fraction_to_decimal(value)}

def dict_to_fraction(mapping: dict) -> Fraction:
    """Inverse of fraction_to_dict (the decimal rendering is ignored)."""
    return Fraction(int(mapping["num"]), int(mapping["den"]))

def parse_int_list(string: str) -> tuple[int, ...]:
    """Convert "2,3,4" to (2, 3, 4); empty fields are a ValueError."""
    fields = string.replace(" ", "").split(",")
    if "" in fields:
        raise ValueError(f"empty field in {string!r}")
    return tuple(int(x) for x in fields)
