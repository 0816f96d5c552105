"""Exact rational scalars used for every term, ratio, and bound value."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

from ratiolog.shared import errors

BigRat = Fraction
RationalLike = Union[int, str, Fraction]

_RATIONAL_PATTERN = re.compile(r"^\s*(-?[0-9]+)\s*(?:/\s*([0-9]+))?\s*$")


def parse_rational(value: RationalLike) -> Fraction:
    """Read an exact rational from an integer, a Fraction, or a "p" / "p/q" decimal string.

    Args:
        value: Source value. Floats are rejected because they are not exact.

    Returns:
        The value in lowest terms with a positive denominator.

    Raises:
        DocumentValueError if the value is not an exact rational.
    """
    if isinstance(value, bool):
        raise errors.DocumentValueError("invalid-rational", {"value": value})
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        match = _RATIONAL_PATTERN.match(value)
        if match:
            denominator = int(match.group(2)) if match.group(2) else 1
            if denominator:
                return Fraction(int(match.group(1)), denominator)
    raise errors.DocumentValueError("invalid-rational", {"value": str(value)})


def parse_integer(value: int | str) -> int:
    """Read an exact integer from an int or a decimal string."""
    rational = parse_rational(value)
    if rational.denominator != 1:
        raise errors.DocumentValueError("invalid-integer", {"value": str(value)})
    return rational.numerator


def sign(value: int | Fraction) -> int:
    """Sign of an exact number as -1, 0, or 1."""
    return (value > 0) - (value < 0)
