"""Rational functions of the index variable n, kept in canonical reduced form."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any
from typing import Union

from ratiolog.common.polynomials import IntPoly
from ratiolog.common.polynomials import format_poly
from ratiolog.common.rationals import parse_rational
from ratiolog.shared import errors

RatOperand = Union["RatFunc", IntPoly, int, Fraction]


@dataclass(frozen=True)
class RatFunc:
    """Quotient num/den of integer polynomials.

    Canonical form: gcd(num, den) = 1 in Z[n], no integer content shared by num and den, den has a positive
    leading coefficient, and zero is 0/1. Structural equality is therefore equality of functions.
    """

    num: IntPoly
    den: IntPoly = IntPoly((1,))

    def __post_init__(self) -> None:
        """Reduce to canonical form."""
        num, den = self.num, self.den
        if den.is_zero:
            raise ZeroDivisionError("Rational function with a zero denominator")
        if num.is_zero:
            object.__setattr__(self, "den", IntPoly((1,)))
            return
        common = num.gcd(den)
        if common.degree > 0:
            num = num.exact_quotient(common)
            den = den.exact_quotient(common)
        content = math.gcd(num.content, den.content)
        if content > 1:
            num = IntPoly(tuple(value // content for value in num.coefficients))
            den = IntPoly(tuple(value // content for value in den.coefficients))
        if den.leading < 0:
            num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def constant(cls, value: int | Fraction) -> RatFunc:
        """Constant rational function."""
        value = Fraction(value)
        return cls(IntPoly.constant(value.numerator), IntPoly.constant(value.denominator))

    @classmethod
    def variable(cls) -> RatFunc:
        """The function n."""
        return cls(IntPoly.variable())

    @classmethod
    def from_polys(cls, num: list[int] | tuple[int, ...], den: list[int] | tuple[int, ...] = (1,)) -> RatFunc:
        """Build from ascending integer coefficient lists."""
        return cls(IntPoly(tuple(num)), IntPoly(tuple(den)))

    @classmethod
    def from_json(cls, data: Any) -> RatFunc:
        """Read {"num": [...], "den": [...]} with decimal string coefficients, or a bare constant.

        Raises:
            DocumentValueError if the document is not a valid rational function.
        """
        if isinstance(data, (int, str)) and not isinstance(data, bool):
            return cls.constant(parse_rational(data))
        if not isinstance(data, dict) or "num" not in data:
            raise errors.DocumentValueError("invalid-ratfunc", {"value": str(data)})
        num = IntPoly.from_json(data["num"])
        den = IntPoly.from_json(data.get("den", ["1"]))
        if den.is_zero:
            raise errors.DocumentValueError("zero-denominator", {"value": data})
        return cls(num, den)

    def to_json(self) -> dict[str, list[str]]:
        """Canonical document form."""
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @property
    def is_zero(self) -> bool:
        """Whether this is the zero function."""
        return self.num.is_zero

    @property
    def is_constant(self) -> bool:
        """Whether num and den are both constants."""
        return self.num.degree <= 0 and self.den.degree == 0

    def __add__(self, other: RatOperand) -> RatFunc:
        other = _as_ratfunc(other)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> RatFunc:
        return RatFunc(-self.num, self.den)

    def __sub__(self, other: RatOperand) -> RatFunc:
        return self + (-_as_ratfunc(other))

    def __rsub__(self, other: RatOperand) -> RatFunc:
        return _as_ratfunc(other) - self

    def __mul__(self, other: RatOperand) -> RatFunc:
        other = _as_ratfunc(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: RatOperand) -> RatFunc:
        other = _as_ratfunc(other)
        if other.is_zero:
            raise ZeroDivisionError("Division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other: RatOperand) -> RatFunc:
        return _as_ratfunc(other) / self

    def __pow__(self, exponent: int) -> RatFunc:
        if exponent < 0:
            return RatFunc.constant(1) / (self**-exponent)
        return RatFunc(self.num**exponent, self.den**exponent)

    def __call__(self, point: int | Fraction) -> Fraction:
        return self.evaluate(point)

    def evaluate(self, point: int | Fraction) -> Fraction:
        """Exact value at a rational point.

        Raises:
            PoleAtPoint if the denominator vanishes at the point.
        """
        den = self.den.evaluate(point)
        if not den:
            raise errors.PoleAtPoint(point)
        return self.num.evaluate(point) / den

    def shift(self, offset: int) -> RatFunc:
        """The function r(n + offset)."""
        if not offset:
            return self
        return RatFunc(self.num.shift(offset), self.den.shift(offset))

    def cleared(self) -> IntPoly:
        """num * den, a polynomial with the same sign as this function away from poles."""
        return self.num * self.den

    def __str__(self) -> str:
        if self.den == IntPoly((1,)):
            return format_poly(self.num)
        return f"({format_poly(self.num)})/({format_poly(self.den)})"


def _as_ratfunc(value: RatOperand) -> RatFunc:
    """Coerce polynomial and scalar operands."""
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, IntPoly):
        return RatFunc(value)
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return RatFunc.constant(value)
    raise TypeError(f"Cannot combine RatFunc with {type(value).__name__}")


def ratfunc_compose_shift(r: RatFunc, offset: int) -> RatFunc:
    """Return r(n + offset) in canonical form."""
    return r.shift(offset)


def ratfunc_eval(r: RatFunc, n: int | Fraction) -> Fraction:
    """Exact value of r at n, raising PoleAtPoint at a root of the denominator."""
    return r.evaluate(n)
