"""Integer-coefficient univariate polynomials in the index variable n."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable
from typing import Literal
from typing import Union

from ratiolog.common.rationals import sign
from ratiolog.shared import errors

PolyOperand = Union["IntPoly", int]


@dataclass(frozen=True)
class IntPoly:
    """Polynomial with arbitrary-precision integer coefficients in ascending degree order.

    The coefficient tuple never ends in a zero, so structural equality is polynomial equality and the zero
    polynomial is the empty tuple.
    """

    coefficients: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        """Trim trailing zeros so every instance is canonical."""
        coefficients = [int(value) for value in self.coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        object.__setattr__(self, "coefficients", tuple(coefficients))

    @classmethod
    def constant(cls, value: int) -> IntPoly:
        """Polynomial with a single constant coefficient."""
        return cls((value,))

    @classmethod
    def monomial(cls, value: int, degree: int) -> IntPoly:
        """Polynomial value * n^degree."""
        return cls((0,) * degree + (value,))

    @classmethod
    def variable(cls) -> IntPoly:
        """The polynomial n."""
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> IntPoly:
        """Monic polynomial with the given integer roots, repeated roots allowed."""
        result = cls.constant(1)
        for root in roots:
            result = result * cls((-root, 1))
        return result

    @classmethod
    def from_json(cls, data: list) -> IntPoly:
        """Read ascending coefficients given as integers or decimal strings.

        Args:
            data: List of coefficients.

        Returns:
            The canonical polynomial.

        Raises:
            DocumentValueError if a coefficient is not an integer.
        """
        if not isinstance(data, list):
            raise errors.DocumentValueError("invalid-polynomial", {"value": str(data)})
        coefficients = []
        for value in data:
            if isinstance(value, bool) or not isinstance(value, (int, str)):
                raise errors.DocumentValueError("invalid-coefficient", {"value": str(value)})
            try:
                coefficients.append(int(value))
            except ValueError as error:
                raise errors.DocumentValueError("invalid-coefficient", {"value": value}) from error
        return cls(tuple(coefficients))

    def to_json(self) -> list[str]:
        """Ascending coefficients as decimal strings."""
        return [str(value) for value in self.coefficients]

    @property
    def degree(self) -> int:
        """Degree of the polynomial, -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        """Whether this is the zero polynomial."""
        return not self.coefficients

    @property
    def leading(self) -> int:
        """Leading coefficient, 0 for the zero polynomial."""
        return self.coefficients[-1] if self.coefficients else 0

    @property
    def content(self) -> int:
        """Positive gcd of all coefficients, 0 for the zero polynomial."""
        return math.gcd(*self.coefficients) if self.coefficients else 0

    def primitive(self) -> IntPoly:
        """Divide out the content, keeping the sign of every coefficient."""
        content = self.content
        if content in (0, 1):
            return self
        return IntPoly(tuple(value // content for value in self.coefficients))

    def normalized(self) -> IntPoly:
        """Primitive part with a positive leading coefficient."""
        primitive = self.primitive()
        return -primitive if primitive.leading < 0 else primitive

    def __add__(self, other: PolyOperand) -> IntPoly:
        other = _as_poly(other)
        size = max(len(self.coefficients), len(other.coefficients))
        left = self.coefficients + (0,) * (size - len(self.coefficients))
        right = other.coefficients + (0,) * (size - len(other.coefficients))
        return IntPoly(tuple(a + b for a, b in zip(left, right)))

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-value for value in self.coefficients))

    def __sub__(self, other: PolyOperand) -> IntPoly:
        return self + (-_as_poly(other))

    def __rsub__(self, other: PolyOperand) -> IntPoly:
        return _as_poly(other) - self

    def __mul__(self, other: PolyOperand) -> IntPoly:
        other = _as_poly(other)
        if self.is_zero or other.is_zero:
            return IntPoly()
        product = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, left in enumerate(self.coefficients):
            if left:
                for j, right in enumerate(other.coefficients):
                    product[i + j] += left * right
        return IntPoly(tuple(product))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> IntPoly:
        if exponent < 0:
            raise ValueError("Negative exponents are not polynomials")
        result = IntPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __call__(self, point: int | Fraction) -> Fraction:
        return self.evaluate(point)

    def evaluate(self, point: int | Fraction) -> Fraction:
        """Exact value at a rational point, via a homogenized integer Horner scheme."""
        numerator, denominator = _split(point)
        total, scale = self._homogenized(numerator, denominator)
        return Fraction(total, scale)

    def sign_at(self, point: int | Fraction) -> int:
        """Sign of the value at a rational point without building a Fraction."""
        numerator, denominator = _split(point)
        return sign(self._homogenized(numerator, denominator)[0])

    def _homogenized(self, numerator: int, denominator: int) -> tuple[int, int]:
        """Return (sum c_i p^i q^(d-i), q^d) for the point p/q with q > 0."""
        total = 0
        scale = 1
        for value in reversed(self.coefficients):
            total = total * numerator + value * scale
            scale *= denominator
        # The loop multiplied scale once more than the degree.
        return total, scale // denominator if self.coefficients else 1

    def derivative(self) -> IntPoly:
        """Formal derivative."""
        return IntPoly(tuple(power * value for power, value in enumerate(self.coefficients))[1:])

    def shift(self, offset: int) -> IntPoly:
        """The polynomial p(n + offset)."""
        if not offset:
            return self
        linear = IntPoly((offset, 1))
        result = IntPoly()
        for value in reversed(self.coefficients):
            result = result * linear + value
        return result

    def compose(self, inner: IntPoly) -> IntPoly:
        """The polynomial p(inner(n))."""
        result = IntPoly()
        for value in reversed(self.coefficients):
            result = result * inner + value
        return result

    def pseudo_remainder(self, divisor: IntPoly) -> IntPoly:
        """Remainder of lc(divisor)^(deg self - deg divisor + 1) * self divided by divisor.

        Args:
            divisor: Nonzero polynomial.

        Returns:
            Integer polynomial of degree below the divisor's degree.
        """
        if divisor.is_zero:
            raise ZeroDivisionError("Pseudo-division by the zero polynomial")
        remainder = list(self.coefficients)
        degree = divisor.degree
        lead = divisor.leading
        missing = self.degree - degree + 1
        while len(remainder) - 1 >= degree and remainder:
            top = remainder[-1]
            offset = len(remainder) - 1 - degree
            remainder = [value * lead for value in remainder]
            for index, value in enumerate(divisor.coefficients):
                remainder[index + offset] -= top * value
            remainder.pop()
            while remainder and remainder[-1] == 0:
                remainder.pop()
            missing -= 1
        result = IntPoly(tuple(remainder))
        if missing > 0:
            result = result * lead**missing
        return result

    def exact_quotient(self, divisor: IntPoly) -> IntPoly:
        """Quotient of an exact division over the integers.

        Raises:
            ArithmeticError if the divisor does not divide this polynomial in Z[n].
        """
        if divisor.is_zero:
            raise ZeroDivisionError("Division by the zero polynomial")
        if self.is_zero:
            return self
        remainder = list(self.coefficients)
        degree = divisor.degree
        lead = divisor.leading
        if self.degree < degree:
            raise ArithmeticError(f"{divisor} does not divide {self}")
        quotient = [0] * (self.degree - degree + 1)
        for power in range(self.degree - degree, -1, -1):
            top = remainder[power + degree]
            if top % lead:
                raise ArithmeticError(f"{divisor} does not divide {self}")
            factor = top // lead
            quotient[power] = factor
            for index, value in enumerate(divisor.coefficients):
                remainder[power + index] -= factor * value
        if any(remainder):
            raise ArithmeticError(f"{divisor} does not divide {self}")
        return IntPoly(tuple(quotient))

    def gcd(self, other: IntPoly) -> IntPoly:
        """Greatest common divisor in Z[n] with a positive leading coefficient, via a primitive remainder sequence."""
        if self.is_zero or other.is_zero:
            remaining = other if self.is_zero else self
            return remaining.normalized() * remaining.content
        content = math.gcd(self.content, other.content)
        first, second = self.primitive(), other.primitive()
        if first.degree < second.degree:
            first, second = second, first
        while not second.is_zero:
            first, second = second, first.pseudo_remainder(second).primitive()
        return first.normalized() * content

    def squarefree(self) -> IntPoly:
        """Primitive polynomial with the same distinct roots and no repeated factor."""
        if self.degree < 1:
            return IntPoly.constant(1) if not self.is_zero else self
        repeated = self.gcd(self.derivative())
        return self.primitive().exact_quotient(repeated.primitive()).normalized()

    def cauchy_bound(self) -> int:
        """Integer B such that every real root has absolute value below B."""
        if self.degree < 1:
            return 0
        lead = abs(self.leading)
        largest = max(abs(value) for value in self.coefficients[:-1])
        return 1 + -(-largest // lead) + 1

    def __str__(self) -> str:
        return format_poly(self)


def _as_poly(value: PolyOperand) -> IntPoly:
    """Coerce an integer operand into a constant polynomial."""
    if isinstance(value, IntPoly):
        return value
    if isinstance(value, int):
        return IntPoly.constant(value)
    raise TypeError(f"Cannot combine IntPoly with {type(value).__name__}")


def _split(point: int | Fraction) -> tuple[int, int]:
    """Numerator and positive denominator of an exact point."""
    if isinstance(point, Fraction):
        return point.numerator, point.denominator
    return int(point), 1


def format_poly(poly: IntPoly, variable: str = "n") -> str:
    """Human readable form, highest degree first, such as "2n^2 + 3n - 1"."""
    if poly.is_zero:
        return "0"
    parts: list[str] = []
    for power in range(poly.degree, -1, -1):
        value = poly.coefficients[power]
        if not value:
            continue
        magnitude = abs(value)
        if power == 0:
            body = str(magnitude)
        else:
            body = ("" if magnitude == 1 else str(magnitude)) + variable + (f"^{power}" if power > 1 else "")
        if not parts:
            parts.append(body if value > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if value > 0 else f"- {body}")
    return " ".join(parts)


def poly_arith(p: IntPoly, q: IntPoly, op: Literal["add", "sub", "mul"]) -> IntPoly:
    """Exact sum, difference, or product in canonical form.

    Args:
        p: Left operand.
        q: Right operand.
        op: One of "add", "sub", "mul".

    Returns:
        Canonical result polynomial.
    """
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"Unknown polynomial operation {op}")


def poly_derivative(p: IntPoly) -> IntPoly:
    """Exact formal derivative."""
    return p.derivative()


def poly_eval(p: IntPoly, x: int | Fraction) -> Fraction:
    """Exact value of p at a rational point."""
    return p.evaluate(x)
