"""Tests for canonical rational functions."""

from fractions import Fraction
from typing import Callable

import pytest

from ratiolog.common.polynomials import IntPoly
from ratiolog.common.ratfuncs import RatFunc
from ratiolog.common.ratfuncs import ratfunc_compose_shift
from ratiolog.common.ratfuncs import ratfunc_eval
from ratiolog.shared import errors

N = RatFunc.variable()


def test_canonical_form() -> None:
    """Common factors, shared content and negative denominators are normalized."""
    assert RatFunc(IntPoly((2, 2)), IntPoly((4, 4))) == RatFunc.constant(Fraction(1, 2))
    flipped = RatFunc(IntPoly((1,)), IntPoly((0, -1)))
    assert flipped.num == IntPoly((-1,))
    assert flipped.den == IntPoly((0, 1))
    assert RatFunc(IntPoly(), IntPoly((3, 1))).den == IntPoly((1,))
    with pytest.raises(ZeroDivisionError):
        RatFunc(IntPoly((1,)), IntPoly())


def test_arithmetic() -> None:
    """Field operations stay canonical."""
    plus_one = N + 1
    assert N / plus_one + 1 / plus_one == RatFunc.constant(1)
    assert (N * N - 1) / (N - 1) == plus_one
    assert N**-2 == RatFunc(IntPoly((1,)), IntPoly((0, 0, 1)))
    assert Fraction(1, 2) * N == RatFunc(IntPoly((0, 1)), IntPoly((2,)))
    with pytest.raises(ZeroDivisionError):
        _ = N / RatFunc.constant(0)
    with pytest.raises(TypeError):
        _ = N + 0.5


@pytest.mark.parametrize_test_case(
    "test",
    {
        "integer point": {"args": [RatFunc.from_polys((1, 1), (0, 2)), 3], "returns": Fraction(2, 3)},
        "rational point": {"args": [RatFunc.from_polys((0, 1), (1, 1)), Fraction(1, 2)], "returns": Fraction(1, 3)},
        "pole": {"args": [RatFunc.from_polys((1,), (-3, 1)), 3], "raises": errors.PoleAtPoint},
    },
)
def test_ratfunc_eval(test: dict, function_tester: Callable) -> None:
    """Exact evaluation with poles reported."""
    function_tester(test, ratfunc_eval)


def test_compose_shift() -> None:
    """r(n + k) is evaluated consistently."""
    reciprocal = RatFunc.from_polys((1,), (-3, 1))
    assert ratfunc_compose_shift(reciprocal, 3) == 1 / N
    shifted = ratfunc_compose_shift(RatFunc.from_polys((1, 0, 2), (5, 1)), -2)
    assert shifted.evaluate(7) == Fraction(51, 10)


def test_json_round_trip() -> None:
    """Documents accept constants and coefficient lists."""
    value = RatFunc.from_polys((-2, 12, -24, 16), (0, 0, 0, 1))
    assert RatFunc.from_json(value.to_json()) == value
    assert RatFunc.from_json("3/4") == RatFunc.constant(Fraction(3, 4))
    assert RatFunc.from_json({"num": ["0", "1"]}) == N
    with pytest.raises(errors.DocumentValueError):
        RatFunc.from_json({"num": ["1"], "den": ["0"]})
    with pytest.raises(errors.DocumentValueError):
        RatFunc.from_json({"den": ["1"]})


def test_str() -> None:
    """Readable forms."""
    assert str(N + 1) == "n + 1"
    assert str(N / (N + 1)) == "(n)/(n + 1)"
    assert RatFunc.constant(5).is_constant
    assert not N.is_constant
