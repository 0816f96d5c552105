"""Tests for complete positivity proofs on integer half-lines."""

from typing import Callable

import pytest

from ratiolog.common.polynomials import IntPoly
from ratiolog.common.positivity import PositivityStatus
from ratiolog.common.positivity import prove_positive_on_integers
from ratiolog.common.positivity import prove_ratfunc_positive
from ratiolog.common.positivity import sturm_chain
from ratiolog.common.positivity import sturm_distinct_roots_geq
from ratiolog.common.ratfuncs import RatFunc
from ratiolog.shared import errors

TWO_THREE = IntPoly.from_roots([2, 3])
TEN = IntPoly.from_roots([10])


@pytest.mark.parametrize_test_case(
    "test",
    {
        "double root from 0": {"args": [TWO_THREE, 0], "attributes": {"status": "NotPositive", "witness": 2}},
        "past the roots": {
            "args": [TWO_THREE, 4],
            "attributes": {"status": "PositiveByShiftedCoefficients", "witness": None},
        },
        "non-strict touches zero": {
            "args": [TWO_THREE, 0],
            "kwargs": {"strict": False},
            "attributes": {"status": "PositiveBySturm", "witness": None},
        },
        "linear negative start": {"args": [TEN, 0], "attributes": {"status": "NotPositive", "witness": 0}},
        "linear after root": {"args": [TEN, 11], "attributes": {"status": "PositiveByShiftedCoefficients"}},
        "square strict": {"args": [TEN * TEN, 0], "attributes": {"status": "NotPositive", "witness": 10}},
        "square non-strict": {"args": [TEN * TEN, 0], "kwargs": {"strict": False}, "attributes": {"positive": True}},
        "no real roots": {"args": [IntPoly((26, -10, 1)), 0], "attributes": {"status": "PositiveBySturm"}},
        "positive constant": {"args": [IntPoly((3,)), -5], "attributes": {"positive": True}},
        "zero strict": {"args": [IntPoly(), 0], "raises": errors.ZeroPolynomial},
        "root at start falls right after": {
            "args": [IntPoly((0, -1)), 0],
            "kwargs": {"strict": False},
            "attributes": {"status": "NotPositive", "witness": 1},
        },
        "root at shifted start": {
            "args": [IntPoly((1, -1)), 1],
            "kwargs": {"strict": False},
            "attributes": {"status": "NotPositive", "witness": 2},
        },
        "cubic with only root at start": {
            "args": [IntPoly((3, 15, 27, -45)), 1],
            "kwargs": {"strict": False},
            "attributes": {"status": "NotPositive", "witness": 2},
        },
        "root at start then positive": {
            "args": [IntPoly((-1, 1)), 1],
            "kwargs": {"strict": False},
            "attributes": {"positive": True},
        },
        "zero non-strict": {"args": [IntPoly(), 0], "kwargs": {"strict": False}, "attributes": {"positive": True}},
    },
)
def test_prove_positive_on_integers(test: dict, function_tester: Callable) -> None:
    """Verdicts and smallest witnesses."""
    function_tester(test, prove_positive_on_integers)


@pytest.mark.parametrize_test_case(
    "test",
    {
        "three roots above 2": {"args": [IntPoly.from_roots([1, 2, 3]), 2], "returns": 2},
        "three roots above 0": {"args": [IntPoly.from_roots([1, 2, 3]), 0], "returns": 3},
        "repeated roots counted once": {"args": [IntPoly.from_roots([4, 4, 5]), 0], "returns": 2},
        "no real roots": {"args": [IntPoly((1, 0, 1)), 0], "returns": 0},
        "zero polynomial": {"args": [IntPoly(), 0], "raises": errors.ZeroPolynomial},
    },
)
def test_sturm_distinct_roots_geq(test: dict, function_tester: Callable) -> None:
    """Distinct root counts on closed half-lines."""
    function_tester(test, sturm_distinct_roots_geq)


@pytest.mark.parametrize_test_case(
    "test",
    {
        "pole inside": {
            "args": [RatFunc.from_polys((1,), (-3, 1)), 0],
            "attributes": {"status": "NotPositive", "witness": 3},
        },
        "after pole": {"args": [RatFunc.from_polys((1,), (-3, 1)), 4], "attributes": {"positive": True}},
        "zero strict": {"args": [RatFunc.constant(0), 7], "attributes": {"status": "NotPositive", "witness": 7}},
        "zero non-strict": {
            "args": [RatFunc.constant(0), 7],
            "kwargs": {"strict": False},
            "attributes": {"positive": True},
        },
        "numerator root at start": {
            "args": [RatFunc.from_polys((3, 15, 27, -45), (1, 3, 3, 1)), 1],
            "kwargs": {"strict": False},
            "attributes": {"status": "NotPositive", "witness": 2},
        },
    },
)
def test_prove_ratfunc_positive(test: dict, function_tester: Callable) -> None:
    """Poles count as failures."""
    function_tester(test, prove_ratfunc_positive)


def test_sign_varying_denominator() -> None:
    """Denominators changing sign between integers are handled through num * den."""
    positive = RatFunc.from_polys((-7, 3), (-5, 2))
    assert prove_ratfunc_positive(positive, 0).positive
    negative_at_three = RatFunc.from_polys((-7, 2), (-5, 2))
    verdict = prove_ratfunc_positive(negative_at_three, 0)
    assert verdict.status == PositivityStatus.NOT_POSITIVE
    assert verdict.witness == 3
    assert verdict.transcript[0] == "denominator sign varies, proving num * den instead"


def test_transcript_and_json() -> None:
    """Verdicts serialize with their proof steps."""
    verdict = prove_positive_on_integers(TWO_THREE, 0)
    data = verdict.to_json()
    assert data["status"] == "NotPositive"
    assert data["witness"] == 2
    assert data["transcript"][-1] == "p(2) <= 0"


def test_sturm_chain_starts_squarefree() -> None:
    """The chain starts with the square-free part."""
    chain = sturm_chain(IntPoly.from_roots([1, 1, 2]))
    assert chain[0] == IntPoly.from_roots([1, 2])
    assert chain[-1].degree == 0
