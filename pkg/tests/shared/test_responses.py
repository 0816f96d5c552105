"""Tests for the JSON report helpers."""

import json
from fractions import Fraction
from typing import Callable

import pytest

from ratiolog.shared import errors
from ratiolog.shared import responses


class _Document:
    def to_json(self) -> dict:
        return {"value": Fraction(1, 3), "items": (Fraction(2), None)}


@pytest.mark.parametrize_test_case(
    "test",
    {
        "integer": {"args": [Fraction(12)], "returns": "12"},
        "negative fraction": {"args": [Fraction(-3, 4)], "returns": "-3/4"},
        "reduced": {"args": [Fraction(6, 8)], "returns": "3/4"},
    },
)
def test_format_rational(test: dict, function_tester: Callable) -> None:
    """Rationals render exactly."""
    function_tester(test, responses.format_rational)


@pytest.mark.parametrize_test_case(
    "test",
    {
        "scalars pass through": {"args": [[1, "a", True, None, 0.5]], "returns": [1, "a", True, None, 0.5]},
        "fractions become strings": {"args": [{"x": Fraction(5, 2)}], "returns": {"x": "5/2"}},
        "objects expand recursively": {
            "args": [[_Document()]],
            "returns": [{"value": "1/3", "items": ["2", None]}],
        },
        "keys become strings": {"args": [{1: "a"}], "returns": {"1": "a"}},
    },
)
def test_to_jsonable(test: dict, function_tester: Callable) -> None:
    """Nested report values convert to plain JSON types."""
    function_tester(test, responses.to_jsonable)


def test_json_error_from_verification_error() -> None:
    """Error envelopes carry the slug and the error data."""
    envelope = responses.json_error(errors.UnknownSequence("nope"))
    assert envelope == {"error": "unknown-sequence", "error_data": {"name": "nope"}}


def test_json_error_hides_unexpected_exceptions() -> None:
    """Unexpected exceptions do not leak their message."""
    assert responses.json_error(RuntimeError("secret")) == {"error": "internal-error"}


def test_json_result_status() -> None:
    """Result envelopes echo the status text of the exit code."""
    envelope = responses.json_result({"holds": False}, errors.EXIT_REFUTED)
    assert envelope == {"result": {"holds": False}, "status": "refuted"}


def test_dumps_round_trip_is_stable() -> None:
    """Serialize, parse and serialize again gives identical text."""
    text = responses.dumps({"b": [Fraction(1, 2)], "a": {"z": 1, "y": _Document()}})
    assert responses.dumps(json.loads(text)) == text
    assert text.index('"a"') < text.index('"b"')
