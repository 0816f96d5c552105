"""Functions for providing consistent JSON report envelopes from commands."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from ratiolog.shared import errors

KEY_ERROR = "error"
KEY_ERROR_DATA = "error_data"
KEY_RESULT = "result"
KEY_STATUS = "status"


def to_jsonable(value: Any) -> Any:
    """Convert nested report values into JSON compatible types.

    Fractions become exact "p/q" strings (or plain integer strings) so no precision is lost, and objects exposing
    to_json() are expanded recursively.

    Args:
        value: Value to convert.

    Returns:
        A structure containing only str, int, float, bool, list, dict, and None values.
    """
    if isinstance(value, bool) or value is None or isinstance(value, (str, float)):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if hasattr(value, "to_json"):
        return to_jsonable(value.to_json())
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    return str(value)


def format_rational(value: Fraction) -> str:
    """Render an exact rational as "p" or "p/q"."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def dumps(data: Any) -> str:
    """Serialize a report deterministically.

    Args:
        data: Report structure, converted through to_jsonable first.

    Returns:
        Pretty printed JSON with sorted keys, identical for identical inputs.
    """
    return json.dumps(to_jsonable(data), indent=2, sort_keys=True)


def json_error(error: str | errors.VerificationError | Exception, data: Any = None) -> dict:
    """Error envelope {"error": slug, "error_data": data} printed on standard error.

    Verification errors supply their own slug and data.
    Any other exception is reported as "internal-error".
    """
    if isinstance(error, errors.VerificationError):
        slug, data = error.error, error.data if data is None else data
    else:
        slug = error if isinstance(error, str) else "internal-error"
    envelope: dict[str, Any] = {KEY_ERROR: slug}
    if data is not None:
        envelope[KEY_ERROR_DATA] = to_jsonable(data)
    return envelope


def json_result(result: Any, code: int = errors.EXIT_HOLDS) -> dict:
    """Result envelope with the outcome and the status text of its exit code."""
    return {KEY_RESULT: to_jsonable(result), KEY_STATUS: errors.exit_text(code)}
