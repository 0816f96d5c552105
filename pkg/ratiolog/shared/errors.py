"""Error model shared by every verification layer.

Each error carries a kebab-case slug, JSON compatible context data, and the exit code the CLI should use when the
error escapes a command.
"""

from __future__ import annotations

from typing import Any

EXIT_HOLDS = 0
EXIT_REFUTED = 1
EXIT_INCONCLUSIVE = 2

_exit_texts = {
    EXIT_HOLDS: "holds",
    EXIT_REFUTED: "refuted",
    EXIT_INCONCLUSIVE: "inconclusive",
}


class VerificationError(Exception):
    """Base class used to create standardized error reports via the CLI error handler."""

    def __init__(self, error: str, data: Any = None, code: int = EXIT_INCONCLUSIVE) -> None:
        """Set up the base error values.

        Args:
            error: Machine friendly error slug to show in the report body.
            data: Optional JSON compatible data providing context, such as the offending index.
            code: CLI exit code to use when this error ends a command.
        """
        super().__init__(f"{error}: {data}" if data is not None else error)
        self._error = error
        self._data = data
        self._code = code

    @property
    def code(self) -> int:
        """CLI exit code."""
        return self._code

    @property
    def data(self) -> Any:
        """Data to return in the report body to provide more context about the error."""
        return self._data

    @property
    def error(self) -> str:
        """Machine friendly error slug."""
        return self._error


class IndexedError(VerificationError):
    """Error located at a sequence index or document line."""

    slug = "indexed-error"

    def __init__(self, index: int, data: Any = None, code: int = EXIT_INCONCLUSIVE) -> None:
        """Set up the located error.

        Args:
            index: Sequence index or line number where the failure happened.
            data: Additional context merged into the error data.
            code: CLI exit code to use when this error ends a command.
        """
        details = {"index": index}
        if isinstance(data, dict):
            details.update(data)
        elif data is not None:
            details["detail"] = data
        super().__init__(self.slug, details, code=code)
        self.index = index


class PoleAtPoint(VerificationError):
    """A rational function was evaluated at a root of its denominator."""

    def __init__(self, point: Any) -> None:
        """Record the offending point."""
        super().__init__("pole-at-point", {"point": str(point)})
        self.point = point


class ZeroPolynomial(VerificationError):
    """A positivity or root question was asked about the zero polynomial."""

    def __init__(self) -> None:
        """Set up the error slug."""
        super().__init__("zero-polynomial")


class CoefficientPole(IndexedError):
    """A recurrence coefficient is undefined at an index where the recurrence is applied."""

    slug = "coefficient-pole"


class ZeroTerm(IndexedError):
    """A ratio was requested whose denominator term is zero."""

    slug = "zero-term"


class NonPositiveTerm(IndexedError):
    """A log-behavior check met a term that is not strictly positive."""

    slug = "non-positive-term"


class NonIntegralTerm(IndexedError):
    """A term expected to be an integer is a proper fraction."""

    slug = "non-integral-term"


class TooFewTerms(VerificationError):
    """Not enough terms were supplied for the requested check."""

    def __init__(self, needed: int, given: int) -> None:
        """Record the shortfall."""
        super().__init__("too-few-terms", {"needed": needed, "given": given})


class UnknownSequence(VerificationError):
    """A catalog lookup used a name that is not registered."""

    def __init__(self, name: str) -> None:
        """Record the missing name."""
        super().__init__("unknown-sequence", {"name": name})


class BoundNotBracketing(IndexedError):
    """A ratio lower bound fails at an exactly checked index."""

    slug = "bound-not-bracketing"

    def __init__(self, index: int, data: Any = None) -> None:
        """Record the failing index, this is a definite refutation."""
        super().__init__(index, data, code=EXIT_REFUTED)


class BaseFails(IndexedError):
    """A ratio upper bound fails at its base index."""

    slug = "base-fails"

    def __init__(self, index: int, data: Any = None) -> None:
        """Record the failing index, this is a definite refutation."""
        super().__init__(index, data, code=EXIT_REFUTED)


class DenominatorSignAmbiguous(VerificationError):
    """The sign of a denominator in a propagation inequality could not be proven."""

    def __init__(self, detail: str, witness: int | None = None) -> None:
        """Record which denominator was ambiguous."""
        super().__init__("denominator-sign-ambiguous", {"detail": detail, "witness": witness})


class SymbolicInconclusive(VerificationError):
    """An induction inequality could not be proven symbolically."""

    def __init__(self, detail: str, witness: int | None = None) -> None:
        """Record which inequality failed to prove."""
        super().__init__("symbolic-inconclusive", {"detail": detail, "witness": witness})


class InvalidFamily(VerificationError):
    """Parameters do not describe a valid binomial or Gamma-quotient family."""

    def __init__(self, detail: str) -> None:
        """Record the violated precondition."""
        super().__init__("invalid-family", {"detail": detail})


class PrecisionLoss(VerificationError):
    """A floating point evaluation could not reach a trustworthy error margin."""

    def __init__(self, point: Any, dps: int) -> None:
        """Record the point and the last precision tried."""
        super().__init__("precision-loss", {"point": point, "dps": dps})


class MalformedLine(IndexedError):
    """A b-file or cache line could not be parsed."""

    slug = "malformed-line"


class NonMonotoneIndex(IndexedError):
    """A b-file index did not strictly increase."""

    slug = "non-monotone-index"


class NoOverlap(VerificationError):
    """A sequence and a b-file share no index."""

    def __init__(self, name: str, oeis_id: str) -> None:
        """Record both sides of the failed comparison."""
        super().__init__("no-overlap", {"sequence": name, "oeis_id": oeis_id})


class HashMismatch(VerificationError):
    """A term cache was written for a different sequence definition."""

    def __init__(self, path: str, expected: str, found: str) -> None:
        """Record the cache file and both hashes."""
        super().__init__("hash-mismatch", {"path": path, "expected": expected, "found": found})


class CorruptCache(VerificationError):
    """A term cache file is unreadable."""

    def __init__(self, path: str, detail: str) -> None:
        """Record the cache file and what was wrong with it."""
        super().__init__("corrupt-cache", {"path": path, "detail": detail})


class DocumentValueError(VerificationError):
    """A sequence or certificate document contains an invalid value."""

    def __init__(self, error: str, data: Any = None) -> None:
        """Set up the user details of the error."""
        super().__init__(error, data, code=EXIT_INCONCLUSIVE)


class UsageError(VerificationError):
    """The command line arguments cannot be acted on."""

    def __init__(self, detail: str) -> None:
        """Record the usage problem."""
        super().__init__("usage-error", {"detail": detail}, code=EXIT_INCONCLUSIVE)


def exit_text(code: int) -> str:
    """Find the standardized message for an exit code.

    Args:
        code: CLI exit code to translate.

    Returns:
        The text message for the code, or an "unknown-<code>" value if not found.
    """
    return _exit_texts.get(code, f"unknown-{code}")
