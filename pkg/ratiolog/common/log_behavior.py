"""Finite-prefix exact checks of log-convexity, log-concavity, ratio variants, and log-monotonicity of order k.

Every comparison is a product of term powers on each side. Terms are positive rationals, so each side is compared
by cross-multiplying numerators and denominators as integers; no rational division happens in the hot loop.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction
from typing import Any
from typing import Sequence

from ratiolog.common.sequences import SequenceDef
from ratiolog.common.sequences import terms_between
from ratiolog.shared import errors

logger = logging.getLogger(__name__)

SCOPE_WINDOW = "finite-window"
SCOPE_UNBOUNDED = "unbounded"
SCOPE_WINDOW_RELATIVE = "window-relative"
SCOPE_NUMERIC = "numeric-evidence"

# (relative position, exponent) pairs for the left and right side of each comparison around a centre index.
Pattern = tuple[tuple[tuple[int, int], ...], tuple[tuple[int, int], ...]]
LOG_CONVEX: Pattern = (((-1, 1), (1, 1)), ((0, 2),))
LOG_CONCAVE: Pattern = (((0, 2),), ((-1, 1), (1, 1)))
RATIO_LOG_CONVEX: Pattern = (((-2, 1), (0, 6), (2, 1)), ((-1, 4), (1, 4)))
RATIO_LOG_CONCAVE: Pattern = (((-1, 1), (1, 3)), ((0, 3), (2, 1)))


@dataclass(frozen=True)
class Violation:
    """First failed comparison: lhs and rhs reproduce it exactly."""

    index: Any
    lhs: Any
    rhs: Any

    def to_json(self) -> dict:
        """Convert the violation into a JSON compatible type."""
        return {"index": self.index, "lhs": self.lhs, "rhs": self.rhs}


@dataclass(frozen=True)
class CheckOutcome:
    """Result of a check over a range of indices.

    Attributes:
        holds: Whether every comparison succeeded.
        strict: Whether strict inequalities were required.
        first_violation: Smallest failing index with both sides, set only when holds is False.
        checked_range: First and last checked index, None for an unbounded end.
        label: Name of the checked property.
        scope: How far the result reaches (finite window, unbounded proof, window-relative, numeric evidence).
        notes: Extra proof or context lines.
    """

    holds: bool
    strict: bool
    first_violation: Violation | None = None
    checked_range: tuple[Any, Any] = (None, None)
    label: str = ""
    scope: str = SCOPE_WINDOW
    notes: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        """Convert the outcome into a JSON compatible type."""
        return {
            "holds": self.holds,
            "strict": self.strict,
            "first_violation": self.first_violation,
            "checked_range": list(self.checked_range),
            "label": self.label,
            "scope": self.scope,
            "notes": list(self.notes),
        }


def _require_positive(terms: Sequence[Fraction], start: int, first: int = 0, last: int | None = None) -> None:
    """Raise NonPositiveTerm at the first term <= 0 among positions first..last."""
    last = len(terms) - 1 if last is None else last
    for position in range(first, last + 1):
        if terms[position] <= 0:
            raise errors.NonPositiveTerm(start + position, {"value": str(terms[position])})


def _side(terms: Sequence[Fraction], centre: int, side: tuple[tuple[int, int], ...]) -> tuple[int, int]:
    """Numerator and denominator products of one side of a comparison."""
    numerator = 1
    denominator = 1
    for offset, exponent in side:
        term = terms[centre + offset]
        numerator *= term.numerator**exponent
        denominator *= term.denominator**exponent
    return numerator, denominator


def _compare(terms: Sequence[Fraction], centre: int, pattern: Pattern) -> int:
    """Sign of lhs - rhs at a centre position."""
    left_num, left_den = _side(terms, centre, pattern[0])
    right_num, right_den = _side(terms, centre, pattern[1])
    difference = left_num * right_den - right_num * left_den
    return (difference > 0) - (difference < 0)


def _value(terms: Sequence[Fraction], centre: int, side: tuple[tuple[int, int], ...]) -> Fraction:
    numerator, denominator = _side(terms, centre, side)
    return Fraction(numerator, denominator)


def pattern_reach(pattern: Pattern) -> tuple[int, int]:
    """Lowest and highest relative positions a pattern touches."""
    offsets = [offset for side in pattern for offset, _ in side]
    return min(offsets), max(offsets)


def check_pattern(  # Allow all range controls in one entry point. pylint: disable=too-many-arguments
    terms: Sequence[Fraction],
    pattern: Pattern,
    strict: bool,
    start: int = 0,
    first: int | None = None,
    last: int | None = None,
    label: str = "",
) -> CheckOutcome:
    """Check lhs >= rhs (or >) for a comparison pattern at every admissible centre.

    Args:
        terms: Consecutive terms, terms[0] having index start.
        pattern: Left and right (offset, exponent) products around a centre.
        strict: Whether to require lhs > rhs.
        start: Index of terms[0].
        first: First centre index to check, defaults to the first admissible one.
        last: Last centre index to check, defaults to the last admissible one.
        label: Property name recorded in the outcome.

    Returns:
        The outcome, with the smallest failing centre when the check fails.

    Raises:
        TooFewTerms if no centre is admissible or the requested range is outside the terms.
        NonPositiveTerm if a term touched by the comparisons is not positive.
    """
    low, high = pattern_reach(pattern)
    needed = high - low + 1
    admissible_first = start - low
    admissible_last = start + len(terms) - 1 - high
    first = admissible_first if first is None else first
    last = admissible_last if last is None else last
    if len(terms) < needed or first < admissible_first or last > admissible_last or first > last:
        raise errors.TooFewTerms(needed + max(0, last - first), len(terms))
    _require_positive(terms, start, first + low - start, last + high - start)
    for centre in range(first, last + 1):
        position = centre - start
        comparison = _compare(terms, position, pattern)
        if comparison < 0 or (strict and comparison == 0):
            violation = Violation(centre, _value(terms, position, pattern[0]), _value(terms, position, pattern[1]))
            return CheckOutcome(False, strict, violation, (first, last), label)
    return CheckOutcome(True, strict, None, (first, last), label)


def violation_centres(terms: Sequence[Fraction], pattern: Pattern, strict: bool, start: int = 0) -> list[int]:
    """Every admissible centre index where the comparison fails, in increasing order."""
    low, high = pattern_reach(pattern)
    _require_positive(terms, start)
    return [
        start + position
        for position in range(-low, len(terms) - high)
        if (comparison := _compare(terms, position, pattern)) < 0 or (strict and comparison == 0)
    ]


def apply_R(  # Named after the ratio operator R. pylint: disable=invalid-name
    terms: Sequence[Fraction],
    start: int = 0,
) -> list[Fraction]:
    """Ratio sequence x_n = z_{n+1} / z_n, one element shorter.

    Args:
        terms: Positive terms, terms[0] having index start.
        start: Index of terms[0], used for error locations.

    Returns:
        Exact ratios, element i having index start + i.

    Raises:
        NonPositiveTerm if any term is not positive.
    """
    _require_positive(terms, start)
    return [Fraction(terms[position + 1], terms[position]) for position in range(len(terms) - 1)]


def check_log_convex(terms: Sequence[Fraction], strict: bool = False, start: int = 0, **kwargs: Any) -> CheckOutcome:
    """Check z_{n-1} z_{n+1} >= z_n^2 at every interior index."""
    return check_pattern(terms, LOG_CONVEX, strict, start, label="log-convex", **kwargs)


def check_log_concave(terms: Sequence[Fraction], strict: bool = False, start: int = 0, **kwargs: Any) -> CheckOutcome:
    """Check z_{n-1} z_{n+1} <= z_n^2 at every interior index."""
    return check_pattern(terms, LOG_CONCAVE, strict, start, label="log-concave", **kwargs)


def check_ratio_log_convex(
    terms: Sequence[Fraction], strict: bool = True, start: int = 0, **kwargs: Any
) -> CheckOutcome:
    """Check z_{n+2} z_{n-2} z_n^6 > z_{n+1}^4 z_{n-1}^4, the ratio log-convexity of the ratio sequence.

    Equivalent to log-convexity of apply_R(apply_R(terms)) at the element one index below n.
    """
    return check_pattern(terms, RATIO_LOG_CONVEX, strict, start, label="ratio-log-convex", **kwargs)


def check_ratio_log_concave(
    terms: Sequence[Fraction], strict: bool = True, start: int = 0, **kwargs: Any
) -> CheckOutcome:
    """Check z_{n+1}^3 z_{n-1} > z_n^3 z_{n+2}, the log-concavity of the ratio sequence."""
    return check_pattern(terms, RATIO_LOG_CONCAVE, strict, start, label="ratio-log-concave", **kwargs)


def level_pattern(level: int) -> Pattern:
    """Log-convex at even R levels, log-concave at odd ones."""
    return LOG_CONVEX if level % 2 == 0 else LOG_CONCAVE


def log_monotonic_order(
    terms: Sequence[Fraction], k: int, start: int = 0, strict: bool = False
) -> list[CheckOutcome]:
    """Check every level r = 0 .. k-1 of log-monotonicity of order k.

    Args:
        terms: Positive terms, terms[0] having index start.
        k: Order, at least 1.
        start: Index of terms[0].
        strict: Whether to require strict inequalities.

    Returns:
        One outcome per level. The order-k verdict is the conjunction.

    Raises:
        TooFewTerms if the last level has fewer than 3 elements.
    """
    if k < 1 or len(terms) < k + 2:
        raise errors.TooFewTerms(k + 2, len(terms))
    outcomes = []
    level_terms = list(terms)
    for level in range(k):
        if level:
            level_terms = apply_R(level_terms, start)
        outcome = check_pattern(level_terms, level_pattern(level), strict, start, label=f"level-{level}")
        outcomes.append(outcome)
    return outcomes


@dataclass(frozen=True)
class OnsetResult:
    """Smallest window start from which order-k log-monotonicity holds up to a horizon.

    The value is window-relative: violations past the horizon cannot be seen.
    """

    sequence: str
    k: int
    horizon: int
    anchor: int
    onset: int | None
    last_violations: tuple[int | None, ...] = ()
    scope: str = SCOPE_WINDOW_RELATIVE

    def to_json(self) -> dict:
        """Convert the result into a JSON compatible type."""
        return {
            "sequence": self.sequence,
            "k": self.k,
            "horizon": self.horizon,
            "anchor": self.anchor,
            "onset": self.onset,
            "last_violations": list(self.last_violations),
            "scope": self.scope,
        }


def order_onset(sequence: SequenceDef, k: int, horizon: int, anchor: int | None = None) -> OnsetResult:
    """Find the smallest N >= anchor such that order-k log-monotonicity holds on terms N .. horizon.

    Level-r elements at index j depend only on terms j .. j + r, so a window starting at N sees exactly the
    violations centred above N. The onset is the largest violation centre over all levels, or the anchor.

    Args:
        sequence: Definition to analyse.
        k: Order, at least 1.
        horizon: Last term index included.
        anchor: First candidate start, defaults to the first positive index of the sequence.

    Returns:
        The onset, or None when no window of at least k + 2 terms is left.
    """
    anchor = sequence.positive_from if anchor is None else anchor
    if horizon - anchor + 1 < k + 2:
        raise errors.TooFewTerms(k + 2, max(0, horizon - anchor + 1))
    level_terms = terms_between(sequence, anchor, horizon)
    last_violations: list[int | None] = []
    for level in range(k):
        if level:
            level_terms = apply_R(level_terms, anchor)
        centres = violation_centres(level_terms, level_pattern(level), strict=False, start=anchor)
        last_violations.append(centres[-1] if centres else None)
        logger.debug(f"{sequence.name} level {level}: {len(centres)} violation(s) up to {horizon}")
    onset = max([anchor] + [centre for centre in last_violations if centre is not None])
    if onset > horizon - k - 2:
        onset_value = None
    else:
        onset_value = onset
    return OnsetResult(sequence.name, k, horizon, anchor, onset_value, tuple(last_violations))


def order_holds(outcomes: Sequence[CheckOutcome]) -> bool:
    """Conjunction of per-level outcomes."""
    return all(outcome.holds for outcome in outcomes)
