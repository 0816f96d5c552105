"""Lower and upper bounds on consecutive-term ratios x_n = z_n / z_{n-1} of three-term recurrences.

Bounds are proven for every n >= N by induction, with the induction step reduced to positivity of a rational
function of n, or checked over a finite horizon by propagating an exact bracket through the ratio map
x_{n+1} = a_n + b_n / x_n.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from dataclasses import replace
from fractions import Fraction
from typing import Callable

from ratiolog.common import config_utils
from ratiolog.common.log_behavior import SCOPE_UNBOUNDED
from ratiolog.common.log_behavior import SCOPE_WINDOW_RELATIVE
from ratiolog.common.log_behavior import CheckOutcome
from ratiolog.common.log_behavior import Violation
from ratiolog.common.positivity import PositivityVerdict
from ratiolog.common.positivity import prove_ratfunc_positive
from ratiolog.common.ratfuncs import RatFunc
from ratiolog.common.sequences import SequenceDef
from ratiolog.common.sequences import terms_between
from ratiolog.shared import errors
from ratiolog.shared.responses import format_rational

logger = logging.getLogger(__name__)

MODE_SYMBOLIC = "symbolic"
MODE_INTERVAL = "interval"
MODE_AUTO = "auto"
MODES = (MODE_SYMBOLIC, MODE_INTERVAL, MODE_AUTO)

LABEL_LOWER = "ratio-lower-bound"
LABEL_UPPER = "ratio-upper-bound"


@dataclass(frozen=True)
class RatioBracket:
    """Exact enclosure lower <= z_index / z_{index-1} <= upper."""

    index: int
    lower: Fraction
    upper: Fraction

    def to_json(self) -> dict:
        """Convert the bracket into a JSON compatible type."""
        return {"index": self.index, "lower": self.lower, "upper": self.upper}


def exact_ratios(sequence: SequenceDef, first: int, last: int) -> dict[int, Fraction]:
    """Exact x_n = z_n / z_{n-1} for n = first .. last.

    Raises:
        ZeroTerm at the index of the first vanishing denominator term.
    """
    terms = terms_between(sequence, first - 1, last)
    ratios = {}
    for position in range(len(terms) - 1):
        if not terms[position]:
            raise errors.ZeroTerm(first - 1 + position)
        ratios[first + position] = terms[position + 1] / terms[position]
    return ratios


def _coefficients(sequence: SequenceDef, n: int) -> tuple[Fraction, Fraction]:
    recurrence = sequence.recurrence
    try:
        return recurrence.a.evaluate(n), recurrence.b.evaluate(n)
    except errors.PoleAtPoint as error:
        raise errors.CoefficientPole(n) from error


def propagate_ratio_bounds(
    sequence: SequenceDef,
    start: int,
    stop: int,
    bracket: tuple[Fraction, Fraction] | None = None,
) -> list[RatioBracket]:
    """Push an exact bracket of z_start / z_{start-1} through the recurrence up to index stop.

    The map x -> a_n + b_n / x is decreasing for b_n > 0 and increasing for b_n < 0, so the endpoints map to
    L' = a + b/U, U' = a + b/L in the first case and L' = a + b/L, U' = a + b/U in the second.

    Args:
        sequence: Recurrence defined sequence.
        start: Index N of the first bracketed ratio, z_{N-1} must be nonzero.
        stop: Last propagated index.
        bracket: Initial enclosure containing z_N / z_{N-1}, defaults to the exact ratio.

    Returns:
        One bracket per index start .. stop.

    Raises:
        BoundNotBracketing if the initial bracket does not contain the exact ratio.
        SymbolicInconclusive if a lower end stops being positive.
    """
    exact = exact_ratios(sequence, start, start)[start]
    lower, upper = (exact, exact) if bracket is None else (Fraction(bracket[0]), Fraction(bracket[1]))
    if not lower <= exact <= upper:
        raise errors.BoundNotBracketing(
            start, {"ratio": format_rational(exact), "lower": format_rational(lower), "upper": format_rational(upper)}
        )
    brackets = [RatioBracket(start, lower, upper)]
    for n in range(start, stop):
        if lower <= 0:
            raise errors.SymbolicInconclusive("lower bracket end is not positive", n)
        a_n, b_n = _coefficients(sequence, n)
        if b_n > 0:
            lower, upper = a_n + b_n / upper, a_n + b_n / lower
        elif b_n < 0:
            lower, upper = a_n + b_n / lower, a_n + b_n / upper
        else:
            lower = upper = a_n
        brackets.append(RatioBracket(n + 1, lower, upper))
    return brackets


def _lower_bound_by_interval(
    sequence: SequenceDef,
    g: RatFunc,
    start: int,
    horizon: int,
    bracket: tuple[Fraction, Fraction] | None = None,
) -> CheckOutcome:
    checked = (start, start + horizon)
    for item in propagate_ratio_bounds(sequence, start, start + horizon, bracket):
        bound = g.evaluate(item.index)
        if item.lower >= bound:
            continue
        if item.lower != item.upper:
            raise errors.SymbolicInconclusive("propagated lower end drops below the bound", item.index)
        return CheckOutcome(
            False, False, Violation(item.index, item.lower, bound), checked, LABEL_LOWER, SCOPE_WINDOW_RELATIVE
        )
    note = f"x_n >= g(n) for n in [{start}, {start + horizon}] by exact propagation"
    return CheckOutcome(True, False, None, checked, LABEL_LOWER, SCOPE_WINDOW_RELATIVE, (note,))


def _sign_of_b(sequence: SequenceDef, start: int) -> int:
    """+1 or -1 when the sign of b(n) is proven constant for n >= start."""
    b = sequence.recurrence.b
    if prove_ratfunc_positive(b, start).positive:
        return 1
    verdict = prove_ratfunc_positive(-b, start)
    if verdict.positive:
        return -1
    raise errors.SymbolicInconclusive("sign of b(n) is not constant", verdict.witness)


def _require_positive(function: RatFunc, start: int, detail: str) -> PositivityVerdict:
    verdict = prove_ratfunc_positive(function, start)
    if not verdict.positive:
        raise errors.SymbolicInconclusive(detail, verdict.witness)
    return verdict


def _induct(  # Base search needs the full proof context. pylint: disable=too-many-arguments
    sequence: SequenceDef,
    g: RatFunc,
    start: int,
    base_window: int,
    step: RatFunc,
    strict: bool,
    base_holds: Callable[[int, Fraction], bool],
) -> tuple[int, PositivityVerdict]:
    """Find the first base B in start .. start + base_window from which the induction step is proven.

    Indices skipped on the way are checked exactly against g.

    Returns:
        The base and the verdict proving the step for n >= B.

    Raises:
        BoundNotBracketing at the first exactly checked index where x_n < g(n).
        SymbolicInconclusive if no base inside the window starts a proven induction.
    """
    last_base = start + base_window
    ratios = exact_ratios(sequence, start, last_base)
    base = start
    witness = None
    while base <= last_base:
        _check_exact(ratios, g, base, base)
        if not base_holds(base, ratios[base]):
            base += 1
            continue
        verdict = prove_ratfunc_positive(step, base, strict=strict)
        if verdict.positive:
            return base, verdict
        witness = verdict.witness
        logger.debug(f"Induction step fails at {witness}, moving the base past it")
        _check_exact(ratios, g, base + 1, min(witness, last_base))
        base = witness + 1
    raise errors.SymbolicInconclusive("no base index in the base window starts the induction", witness)


def _check_exact(ratios: dict[int, Fraction], g: RatFunc, first: int, last: int) -> None:
    for index in range(first, last + 1):
        bound = g.evaluate(index)
        if ratios[index] < bound:
            raise errors.BoundNotBracketing(
                index, {"ratio": format_rational(ratios[index]), "bound": format_rational(bound)}
            )


def _printed_form_note(sequence: SequenceDef, g: RatFunc, base: int) -> str:
    """Evaluate the propagation inequality in the form b_n/(g_{n+1}-b_n) > a_{n-1} + b_{n-1}/g_{n-1}."""
    a, b = sequence.recurrence.a, sequence.recurrence.b
    try:
        printed = b / (g.shift(1) - b) - a.shift(-1) - b.shift(-1) / g.shift(-1)
        verdict = prove_ratfunc_positive(printed, base + 1)
    except (ZeroDivisionError, errors.VerificationError) as error:
        return f"alternative form b_n/(g_(n+1)-b_n) not evaluable: {error}"
    if verdict.positive:
        return f"alternative form b_n/(g_(n+1)-b_n) also holds for n >= {base + 1}"
    return f"forms disagree: alternative form b_n/(g_(n+1)-b_n) fails at n = {verdict.witness}"


def _lower_bound_symbolic(sequence: SequenceDef, g: RatFunc, start: int, base_window: int) -> CheckOutcome:
    a, b = sequence.recurrence.a, sequence.recurrence.b
    sign = _sign_of_b(sequence, start)
    _require_positive(g, start, "g(n) > 0")
    notes = []
    if sign > 0 and prove_ratfunc_positive(a - g.shift(1), start, strict=False).positive:
        # x_{n+1} = a_n + b_n / x_n > a_n >= g(n+1).
        base, verdict = _induct(sequence, g, start, 0, a - g.shift(1), False, lambda index, ratio: True)
        notes.append(f"a(n) >= g(n+1) for n >= {start}, so x_(n+1) > a(n) >= g(n+1)")
    elif sign > 0:
        denominator = g.shift(1) - a
        denominator_verdict = prove_ratfunc_positive(denominator, start)
        if not denominator_verdict.positive:
            raise errors.DenominatorSignAmbiguous("g(n+1) - a(n) > 0", denominator_verdict.witness)
        upper = b / denominator
        step = upper.shift(1) - a - b / g

        def sandwich(index: int, ratio: Fraction) -> bool:
            return g.evaluate(index) < ratio < upper.evaluate(index)

        base, verdict = _induct(sequence, g, start, base_window, step, True, sandwich)
        notes.append(f"g(n) < x_n < b(n)/(g(n+1)-a(n)) at n = {base}, propagated for n >= {base}")
        notes.append(_printed_form_note(sequence, g, base))
    else:
        # b_n < 0 and x_n >= g_n > 0 give x_{n+1} >= a_n + b_n / g_n.
        step = a + b / g - g.shift(1)
        base, verdict = _induct(sequence, g, start, base_window, step, False, lambda index, ratio: True)
        notes.append(f"a(n) + b(n)/g(n) >= g(n+1) for n >= {base} with b(n) < 0")
    if base > start:
        notes.append(f"x_n >= g(n) checked exactly for n in [{start}, {base - 1}]")
    notes.extend(verdict.transcript)
    return CheckOutcome(True, False, None, (start, None), LABEL_LOWER, SCOPE_UNBOUNDED, tuple(notes))


def verify_ratio_lower_bound(  # Mode and range controls share one entry point. pylint: disable=too-many-arguments
    sequence: SequenceDef,
    g: RatFunc,
    start: int,
    mode: str = MODE_AUTO,
    base_window: int | None = None,
    horizon: int | None = None,
    bracket: tuple[Fraction, Fraction] | None = None,
) -> CheckOutcome:
    """Check z_n / z_{n-1} >= g(n) for n >= start.

    Symbolic mode proves the bound for every n by induction and scopes the outcome as unbounded. Interval mode
    propagates exact brackets over a horizon and scopes the outcome as window-relative. Auto mode tries the
    symbolic proof first and falls back to interval mode when a sign or an induction step cannot be proven.

    Args:
        sequence: Recurrence defined sequence.
        g: Candidate lower bound.
        start: First index N, z_{N-1} must be nonzero.
        mode: One of symbolic, interval, auto.
        base_window: Indices past N where the symbolic base may move, defaults to RATIOLOG_BASE_WINDOW.
        horizon: Interval mode length, defaults to RATIOLOG_PROPAGATION_HORIZON.
        bracket: Interval mode starting enclosure.

    Returns:
        Outcome with proof notes, or the first exact violation in interval mode.

    Raises:
        BoundNotBracketing if an exactly checked ratio is below g.
        DenominatorSignAmbiguous or SymbolicInconclusive if symbolic mode cannot conclude.
    """
    if mode not in MODES:
        raise errors.UsageError(f"Unknown bound mode {mode}")
    if start < sequence.offset + 1:
        raise errors.UsageError(f"Ratio bounds start at index {sequence.offset + 1} or later")
    base_window = config_utils.BASE_WINDOW if base_window is None else base_window
    horizon = config_utils.PROPAGATION_HORIZON if horizon is None else horizon
    if mode == MODE_INTERVAL:
        return _lower_bound_by_interval(sequence, g, start, horizon, bracket)
    try:
        return _lower_bound_symbolic(sequence, g, start, base_window)
    except (errors.DenominatorSignAmbiguous, errors.SymbolicInconclusive) as error:
        if mode == MODE_SYMBOLIC:
            raise
        logger.info(f"Symbolic lower bound for {sequence.name} unavailable ({error.error}), propagating instead")
        outcome = _lower_bound_by_interval(sequence, g, start, horizon, bracket)
        return replace(outcome, notes=(f"symbolic proof unavailable: {error}",) + outcome.notes)


def verify_ratio_upper_bound(
    sequence: SequenceDef, h: RatFunc, start: int, lower: RatFunc | None = None
) -> CheckOutcome:
    """Prove z_n / z_{n-1} < h(n) for every n >= start when b(n) < 0.

    With 0 < x_n < h(n) and b_n < 0, x_{n+1} = a_n + b_n / x_n < a_n + b_n / h(n) < h(n+1). Positivity of every
    x_n comes from a lower bound x_n >= lower(n) > 0 proven by the caller, or else from the positive terms the
    sequence declares.

    Args:
        sequence: Recurrence defined sequence.
        h: Candidate upper bound.
        start: First index N, z_{N-1} must be nonzero.
        lower: Positive lower bound of the ratios for n >= start, checked separately by the caller.

    Returns:
        Unbounded outcome with the proof notes.

    Raises:
        BaseFails if x_N >= h(N).
        SymbolicInconclusive if b(n) < 0, h(n) > 0, x_n > 0 or the induction step cannot be proven.
    """
    recurrence = sequence.recurrence
    notes = []
    verdict = prove_ratfunc_positive(-recurrence.b, start)
    if not verdict.positive:
        raise errors.SymbolicInconclusive("b(n) < 0", verdict.witness)
    _require_positive(h, start, "h(n) > 0")
    ratio = exact_ratios(sequence, start, start)[start]
    if ratio <= 0:
        raise errors.SymbolicInconclusive(f"x_{start} > 0", start)
    bound = h.evaluate(start)
    if ratio >= bound:
        raise errors.BaseFails(start, {"ratio": format_rational(ratio), "bound": format_rational(bound)})
    notes.append(f"x_{start} = {format_rational(ratio)} < h({start}) = {format_rational(bound)}")
    if lower is not None:
        _require_positive(lower, start, "lower(n) > 0")
        notes.append(f"x_n >= lower(n) > 0 for n >= {start}")
    else:
        positive_from = sequence.offset if sequence.positive_from is None else sequence.positive_from
        if positive_from > start - 1:
            raise errors.SymbolicInconclusive(f"terms positive from index {start - 1}", positive_from)
        notes.append(f"terms are positive from index {positive_from}, so x_n > 0 for n >= {start}")
    step = _require_positive(
        h.shift(1) - recurrence.a - recurrence.b / h, start, "h(n+1) > a(n) + b(n)/h(n)"
    )
    notes.append(f"h(n+1) > a(n) + b(n)/h(n) for n >= {start}")
    notes.extend(step.transcript)
    return CheckOutcome(True, True, None, (start, None), LABEL_UPPER, SCOPE_UNBOUNDED, tuple(notes))
