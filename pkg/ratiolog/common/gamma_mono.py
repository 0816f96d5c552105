"""Gamma-quotient families, derangement experiments and the kernel h(t, u).

A family C_i = (n0 + i a)! / ((k0 + i b)! (k0bar + i bbar)!) is infinitely log-monotonic when a >= b + bbar and
-1 <= u <= 0 with u = k0 - (n0 + 1) b / a. The conditions are decided exactly; the conclusion is cross-checked on
finite exact prefixes, and the positivity of the underlying kernel

    h(t, u) = 1/(1 - e^-t) - e^(-t p (u + 1))/(1 - e^(-p t)) - e^(u q t)/(1 - e^(-q t)),   p = a/b, q = a/bbar

is sampled numerically with mpmath at configurable precision.
"""

from __future__ import annotations

import functools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any
from typing import Sequence

import mpmath

from ratiolog.common import config_utils
from ratiolog.common.catalog import catalog_lookup
from ratiolog.common.log_behavior import SCOPE_NUMERIC
from ratiolog.common.log_behavior import CheckOutcome
from ratiolog.common.log_behavior import OnsetResult
from ratiolog.common.log_behavior import Violation
from ratiolog.common.log_behavior import log_monotonic_order
from ratiolog.common.log_behavior import order_onset
from ratiolog.common.parallel import run_ordered
from ratiolog.common.sequences import GammaQuotientDef
from ratiolog.common.sequences import SequenceDef
from ratiolog.common.sequences import generate_terms
from ratiolog.shared import errors

logger = logging.getLogger(__name__)

# Sufficient onsets for derangements: log-convex from n = 4, ratio log-concave from n = 8.
DERANGEMENT_ONSET_BOUNDS = {2: 4, 3: 8}
DERANGEMENT_ANCHORS = (2, 3)
E_SERIES_EXTRA_TERMS = 20
SERIES_CUTOFF = Fraction(1)
NUMERIC_EVIDENCE = "numeric evidence, not proof"


@dataclass(frozen=True)
class EligibilityResult:
    """Exact evaluation of the infinite log-monotonicity conditions for a Gamma-quotient family."""

    eligible: bool
    u: Fraction
    p: Fraction
    q: Fraction
    failed_condition: str | None = None
    params: tuple[int, ...] = ()

    def to_json(self) -> dict:
        """Convert the result into a JSON compatible type."""
        return {
            "eligible": self.eligible,
            "u": self.u,
            "p": self.p,
            "q": self.q,
            "failed_condition": self.failed_condition,
            "params": list(self.params),
        }


def check_gamma_eligibility(family: GammaQuotientDef) -> EligibilityResult:
    """Decide a >= b + bbar and -1 <= u <= 0 exactly.

    Args:
        family: Gamma-quotient parameters.

    Returns:
        Eligibility with u, p, q and the first failed condition, if any.
    """
    u = family.k0 - Fraction((family.n0 + 1) * family.b, family.a)
    p = Fraction(family.a, family.b)
    q = Fraction(family.a, family.bbar)
    failed = None
    if family.a < family.b + family.bbar:
        failed = "a >= b + bbar"
    elif u < -1:
        failed = "u >= -1"
    elif u > 0:
        failed = "u <= 0"
    return EligibilityResult(failed is None, u, p, q, failed, family.params)


def binomial_family(n0: int, k0: int, step: int, inner_step: int) -> GammaQuotientDef:
    """Map C_i = binom(n0 + i step, k0 + i inner_step) to its Gamma-quotient parameters.

    Raises:
        InvalidFamily unless step > inner_step > 0, n0 >= k0 >= 0.
    """
    if not step > inner_step > 0:
        raise errors.InvalidFamily("binomial family requires step > inner_step > 0")
    if k0 > n0:
        raise errors.InvalidFamily("binomial family requires n0 >= k0")
    return GammaQuotientDef(n0=n0, k0=k0, k0bar=n0 - k0, a=step, b=inner_step, bbar=step - inner_step)


def check_binomial_family(n0: int, k0: int, step: int, inner_step: int) -> EligibilityResult:
    """Eligibility of the binomial family binom(n0 + i step, k0 + i inner_step)."""
    return check_gamma_eligibility(binomial_family(n0, k0, step, inner_step))


def family_sequence(family: GammaQuotientDef) -> SequenceDef:
    """Anonymous sequence definition for a parameter tuple."""
    label = ",".join(str(value) for value in family.params)
    return SequenceDef(name=f"gamma-quotient({label})", kind=family)


def verify_finite_log_monotonicity(family: GammaQuotientDef, k: int, count: int) -> list[CheckOutcome]:
    """Check levels 0 .. k - 1 of log-monotonicity on the first count exact terms.

    Raises:
        TooFewTerms if count < k + 3.
    """
    if count < k + 3:
        raise errors.TooFewTerms(k + 3, count)
    terms = generate_terms(family_sequence(family), count)
    return log_monotonic_order(terms, k, start=0, strict=False)


def e_enclosure(n: int, extra_terms: int = E_SERIES_EXTRA_TERMS) -> tuple[Fraction, Fraction]:
    """Rational enclosure of n!/e from the alternating series truncated after m = n + extra_terms terms.

    The tail of an alternating series with decreasing terms is bounded by its first omitted term n!/(m+1)!.
    """
    last = n + extra_terms
    factorial_n = math.factorial(n)
    partial = sum(Fraction((-1) ** j, math.factorial(j)) for j in range(last + 1))
    centre = factorial_n * partial
    tail = Fraction(factorial_n, math.factorial(last + 1))
    return centre - tail, centre + tail


def derangement_e_bound(n_max: int, n_min: int = 3) -> CheckOutcome:
    """Check |d_n - n!/e| <= 1/2 for n_min <= n <= n_max with exact rational enclosures.

    Returns:
        Outcome with the first index where the whole enclosure is not within 1/2 of d_n.
    """
    if n_min < 0 or n_max < n_min:
        raise errors.UsageError(f"Invalid derangement range [{n_min}, {n_max}]")
    terms = generate_terms(catalog_lookup("derangement"), n_max + 1)
    half = Fraction(1, 2)
    for n in range(n_min, n_max + 1):
        lower, upper = e_enclosure(n)
        distance = max(terms[n] - lower, upper - terms[n])
        if distance > half:
            return CheckOutcome(False, False, Violation(n, distance, half), (n_min, n_max), "derangement-e-bound")
    notes = (f"n!/e enclosed with {E_SERIES_EXTRA_TERMS} extra series terms",)
    return CheckOutcome(True, False, None, (n_min, n_max), "derangement-e-bound", notes=notes)


@dataclass(frozen=True)
class HKernelParams:
    """Arguments of h(t, u) with the family ratios p and q."""

    t: Fraction
    u: Fraction
    p: Fraction
    q: Fraction

    def __post_init__(self) -> None:
        """Validate t > 0 and positive ratios."""
        if self.t <= 0:
            raise errors.DocumentValueError("invalid-kernel-t", {"t": str(self.t)})
        if self.p <= 0 or self.q <= 0:
            raise errors.DocumentValueError("invalid-kernel-ratio", {"p": str(self.p), "q": str(self.q)})

    def swapped(self) -> HKernelParams:
        """Parameters of the mirror point: u -> -1 - u with p and q exchanged."""
        return HKernelParams(self.t, -1 - self.u, self.q, self.p)


@dataclass(frozen=True)
class HKernelValue:
    """High precision value of h with an error estimate."""

    params: HKernelParams
    value: Any
    error: Any
    dps: int
    method: str

    def to_json(self) -> dict:
        """Convert the value into a JSON compatible type."""
        return {
            "t": self.params.t,
            "u": self.params.u,
            "p": self.params.p,
            "q": self.params.q,
            "value": mpmath.nstr(self.value, 30),
            "error": mpmath.nstr(self.error, 5),
            "dps": self.dps,
            "method": self.method,
        }


def _direct(ctx: mpmath.MPContext, params: HKernelParams) -> Any:
    t, u, p, q = (ctx.mpf(value.numerator) / value.denominator for value in (params.t, params.u, params.p, params.q))
    # 1/(1 - e^-ct) = -1/expm1(-ct)
    return (
        -1 / ctx.expm1(-t)
        + ctx.exp(-t * p * (u + 1)) / ctx.expm1(-p * t)
        + ctx.exp(u * q * t) / ctx.expm1(-q * t)
    )


def _series(ctx: mpmath.MPContext, params: HKernelParams, terms: int) -> tuple[Any, Any]:
    """Bernoulli expansion e^(x z)/(e^z - 1) = sum B_k(x) z^(k-1)/k!, cancelling the 1/t poles exactly."""
    t, u, p, q = (ctx.mpf(value.numerator) / value.denominator for value in (params.t, params.u, params.p, params.q))
    total = ctx.mpf(0)
    term = ctx.mpf(0)
    for k in range(terms):
        weight = t ** (k - 1) / ctx.factorial(k)
        coefficient = ctx.bernpoly(k, 1) - p ** (k - 1) * ctx.bernpoly(k, -u) - q ** (k - 1) * ctx.bernpoly(k, 1 + u)
        term = coefficient * weight
        total += term
    return total, 2 * abs(term)


def _evaluate_at(params: HKernelParams, dps: int) -> tuple[Any, Any, str]:
    """Value, error estimate and method at a working precision, compared against a guarded re-evaluation."""
    scale = max(Fraction(1), params.p, params.q) * params.t
    use_series = scale < SERIES_CUTOFF
    results = []
    for working_dps in (dps, dps + 20):
        ctx = mpmath.MPContext()
        ctx.dps = working_dps
        if use_series:
            value, truncation = _series(ctx, params, working_dps + 10)
        else:
            value, truncation = _direct(ctx, params), ctx.mpf(0)
        results.append((value, truncation))
    (value, truncation), (reference, _) = results
    error = abs(value - reference) + truncation
    return value, error, "series" if use_series else "direct"


def h_kernel_eval(params: HKernelParams, dps: int | None = None, retries: int | None = None) -> HKernelValue:
    """Evaluate h(t, u) in extended precision, doubling the precision while the error estimate is too large.

    Args:
        params: Evaluation point.
        dps: Starting decimal digits, defaults to RATIOLOG_H_DPS.
        retries: Precision doublings allowed, defaults to RATIOLOG_H_RETRIES.

    Returns:
        Value with its error estimate.

    Raises:
        PrecisionLoss if the error estimate still exceeds half the magnitude after every retry.
    """
    dps = config_utils.H_DPS if dps is None else dps
    retries = config_utils.H_RETRIES if retries is None else retries
    for attempt in range(retries + 1):
        value, error, method = _evaluate_at(params, dps)
        if error <= abs(value) / 2:
            return HKernelValue(params, value, error, dps, method)
        if attempt < retries:
            logger.warning(f"h({params.t}, {params.u}) error estimate too large at {dps} digits, retrying")
            dps *= 2
    raise errors.PrecisionLoss({"t": str(params.t), "u": str(params.u)}, dps)


def h_kernel_grid_check(
    p: Fraction, q: Fraction, grid_t: Sequence[Fraction], grid_u: Sequence[Fraction], dps: int | None = None
) -> CheckOutcome:
    """Sample h > 0 on a grid, counting a point only when the value exceeds its error estimate.

    Args:
        p: Ratio a/b.
        q: Ratio a/bbar, with 1/p + 1/q <= 1.
        grid_t: Positive t values.
        grid_u: u values in [-1, 0].
        dps: Starting precision.

    Returns:
        Outcome scoped as numeric evidence, with the first point that is not clearly positive.
    """
    if not grid_t or not grid_u:
        raise errors.UsageError("h-kernel grids must not be empty")
    if 1 / Fraction(p) + 1 / Fraction(q) > 1:
        raise errors.InvalidFamily("1/p + 1/q <= 1 is required")
    if any(u < -1 or u > 0 for u in grid_u):
        raise errors.InvalidFamily("u values must lie in [-1, 0]")
    points = [HKernelParams(Fraction(t), Fraction(u), Fraction(p), Fraction(q)) for t in grid_t for u in grid_u]
    values = run_ordered([functools.partial(h_kernel_eval, point, dps) for point in points])
    checked = ((points[0].t, points[0].u), (points[-1].t, points[-1].u))
    for item in values:
        if item.value - item.error <= 0:
            violation = Violation((item.params.t, item.params.u), mpmath.nstr(item.value, 20), "0")
            return CheckOutcome(False, True, violation, checked, "h-kernel", SCOPE_NUMERIC, (NUMERIC_EVIDENCE,))
    smallest = min(values, key=lambda item: item.value)
    notes = (
        NUMERIC_EVIDENCE,
        f"{len(values)} points, smallest h = {mpmath.nstr(smallest.value, 12)} at t = {smallest.params.t},"
        f" u = {smallest.params.u}",
    )
    return CheckOutcome(True, True, None, checked, "h-kernel", SCOPE_NUMERIC, notes)


@dataclass(frozen=True)
class OnsetRow:
    """Window-relative derangement onset for one order and anchor."""

    k: int
    anchor: int
    onset: int | None
    analytic_bound: int | None

    @property
    def within_bound(self) -> bool | None:
        """Whether the empirical onset respects the sufficient onset, None when no bound is known."""
        if self.analytic_bound is None:
            return None
        return self.onset is not None and self.onset <= self.analytic_bound

    def to_json(self) -> dict:
        """Convert the row into a JSON compatible type."""
        return {
            "k": self.k,
            "anchor": self.anchor,
            "onset": self.onset,
            "analytic_bound": self.analytic_bound,
            "within_bound": self.within_bound,
        }


def derangement_onset_table(
    k_max: int, horizon: int, anchors: Sequence[int] = DERANGEMENT_ANCHORS
) -> list[OnsetRow]:
    """Onsets of order-k log-monotonicity of the derangement numbers for k = 1 .. k_max from each anchor.

    Raises:
        UsageError if horizon < k_max + 5.
    """
    if horizon < k_max + 5:
        raise errors.UsageError(f"Horizon must be at least k_max + 5 = {k_max + 5}")
    derangement = catalog_lookup("derangement")

    def row(k: int, anchor: int) -> OnsetRow:
        result: OnsetResult = order_onset(derangement, k, horizon, anchor)
        return OnsetRow(k, anchor, result.onset, DERANGEMENT_ONSET_BOUNDS.get(k))

    tasks = [functools.partial(row, k, anchor) for k in range(1, k_max + 1) for anchor in anchors]
    return run_ordered(tasks)
