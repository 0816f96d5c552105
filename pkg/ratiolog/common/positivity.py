"""Complete positivity proofs for integer polynomials over integer half-lines.

A polynomial is proven positive at every integer n >= N in one of two ways:

    - Shifted coefficients: expand p(m + N) in m. If no coefficient is negative and the constant term is positive,
      every value at m >= 0 is positive.
    - Sturm: isolate every real root > N into an interval of width at most one using Sturm sign variations, then
      evaluate p exactly at N, at N + 1 and at the integers around each interval. The sign of p cannot change between
      consecutive candidates, so the candidates decide every integer >= N, and the smallest failing candidate is
      the smallest failing integer.
"""

from __future__ import annotations

import enum
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from ratiolog.common.polynomials import IntPoly
from ratiolog.common.ratfuncs import RatFunc
from ratiolog.common.rationals import sign
from ratiolog.shared import errors

logger = logging.getLogger(__name__)


class PositivityStatus(str, enum.Enum):
    """How a positivity question was settled."""

    POSITIVE_BY_SHIFTED_COEFFICIENTS = "PositiveByShiftedCoefficients"
    POSITIVE_BY_STURM = "PositiveBySturm"
    NOT_POSITIVE = "NotPositive"


@dataclass(frozen=True)
class PositivityVerdict:
    """Outcome of a positivity proof with a readable transcript.

    Attributes:
        status: Method that proved positivity, or NotPositive.
        start: First integer N of the half-line.
        strict: Whether p(n) > 0 (True) or p(n) >= 0 (False) was asked.
        witness: Smallest integer n >= N violating the inequality, only set when NotPositive.
        transcript: Proof steps in order.
    """

    status: PositivityStatus
    start: int
    strict: bool = True
    witness: int | None = None
    transcript: tuple[str, ...] = ()

    @property
    def positive(self) -> bool:
        """Whether the inequality was proven for every integer >= start."""
        return self.status != PositivityStatus.NOT_POSITIVE

    def to_json(self) -> dict:
        """Convert the verdict into a JSON compatible type."""
        return {
            "status": self.status.value,
            "start": self.start,
            "strict": self.strict,
            "witness": self.witness,
            "transcript": list(self.transcript),
        }


def sturm_chain(p: IntPoly) -> tuple[IntPoly, ...]:
    """Sturm chain of the square-free part of p.

    Each member is the negated pseudo-remainder of the two previous members, scaled by a positive factor and
    stripped of its content, so sign variations are unchanged while coefficients stay small.

    Args:
        p: Nonzero polynomial.

    Returns:
        The chain, starting with the square-free part of p.
    """
    first = p.squarefree()
    chain = [first]
    if first.degree < 1:
        return tuple(chain)
    chain.append(first.derivative().primitive())
    while chain[-1].degree > 0:
        previous, current = chain[-2], chain[-1]
        remainder = previous.pseudo_remainder(current)
        # prem multiplies by lc^(delta + 1); undo a negative factor so the sign matches the true remainder.
        if current.leading < 0 and (previous.degree - current.degree + 1) % 2:
            remainder = -remainder
        if remainder.is_zero:
            break
        chain.append((-remainder).primitive())
    return tuple(chain)


def sign_variations(chain: tuple[IntPoly, ...], point: int | Fraction) -> int:
    """Number of sign changes along the chain evaluated at a point, zeros skipped."""
    return _count_changes(member.sign_at(point) for member in chain)


def sign_variations_at_infinity(chain: tuple[IntPoly, ...]) -> int:
    """Number of sign changes of the leading coefficients."""
    return _count_changes(sign(member.leading) for member in chain)


def _count_changes(signs: Iterable[int]) -> int:
    changes = 0
    last = 0
    for value in signs:
        if value:
            if last and value != last:
                changes += 1
            last = value
    return changes


def sturm_distinct_roots_geq(p: IntPoly, x0: int | Fraction) -> int:
    """Count the distinct real roots of p in [x0, infinity).

    Args:
        p: Nonzero polynomial.
        x0: Lower end of the half-line, included.

    Returns:
        Exact number of distinct real roots >= x0.

    Raises:
        ZeroPolynomial if p is zero.
    """
    if p.is_zero:
        raise errors.ZeroPolynomial()
    chain = sturm_chain(p)
    at_root = 1 if p.sign_at(x0) == 0 else 0
    return at_root + sign_variations(chain, x0) - sign_variations_at_infinity(chain)


def isolate_roots_above(p: IntPoly, x0: int) -> list[tuple[Fraction, Fraction]]:
    """Isolate the distinct real roots of p in (x0, infinity).

    Args:
        p: Nonzero polynomial.
        x0: Integer lower end of the search, excluded.

    Returns:
        Disjoint intervals (lo, hi], sorted, each holding exactly one root and of width at most 1.
    """
    if p.degree < 1:
        return []
    chain = sturm_chain(p)
    bound = p.cauchy_bound()
    if bound <= x0:
        return []
    cache: dict[Fraction, int] = {}

    def variations(point: Fraction) -> int:
        if point not in cache:
            cache[point] = sign_variations(chain, point)
        return cache[point]

    intervals = []
    work = [(Fraction(x0), Fraction(bound))]
    while work:
        low, high = work.pop()
        count = variations(low) - variations(high)
        if count == 0:
            continue
        if count == 1 and high - low <= 1:
            intervals.append((low, high))
            continue
        middle = (low + high) / 2
        work.append((middle, high))
        work.append((low, middle))
    intervals.sort()
    return intervals


def prove_positive_on_integers(p: IntPoly, start: int, strict: bool = True) -> PositivityVerdict:
    """Decide whether p(n) > 0 (or >= 0 when not strict) for every integer n >= start.

    Args:
        p: Polynomial to check.
        start: First integer N of the half-line.
        strict: Whether to require strict positivity.

    Returns:
        Verdict with its proof transcript, or the smallest failing integer as witness.

    Raises:
        ZeroPolynomial if p is zero and strict positivity is asked.
    """
    if p.is_zero:
        if strict:
            raise errors.ZeroPolynomial()
        return PositivityVerdict(
            PositivityStatus.POSITIVE_BY_SHIFTED_COEFFICIENTS, start, strict, transcript=("identically zero",)
        )
    relation = ">" if strict else ">="
    shifted = p.shift(start)
    negatives = sum(1 for value in shifted.coefficients if value < 0)
    transcript = [f"p(m + {start}) has degree {shifted.degree} and {negatives} negative coefficient(s)"]
    if all(value >= 0 for value in shifted.coefficients) and (not strict or shifted.coefficients[0] > 0):
        transcript.append(f"all shifted coefficients are >= 0, so p(n) {relation} 0 for n >= {start}")
        return PositivityVerdict(
            PositivityStatus.POSITIVE_BY_SHIFTED_COEFFICIENTS, start, strict, None, tuple(transcript)
        )

    intervals = isolate_roots_above(p, start)
    transcript.append(f"{len(intervals)} distinct real root(s) in ({start}, {p.cauchy_bound()}]")
    # A root at start itself is invisible to the isolation, so start + 1 samples the stretch right after it.
    candidates = {start, start + 1}
    for low, high in intervals:
        transcript.append(f"root in ({low}, {high}]")
        candidates.update(range(max(start, math.floor(low)), math.ceil(high) + 2))
    for candidate in sorted(candidates):
        value = p.sign_at(candidate)
        if value < 0 or (strict and value == 0):
            transcript.append(f"p({candidate}) {'<=' if strict else '<'} 0")
            logger.debug(f"Positivity fails at {candidate} for polynomial of degree {p.degree}")
            return PositivityVerdict(PositivityStatus.NOT_POSITIVE, start, strict, candidate, tuple(transcript))
    transcript.append(f"p {relation} 0 at candidate integers {_summarize(sorted(candidates))}")
    return PositivityVerdict(PositivityStatus.POSITIVE_BY_STURM, start, strict, None, tuple(transcript))


def prove_ratfunc_positive(r: RatFunc, start: int, strict: bool = True) -> PositivityVerdict:
    """Decide whether r(n) > 0 (or >= 0) for every integer n >= start, treating poles as failures.

    Args:
        r: Rational function to check.
        start: First integer N of the half-line.
        strict: Whether to require strict positivity.

    Returns:
        Verdict on the numerator when the denominator is proven positive, otherwise on num * den.
    """
    if r.is_zero:
        if strict:
            return PositivityVerdict(PositivityStatus.NOT_POSITIVE, start, strict, start, ("identically zero",))
        return PositivityVerdict(
            PositivityStatus.POSITIVE_BY_SHIFTED_COEFFICIENTS, start, strict, transcript=("identically zero",)
        )
    denominator = prove_positive_on_integers(r.den, start, strict=True)
    if denominator.positive:
        verdict = prove_positive_on_integers(r.num, start, strict=strict)
        return _with_prefix(verdict, f"denominator {r.den} > 0 for n >= {start}")
    nonzero = prove_positive_on_integers(r.den * r.den, start, strict=True)
    if not nonzero.positive:
        return PositivityVerdict(
            PositivityStatus.NOT_POSITIVE,
            start,
            strict,
            nonzero.witness,
            (f"denominator {r.den} vanishes at n = {nonzero.witness}",),
        )
    verdict = prove_positive_on_integers(r.cleared(), start, strict=strict)
    return _with_prefix(verdict, "denominator sign varies, proving num * den instead")


def _with_prefix(verdict: PositivityVerdict, step: str) -> PositivityVerdict:
    return PositivityVerdict(
        verdict.status, verdict.start, verdict.strict, verdict.witness, (step,) + verdict.transcript
    )


def _summarize(values: list[int]) -> str:
    """Short list rendering for transcripts."""
    if len(values) <= 8:
        return str(values)
    return f"[{values[0]}, {values[1]}, ..., {values[-1]}] ({len(values)} values)"
