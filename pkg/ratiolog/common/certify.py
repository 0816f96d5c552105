"""Machine checks of the two ratio log-convexity certificate theorems.

A certificate names a recurrence z_{n+1} = a_n z_n + b_n z_{n-1}, bound functions and a start index N. Every
hypothesis of the matching theorem is reduced to exact positivity of rational functions of n (or to an exact
ratio bound), evaluated without short-circuit, and merged into a report in a fixed order.

Theorem "plus" (b_n > 0) takes a lower bound lambda(n) of the ratios. Theorem "minus" (b_n < 0) takes a lower
bound r(n) and an upper bound s(n). Both rely on the degree 8 polynomial

    f(x) = [(a_{n+1} a_n + b_{n+1}) x + a_{n+1} b_n] (x - a_{n-1}) x^6 - b_{n-1} (a_n x + b_n)^4

whose value at x_n = z_n / z_{n-1} has the sign of z_{n+2} z_{n-2} z_n^6 - z_{n+1}^4 z_{n-1}^4.
"""

from __future__ import annotations

import enum
import logging
import math
import threading
import time
from dataclasses import dataclass
from dataclasses import field
from typing import Any
from typing import Callable
from typing import ClassVar
from typing import Sequence

from ratiolog.common import config_utils
from ratiolog.common.bounds import MODE_AUTO
from ratiolog.common.bounds import MODE_INTERVAL
from ratiolog.common.bounds import MODES
from ratiolog.common.bounds import verify_ratio_lower_bound
from ratiolog.common.bounds import verify_ratio_upper_bound
from ratiolog.common.catalog import catalog_lookup
from ratiolog.common.log_behavior import SCOPE_UNBOUNDED
from ratiolog.common.log_behavior import SCOPE_WINDOW_RELATIVE
from ratiolog.common.log_behavior import CheckOutcome
from ratiolog.common.log_behavior import check_ratio_log_convex
from ratiolog.common.parallel import run_ordered
from ratiolog.common.positivity import prove_ratfunc_positive
from ratiolog.common.ratfuncs import RatFunc
from ratiolog.common.sequences import SequenceDef
from ratiolog.common.sequences import terms_between
from ratiolog.shared import collections
from ratiolog.shared import errors
from ratiolog.shared.responses import json_error

logger = logging.getLogger(__name__)

THEOREM_PLUS = "plus"
THEOREM_MINUS = "minus"
THEOREMS = (THEOREM_PLUS, THEOREM_MINUS)

STATUS_PROVED = "proved"
STATUS_WINDOW = "holds-in-window"
STATUS_REFUTED = "refuted"
STATUS_INCONCLUSIVE = "inconclusive"
STATUS_INFORMATIONAL = "informational"

POLY_NAMES = ("f", "f1", "f2", "f3")


class Verdict(str, enum.Enum):
    """Overall result of a certificate check."""

    CERTIFIED = "Certified"
    REFUTED = "Refuted"
    INCONCLUSIVE = "Inconclusive"

    @property
    def code(self) -> int:
        """CLI exit code for the verdict."""
        return {
            Verdict.CERTIFIED: errors.EXIT_HOLDS,
            Verdict.REFUTED: errors.EXIT_REFUTED,
            Verdict.INCONCLUSIVE: errors.EXIT_INCONCLUSIVE,
        }[self]


@dataclass(frozen=True)
class CertPolySet:
    """f(x) and its first three x-derivatives, each as ascending coefficients in x that are rational in n."""

    f: tuple[RatFunc, ...]
    f1: tuple[RatFunc, ...]
    f2: tuple[RatFunc, ...]
    f3: tuple[RatFunc, ...]

    def component(self, which: str) -> tuple[RatFunc, ...]:
        """Coefficients of f, f1, f2 or f3 by name."""
        if which not in POLY_NAMES:
            raise errors.UsageError(f"Unknown certificate polynomial {which}")
        return getattr(self, which)

    @property
    def degree(self) -> int:
        """Degree of f in x, -1 when f vanishes identically."""
        nonzero = [power for power, coefficient in enumerate(self.f) if not coefficient.is_zero]
        return nonzero[-1] if nonzero else -1

    def to_json(self) -> dict:
        """Convert the set into a JSON compatible type."""
        return {name: [coefficient.to_json() for coefficient in self.component(name)] for name in POLY_NAMES}


def _x_derivative(coefficients: Sequence[RatFunc]) -> tuple[RatFunc, ...]:
    return tuple(coefficients[power] * power for power in range(1, len(coefficients)))


def build_cert_polys(a: RatFunc, b: RatFunc) -> CertPolySet:
    """Expand f(x) exactly for the recurrence coefficients a(n), b(n).

    Args:
        a: Coefficient a(n).
        b: Coefficient b(n).

    Returns:
        f with its formal derivatives f1, f2, f3 in x.
    """
    a_prev, b_prev = a.shift(-1), b.shift(-1)
    a_next, b_next = a.shift(1), b.shift(1)
    lead = a_next * a + b_next
    tail = a_next * b
    coefficients = [RatFunc.constant(0)] * 9
    coefficients[8] = lead
    coefficients[7] = tail - lead * a_prev
    coefficients[6] = -(tail * a_prev)
    for power in range(5):
        coefficients[power] = -(b_prev * math.comb(4, power) * a**power * b ** (4 - power))
    f = tuple(coefficients)
    f1 = _x_derivative(f)
    f2 = _x_derivative(f1)
    return CertPolySet(f, f1, f2, _x_derivative(f2))


def substitute_bound(ps: CertPolySet, which: str, bound: RatFunc) -> RatFunc:
    """Substitute x := bound(n) into f, f1, f2 or f3 by Horner evaluation over rational functions.

    Args:
        ps: Expanded polynomials.
        which: One of "f", "f1", "f2", "f3".
        bound: Rational function of n.

    Returns:
        Canonical rational function of n.
    """
    result = RatFunc.constant(0)
    for coefficient in reversed(ps.component(which)):
        result = result * bound + coefficient
    return result


@dataclass(frozen=True)
class HypothesisResult:
    """One checked hypothesis.

    Attributes:
        name: Short identifier such as "H4" or "iii-f".
        description: Inequality being checked.
        status: proved, holds-in-window, refuted, inconclusive or informational.
        start: First index of the claim.
        evidence: Positivity verdicts or check outcomes, with transcripts and witnesses.
        error: Error envelope when the check stopped early.
    """

    name: str
    description: str
    status: str
    start: int | None
    evidence: tuple[Any, ...] = ()
    error: dict | None = None

    @property
    def witness(self) -> int | None:
        """Smallest failing index recorded in the evidence."""
        for item in self.evidence:
            if getattr(item, "witness", None) is not None:
                return item.witness
            violation = getattr(item, "first_violation", None)
            if violation is not None:
                return violation.index
        if self.error and isinstance(self.error.get("error_data"), dict):
            data = self.error["error_data"]
            return data.get("index", data.get("witness"))
        return None

    def to_json(self) -> dict:
        """Convert the result into a JSON compatible type."""
        return {
            "name": self.name,
            "description": self.description,
            "status": self.status,
            "start": self.start,
            "witness": self.witness,
            "evidence": list(self.evidence),
            "error": self.error,
        }


@dataclass(frozen=True)
class CertificateReport:
    """Structured verdict of a certificate check.

    Attributes:
        certificate: Certificate name.
        theorem: "plus" or "minus".
        verdict: Certified, Refuted or Inconclusive.
        hypotheses: Every hypothesis in fixed order.
        covered_from: First ratio log-convexity centre covered by base check plus theorem, when Certified.
        base_checked: Centre range of the finite base check.
        scope: unbounded, or window-relative when a ratio bound was only propagated over a horizon.
        notes: Extra context.
        elapsed_ms: Wall time of the check.
    """

    certificate: str
    theorem: str
    verdict: Verdict
    hypotheses: tuple[HypothesisResult, ...]
    covered_from: int | None
    base_checked: tuple[int, int]
    scope: str = SCOPE_UNBOUNDED
    notes: tuple[str, ...] = field(default=())
    elapsed_ms: float = field(default=0.0, compare=False)

    @property
    def code(self) -> int:
        """CLI exit code."""
        return self.verdict.code

    def hypothesis(self, name: str) -> HypothesisResult:
        """Find a hypothesis by name."""
        for result in self.hypotheses:
            if result.name == name:
                return result
        raise KeyError(name)

    def to_json(self) -> dict:
        """Convert the report into a JSON compatible type, timing excluded so identical inputs match."""
        return {
            "certificate": self.certificate,
            "theorem": self.theorem,
            "verdict": self.verdict.value,
            "hypotheses": list(self.hypotheses),
            "covered_from": self.covered_from,
            "base_checked": list(self.base_checked),
            "scope": self.scope,
            "notes": list(self.notes),
        }


class Certificate(collections.CollectionEntry):
    """Base for certificate documents, dispatching on the theorem name."""

    theorem: ClassVar[str]
    name: str
    sequence: SequenceDef
    start: int
    base_window: int
    mode: str
    base_from: int | None

    @classmethod
    def from_json(cls, data: dict) -> Certificate:
        """Convert a certificate document into a certificate.

        Args:
            data: Mapping with "sequence" (catalog name or inline definition), "theorem", the bound functions,
                "N" and optionally "base_window", "base_from", "lag", "mode" and "name".

        Returns:
            PlusCertificate or MinusCertificate.

        Raises:
            DocumentValueError if any value is missing or invalid.
        """
        theorem = collections.get_and_validate(data, "theorem", expected_choices=THEOREMS, nullable=False)
        raw_sequence = collections.get_and_validate(data, "sequence", expected_type=(str, dict), nullable=False)
        if isinstance(raw_sequence, str):
            sequence = catalog_lookup(raw_sequence)
        else:
            sequence = SequenceDef.from_json(raw_sequence)
        common: dict[str, Any] = {
            "name": collections.get_and_validate(data, "name", expected_type=str, default=sequence.name),
            "sequence": sequence,
            "start": collections.get_and_validate(data, "N", expected_type=int, nullable=False),
            "base_window": collections.get_and_validate(
                data, "base_window", expected_type=int, default=config_utils.BASE_WINDOW, nullable=False
            ),
            "mode": collections.get_and_validate(data, "mode", expected_choices=MODES, default=MODE_AUTO),
            "base_from": collections.get_and_validate(data, "base_from", expected_type=int),
        }
        if theorem == THEOREM_PLUS:
            return PlusCertificate(
                bound=RatFunc.from_json(collections.get_and_validate(data, "lambda", nullable=False)),
                lag=collections.get_and_validate(data, "lag", expected_type=int, default=1, nullable=False),
                **common,
            )
        return MinusCertificate(
            lower=RatFunc.from_json(collections.get_and_validate(data, "r", nullable=False)),
            upper=RatFunc.from_json(collections.get_and_validate(data, "s", nullable=False)),
            **common,
        )

    def _validate(self) -> None:
        self.sequence.recurrence  # pylint: disable=pointless-statement
        if self.start < self.sequence.offset + 1:
            raise errors.DocumentValueError(
                "start-before-offset", {"N": self.start, "minimum": self.sequence.offset + 1}
            )
        if self.base_window < 0:
            raise errors.DocumentValueError("negative-base-window", {"base_window": self.base_window})
        if self.base_from is not None and self.base_from > self.start + self.base_window:
            raise errors.DocumentValueError(
                "base-from-after-window", {"base_from": self.base_from, "last": self.start + self.base_window}
            )
        if self.mode not in MODES:
            raise errors.DocumentValueError("invalid-choice", {"key": "mode", "value": self.mode})

    def _json_common(self) -> dict:
        return {
            "name": self.name,
            "theorem": self.theorem,
            "sequence": self.sequence.to_json(),
            "N": self.start,
            "base_window": self.base_window,
            "mode": self.mode,
            "base_from": self.base_from,
        }

    def to_json(self) -> dict:
        """Convert the certificate into a certificate document."""
        return self._json_common()


@dataclass(frozen=True)
class PlusCertificate(Certificate):
    """Certificate for b_n > 0 with ratio lower bound lambda(n).

    lag selects the indexing of the bound: z_{n+lag} / z_{n+lag-1} >= lambda(n) for n >= N + 1. The theorem then
    runs on mu(n) = lambda(n - lag), the bound it gives for z_n / z_{n-1}, from n = N + 1 + lag.
    """

    theorem: ClassVar[str] = THEOREM_PLUS

    name: str
    sequence: SequenceDef
    bound: RatFunc
    start: int
    base_window: int = config_utils.BASE_WINDOW
    lag: int = 1
    mode: str = MODE_AUTO
    base_from: int | None = None

    def __post_init__(self) -> None:
        """Validate the document invariants."""
        self._validate()
        if self.lag < 0:
            raise errors.DocumentValueError("negative-lag", {"lag": self.lag})

    def to_json(self) -> dict:
        """Convert the certificate into a certificate document."""
        return {**self._json_common(), "lambda": self.bound.to_json(), "lag": self.lag}


@dataclass(frozen=True)
class MinusCertificate(Certificate):
    """Certificate for b_n < 0 with ratio bounds r(n) <= z_n / z_{n-1} <= s(n)."""

    theorem: ClassVar[str] = THEOREM_MINUS

    name: str
    sequence: SequenceDef
    lower: RatFunc
    upper: RatFunc
    start: int
    base_window: int = config_utils.BASE_WINDOW
    mode: str = MODE_AUTO
    base_from: int | None = None

    def __post_init__(self) -> None:
        """Validate the document invariants."""
        self._validate()

    def to_json(self) -> dict:
        """Convert the certificate into a certificate document."""
        return {**self._json_common(), "r": self.lower.to_json(), "s": self.upper.to_json()}


Task = Callable[[], HypothesisResult]


def _guarded(name: str, description: str, start: int | None, run: Task, informational: bool = False) -> Task:
    """Record raised errors as a result instead of propagating them."""

    def task() -> HypothesisResult:
        try:
            result = run()
        except (errors.VerificationError, ArithmeticError) as error:
            if informational:
                status = STATUS_INFORMATIONAL
            elif isinstance(error, errors.VerificationError) and error.code == errors.EXIT_REFUTED:
                status = STATUS_REFUTED
            else:
                status = STATUS_INCONCLUSIVE
            logger.debug(f"Hypothesis {name} stopped: {error}")
            return HypothesisResult(name, description, status, start, (), json_error(error))
        logger.debug(f"Hypothesis {name}: {result.status}")
        return result

    return task


def _positivity(
    name: str, description: str, start: int, build: Callable[[], Sequence[tuple[RatFunc, bool]]]
) -> Task:
    """Hypothesis made of one or more positivity claims (function, strict) for n >= start."""

    def run() -> HypothesisResult:
        verdicts = tuple(prove_ratfunc_positive(function, start, strict) for function, strict in build())
        status = STATUS_PROVED if all(verdict.positive for verdict in verdicts) else STATUS_REFUTED
        return HypothesisResult(name, description, status, start, verdicts)

    return _guarded(name, description, start, run)


def _outcome(
    name: str, description: str, start: int, check: Callable[[], CheckOutcome], informational: bool = False
) -> Task:
    """Hypothesis made of a ratio bound or finite check outcome."""

    def run() -> HypothesisResult:
        outcome = check()
        if informational:
            status = STATUS_INFORMATIONAL
        elif not outcome.holds:
            status = STATUS_REFUTED
        elif outcome.scope == SCOPE_WINDOW_RELATIVE:
            status = STATUS_WINDOW
        else:
            status = STATUS_PROVED
        return HypothesisResult(name, description, status, start, (outcome,))

    return _guarded(name, description, start, run, informational)


def base_check_range(certificate: Certificate) -> tuple[int, int]:
    """Centres checked exactly, from the first centre with positive neighbours up to N + base_window.

    A base_from past that first centre moves the start of the check.
    """
    sequence = certificate.sequence
    first = max(sequence.offset, sequence.positive_from or 0) + 2
    if certificate.base_from is not None:
        first = max(first, certificate.base_from)
    return first, certificate.start + certificate.base_window


def _base_check(certificate: Certificate) -> CheckOutcome:
    first, last = base_check_range(certificate)
    if last < first:
        return CheckOutcome(True, True, None, (first, last), "ratio-log-convex", notes=("empty base window",))
    terms = terms_between(certificate.sequence, first - 2, last + 2)
    return check_ratio_log_convex(terms, strict=True, start=first - 2)


def _first_index(sequence: SequenceDef) -> int:
    return max(1, sequence.offset + 1)


def _plus_tasks(certificate: PlusCertificate) -> list[Task]:
    sequence = certificate.sequence
    a, b = sequence.recurrence.a, sequence.recurrence.b
    bound = certificate.bound
    first = _first_index(sequence)
    after = certificate.start + 1
    lag = certificate.lag
    # z_n / z_{n-1} >= mu(n) only holds from after + lag.
    mu = bound.shift(-lag)
    mu_from = after + lag
    mu_text = f"lambda(n-{lag})" if lag else "lambda(n)"
    polys = build_cert_polys(a, b)
    statement_start = max(after, (sequence.positive_from or sequence.offset) + 1)
    tasks = [
        _positivity("H1", "b(n+1) >= b(n) > 0", first, lambda: [(b.shift(1) - b, False), (b, True)]),
        _positivity("H2", "a(n+1) >= a(n) > 0", first, lambda: [(a.shift(1) - a, False), (a, True)]),
        _positivity(
            "H3",
            "21 a(n)^2 + 11 a(n+1) a(n) - 4 b(n-1) >= 0",
            first,
            lambda: [(a * a * 21 + a.shift(1) * a * 11 - b.shift(-1) * 4, False)],
        ),
        _positivity("H4", f"{mu_text} >= a(n)", mu_from, lambda: [(mu - a, False)]),
        _outcome(
            "H5",
            f"z(n)/z(n-1) >= {mu_text}",
            mu_from,
            lambda: verify_ratio_lower_bound(sequence, mu, mu_from, certificate.mode, certificate.base_window),
        ),
    ]
    if lag:
        tasks.append(
            _outcome(
                "statement-form",
                "z(n)/z(n-1) >= lambda(n)",
                statement_start,
                lambda: verify_ratio_lower_bound(sequence, bound, statement_start, MODE_INTERVAL),
                informational=True,
            )
        )
    for name, which, label in (("H6", "f", "f"), ("H7", "f1", "f'"), ("H8", "f2", "f''")):
        tasks.append(
            _positivity(
                name,
                f"{label}({mu_text}) > 0",
                mu_from,
                lambda which=which: [(substitute_bound(polys, which, mu), True)],  # type: ignore[misc]
            )
        )
    return tasks


def _minus_tasks(certificate: MinusCertificate) -> list[Task]:
    sequence = certificate.sequence
    a, b = sequence.recurrence.a, sequence.recurrence.b
    r, s = certificate.lower, certificate.upper
    first = _first_index(sequence)
    start = certificate.start
    lead = a.shift(1) * a + b.shift(1)
    polys = build_cert_polys(a, b)

    def growth() -> list[tuple[RatFunc, bool]]:
        mixed = a.shift(1) * b - a.shift(-1) * a.shift(1) * a - a.shift(-1) * b.shift(1)
        return [(lead * r * 8 + mixed * 5, False), (a * r + b, False)]

    return [
        _positivity("b-negative", "b(n) < 0", first, lambda: [(-b, True)]),
        _positivity("lead-positive", "a(n+1) a(n) + b(n+1) > 0", first, lambda: [(lead, True)]),
        _positivity("a-positive", "a(n) > 0", first, lambda: [(a, True)]),
        _outcome(
            "i-lower",
            "z(n)/z(n-1) >= r(n)",
            start,
            lambda: verify_ratio_lower_bound(sequence, r, start, certificate.mode, certificate.base_window),
        ),
        _outcome(
            "i-upper", "z(n)/z(n-1) < s(n)", start, lambda: verify_ratio_upper_bound(sequence, s, start, lower=r)
        ),
        _positivity("i-order", "s(n) <= a(n)", start, lambda: [(a - s, False)]),
        _positivity(
            "ii",
            "8 (a(n+1) a(n) + b(n+1)) r(n) + 5 (a(n+1) b(n) - a(n-1) a(n+1) a(n) - a(n-1) b(n+1)) >= 0"
            " and a(n) r(n) + b(n) >= 0",
            min(first, start),
            growth,
        ),
        _positivity("iii-f2", "f''(r(n)) > 0", start, lambda: [(substitute_bound(polys, "f2", r), True)]),
        _positivity("iii-f1", "f'(r(n)) > 0", start, lambda: [(substitute_bound(polys, "f1", r), True)]),
        _positivity("iii-f", "f(s(n)) < 0", start, lambda: [(-substitute_bound(polys, "f", s), True)]),
    ]


def _verify(certificate: Certificate, tasks: list[Task], theorem_from: int) -> CertificateReport:
    began = time.monotonic()
    logger.info(f"Verifying {certificate.theorem} certificate {certificate.name}")
    first, last = base_check_range(certificate)
    tasks.append(_outcome("base", "ratio log-convexity on the base window", first, lambda: _base_check(certificate)))
    hypotheses = tuple(run_ordered(tasks))
    statuses = [result.status for result in hypotheses if result.status != STATUS_INFORMATIONAL]
    if STATUS_REFUTED in statuses:
        verdict = Verdict.REFUTED
    elif STATUS_INCONCLUSIVE in statuses:
        verdict = Verdict.INCONCLUSIVE
    else:
        verdict = Verdict.CERTIFIED
    notes = []
    covered_from = None
    if verdict == Verdict.CERTIFIED:
        if theorem_from <= last + 1:
            covered_from = first
        else:
            covered_from = theorem_from
            notes.append(f"centres {last + 1} .. {theorem_from - 1} are covered by neither base check nor theorem")
    scope = SCOPE_WINDOW_RELATIVE if STATUS_WINDOW in statuses else SCOPE_UNBOUNDED
    if scope == SCOPE_WINDOW_RELATIVE:
        notes.append("a ratio bound holds over the propagation horizon only")
    elapsed_ms = (time.monotonic() - began) * 1000
    logger.info(f"Certificate {certificate.name}: {verdict.value} in {elapsed_ms:.0f} ms")
    return CertificateReport(
        certificate.name,
        certificate.theorem,
        verdict,
        hypotheses,
        covered_from,
        (first, last),
        scope,
        tuple(notes),
        elapsed_ms,
    )


def verify_theorem_plus(certificate: PlusCertificate) -> CertificateReport:
    """Check every hypothesis of the b_n > 0 theorem plus the finite base window.

    Failures are recorded in the report, never raised.

    Args:
        certificate: Sequence, lambda, N, base window and lag.

    Returns:
        Report whose Certified verdict means the ratio sequence is ratio log-convex from the covered centre.
    """
    return _verify(certificate, _plus_tasks(certificate), certificate.start + 1 + certificate.lag)


def verify_theorem_minus(certificate: MinusCertificate) -> CertificateReport:
    """Check every hypothesis of the b_n < 0 theorem plus the finite base window.

    Args:
        certificate: Sequence, r, s, N and base window.

    Returns:
        Report with one entry per hypothesis in fixed order.
    """
    return _verify(certificate, _minus_tasks(certificate), certificate.start)


def verify_certificate(certificate: Certificate) -> CertificateReport:
    """Dispatch to the theorem named by the certificate."""
    if isinstance(certificate, PlusCertificate):
        return verify_theorem_plus(certificate)
    if isinstance(certificate, MinusCertificate):
        return verify_theorem_minus(certificate)
    raise errors.UsageError(f"Unsupported certificate type {type(certificate).__name__}")


def builtin_certificates() -> list[Certificate]:
    """Certificates shipped with the catalog.

    The plus certificates carry the printed ratio bounds. Their base checks start past the centres where the
    sequences are not ratio log-convex (derangements 5 and 7, Motzkin 3, 5 and 7, Fine 5, Franel 3).
    Taken at mu(n) = lambda(n - lag), these bounds fail the theorem hypotheses, so the plus certificates are
    reported Refuted. The Domb certificate is Certified.
    """
    domb = catalog_lookup("domb")
    return [
        PlusCertificate("derangement", catalog_lookup("derangement"), RatFunc.variable(), 1, base_from=8),
        PlusCertificate(
            "motzkin", catalog_lookup("motzkin"), RatFunc.from_polys((-8, 27, 54), (0, 36, 18)), 1, base_from=8
        ),
        PlusCertificate("fine", catalog_lookup("fine"), RatFunc.from_polys((6, 4), (3, 1)), 1, lag=2, base_from=6),
        PlusCertificate("franel", catalog_lookup("franel"), RatFunc.from_polys((1, 8, 8), (1, 2, 1)), 1, base_from=4),
        MinusCertificate(
            "domb", domb, RatFunc.constant(15), RatFunc.from_polys((-6, 12, -24, 16), (0, 0, 0, 1)), 181, 0
        ),
        MinusCertificate(
            "domb-printed", domb, RatFunc.constant(15), RatFunc.from_polys((-2, 12, -24, 16), (0, 0, 0, 1)), 181, 0
        ),
    ]


class CertificateCatalog(collections.Collection):
    """Registry of named certificates."""

    _collection: dict[str, Certificate] = {}
    _collection_lock = threading.RLock()
    _collection_uri = None

    collection_help = "certificates"
    entry_cls = Certificate

    @classmethod
    def post_load(cls) -> None:
        """Register the built-in certificates."""
        with cls._collection_lock:
            if "domb" in cls._collection:
                return
            for certificate in builtin_certificates():
                cls.register(certificate)
