"""Sequence definitions and exact term generation."""

from __future__ import annotations

import hashlib
import json
import logging
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction
from typing import Any
from typing import Union

from ratiolog.common.rationals import parse_integer
from ratiolog.common.rationals import parse_rational
from ratiolog.common.ratfuncs import RatFunc
from ratiolog.shared import collections
from ratiolog.shared import errors
from ratiolog.shared.responses import format_rational

logger = logging.getLogger(__name__)

KIND_RECURRENCE = "recurrence"
KIND_GAMMA_QUOTIENT = "gamma-quotient"
KIND_EXPLICIT = "explicit"
KINDS = (KIND_RECURRENCE, KIND_GAMMA_QUOTIENT, KIND_EXPLICIT)

MIN_EXPLICIT_TERMS = 5


@dataclass(frozen=True)
class RecurrenceDef:
    """Three-term recurrence z_{n+1} = a(n) z_n + b(n) z_{n-1} with initial terms starting at index offset."""

    a: RatFunc
    b: RatFunc
    initial_terms: tuple[Fraction, ...]
    offset: int = 0

    def __post_init__(self) -> None:
        """Validate the initial terms."""
        if len(self.initial_terms) < 2:
            raise errors.DocumentValueError("too-few-initial-terms", {"given": len(self.initial_terms)})
        object.__setattr__(self, "initial_terms", tuple(Fraction(term) for term in self.initial_terms))

    def to_json(self) -> dict:
        """Document form of the recurrence."""
        return {
            "kind": KIND_RECURRENCE,
            "a": self.a.to_json(),
            "b": self.b.to_json(),
            "initial": [format_rational(term) for term in self.initial_terms],
            "offset": self.offset,
        }


@dataclass(frozen=True)
class GammaQuotientDef:
    """Family C_i = (n0 + i a)! / ((k0 + i b)! (k0bar + i bbar)!) for i >= 0."""

    n0: int
    k0: int
    k0bar: int
    a: int
    b: int
    bbar: int

    def __post_init__(self) -> None:
        """Validate parameter signs."""
        if min(self.n0, self.k0, self.k0bar) < 0:
            raise errors.InvalidFamily("n0, k0, k0bar must be nonnegative")
        if min(self.a, self.b, self.bbar) <= 0:
            raise errors.InvalidFamily("a, b, bbar must be positive")

    @property
    def offset(self) -> int:
        """Index of the first term."""
        return 0

    @property
    def params(self) -> tuple[int, int, int, int, int, int]:
        """Parameters in (n0, k0, k0bar, a, b, bbar) order."""
        return (self.n0, self.k0, self.k0bar, self.a, self.b, self.bbar)

    def to_json(self) -> dict:
        """Document form of the family."""
        return {"kind": KIND_GAMMA_QUOTIENT, "params": list(self.params)}


@dataclass(frozen=True)
class ExplicitDef:
    """Fixed list of terms starting at index offset."""

    terms: tuple[Fraction, ...]
    offset: int = 0

    def __post_init__(self) -> None:
        """Normalize the terms to exact rationals."""
        object.__setattr__(self, "terms", tuple(Fraction(term) for term in self.terms))

    def to_json(self) -> dict:
        """Document form of the term list."""
        return {"kind": KIND_EXPLICIT, "terms": [format_rational(term) for term in self.terms], "offset": self.offset}


SequenceKind = Union[RecurrenceDef, GammaQuotientDef, ExplicitDef]


@dataclass(frozen=True)
class SequenceDef(collections.CollectionEntry):
    """Named sequence with its generating rule.

    Attributes:
        name: Unique catalog name.
        kind: Recurrence, Gamma-quotient family, or explicit terms.
        oeis_id: Optional OEIS identifier such as "A000166".
        oeis_shift: OEIS index minus own index for the same term.
        positive_from: First index from which every term is positive, defaults to the offset.
        description: Short human readable summary.
    """

    name: str
    kind: SequenceKind
    oeis_id: str | None = None
    oeis_shift: int = 0
    positive_from: int | None = None
    description: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        """Validate names and term counts, and fill the positive start."""
        if not self.name:
            raise errors.DocumentValueError("empty-name")
        if isinstance(self.kind, ExplicitDef) and len(self.kind.terms) < MIN_EXPLICIT_TERMS:
            raise errors.DocumentValueError(
                "too-few-explicit-terms", {"needed": MIN_EXPLICIT_TERMS, "given": len(self.kind.terms)}
            )
        if self.positive_from is None:
            object.__setattr__(self, "positive_from", self.kind.offset)

    @property
    def offset(self) -> int:
        """Index of the first term."""
        return self.kind.offset

    @property
    def recurrence(self) -> RecurrenceDef:
        """The recurrence rule, for operations that require one.

        Raises:
            DocumentValueError if the sequence is not defined by a recurrence.
        """
        if not isinstance(self.kind, RecurrenceDef):
            raise errors.DocumentValueError("not-a-recurrence", {"name": self.name})
        return self.kind

    def content_hash(self) -> str:
        """SHA-256 of the canonical generating rule, independent of name and description."""
        canonical = json.dumps(self.kind.to_json(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()

    @classmethod
    def from_json(cls, data: dict) -> SequenceDef:
        """Convert a sequence document into a definition.

        Args:
            data: Mapping following the sequence document schema.

        Returns:
            Instantiated definition.

        Raises:
            DocumentValueError if any value is missing or invalid.
        """
        name = collections.get_and_validate(data, "name", expected_type=str, nullable=False)
        kind_name = collections.get_and_validate(data, "kind", expected_choices=KINDS, default=KIND_RECURRENCE)
        offset = collections.get_and_validate(data, "offset", expected_type=int, default=0, nullable=False)
        kind: SequenceKind
        if kind_name == KIND_RECURRENCE:
            initial = collections.get_and_validate(data, "initial", expected_type=list, nullable=False)
            kind = RecurrenceDef(
                a=RatFunc.from_json(collections.get_and_validate(data, "a", nullable=False)),
                b=RatFunc.from_json(collections.get_and_validate(data, "b", nullable=False)),
                initial_terms=tuple(parse_rational(term) for term in initial),
                offset=offset,
            )
        elif kind_name == KIND_GAMMA_QUOTIENT:
            params = collections.get_and_validate(
                data,
                "params",
                expected_type=list,
                nullable=False,
                validator=lambda value: len(value) == 6,
                validation_message="Expected [n0, k0, k0bar, a, b, bbar]",
            )
            kind = GammaQuotientDef(*(parse_integer(value) for value in params))
        else:
            terms = collections.get_and_validate(data, "terms", expected_type=list, nullable=False)
            kind = ExplicitDef(tuple(parse_rational(term) for term in terms), offset=offset)
        return cls(
            name=name,
            kind=kind,
            oeis_id=collections.get_and_validate(data, "oeis_id", expected_type=str),
            oeis_shift=collections.get_and_validate(data, "oeis_shift", expected_type=int, default=0, nullable=False),
            positive_from=collections.get_and_validate(data, "positive_from", expected_type=int),
            description=collections.get_and_validate(data, "description", expected_type=str, default="") or "",
        )

    def to_json(self) -> dict:
        """Convert the definition into a sequence document."""
        data: dict[str, Any] = {"name": self.name, **self.kind.to_json()}
        if self.oeis_id:
            data["oeis_id"] = self.oeis_id
        if self.oeis_shift:
            data["oeis_shift"] = self.oeis_shift
        data["positive_from"] = self.positive_from
        if self.description:
            data["description"] = self.description
        return data


def generate_terms(
    sequence: SequenceDef,
    count: int,
    assert_integral: bool = False,
    prefix: list[Fraction] | None = None,
) -> list[Fraction]:
    """Generate exact terms for indices offset .. offset + count - 1.

    Args:
        sequence: Definition to generate.
        count: Number of terms, at least 1.
        assert_integral: Whether to fail on any non-integer term.
        prefix: Already known leading terms, continued instead of recomputed.

    Returns:
        The exact terms. Zero terms are allowed.

    Raises:
        CoefficientPole if a recurrence coefficient is undefined where it is applied.
        TooFewTerms if an explicit list is shorter than count.
        NonIntegralTerm if assert_integral is set and a term is a proper fraction.
    """
    if count < 1:
        raise errors.TooFewTerms(1, count)
    kind = sequence.kind
    if isinstance(kind, RecurrenceDef):
        terms = _generate_recurrence(kind, count, list(prefix or ()))
    elif isinstance(kind, GammaQuotientDef):
        terms = _generate_gamma_quotient(kind, count)
    else:
        if count > len(kind.terms):
            raise errors.TooFewTerms(count, len(kind.terms))
        terms = list(kind.terms[:count])
    if assert_integral:
        for position, term in enumerate(terms):
            if term.denominator != 1:
                raise errors.NonIntegralTerm(sequence.offset + position, {"value": format_rational(term)})
    return terms


def _generate_recurrence(kind: RecurrenceDef, count: int, prefix: list[Fraction]) -> list[Fraction]:
    """Iterate the recurrence, continuing from a known prefix when it is long enough."""
    terms = prefix[:count] if len(prefix) >= len(kind.initial_terms) else list(kind.initial_terms[:count])
    while len(terms) < count:
        n = kind.offset + len(terms) - 1
        try:
            a_n = kind.a.evaluate(n)
            b_n = kind.b.evaluate(n)
        except errors.PoleAtPoint as error:
            raise errors.CoefficientPole(n) from error
        terms.append(a_n * terms[-1] + b_n * terms[-2])
    return terms


def _generate_gamma_quotient(kind: GammaQuotientDef, count: int) -> list[Fraction]:
    """Exact factorial quotients, with factorials shared across this call only."""
    last = count - 1
    largest = max(kind.n0 + last * kind.a, kind.k0 + last * kind.b, kind.k0bar + last * kind.bbar)
    factorials = [1] * (largest + 1)
    for value in range(1, largest + 1):
        factorials[value] = factorials[value - 1] * value
    return [
        Fraction(
            factorials[kind.n0 + i * kind.a],
            factorials[kind.k0 + i * kind.b] * factorials[kind.k0bar + i * kind.bbar],
        )
        for i in range(count)
    ]


def terms_between(sequence: SequenceDef, first: int, last: int) -> list[Fraction]:
    """Terms z_first .. z_last inclusive.

    Args:
        sequence: Definition to generate.
        first: First index, at least the offset.
        last: Last index, at least first.

    Returns:
        Exact terms for the closed index range.
    """
    if first < sequence.offset or last < first:
        raise errors.UsageError(f"Invalid index range [{first}, {last}] for {sequence.name}")
    return generate_terms(sequence, last - sequence.offset + 1)[first - sequence.offset :]


def ratio_terms(sequence: SequenceDef, start: int, count: int) -> list[Fraction]:
    """Exact ratios x_n = z_{n+1} / z_n for n = start .. start + count - 1.

    Raises:
        ZeroTerm at the index of the first zero denominator term.
    """
    terms = terms_between(sequence, start, start + count)
    ratios = []
    for position in range(count):
        if not terms[position]:
            raise errors.ZeroTerm(start + position)
        ratios.append(terms[position + 1] / terms[position])
    return ratios
