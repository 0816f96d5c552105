"""Property based checks of the exact checkers against independent oracles."""

from fractions import Fraction

import sympy
from hypothesis import assume
from hypothesis import given
from hypothesis import settings
from hypothesis.strategies import booleans
from hypothesis.strategies import composite
from hypothesis.strategies import integers
from hypothesis.strategies import lists
from hypothesis.strategies import one_of
from hypothesis.strategies import text

from ratiolog.common import log_behavior
from ratiolog.common.bfiles import parse_bfile
from ratiolog.common.bounds import exact_ratios
from ratiolog.common.bounds import propagate_ratio_bounds
from ratiolog.common.polynomials import IntPoly
from ratiolog.common.positivity import PositivityStatus
from ratiolog.common.positivity import prove_positive_on_integers
from ratiolog.common.positivity import sturm_distinct_roots_geq
from ratiolog.common.ratfuncs import RatFunc
from ratiolog.common.sequences import RecurrenceDef
from ratiolog.common.sequences import SequenceDef
from ratiolog.shared import errors

SYMBOL = sympy.Symbol("n")


@composite
def polynomials(draw, max_degree=4, bound=20):
    coefficients = draw(lists(integers(-bound, bound), min_size=1, max_size=max_degree + 1))
    poly = IntPoly(tuple(coefficients))
    assume(not poly.is_zero)
    return poly


@composite
def positive_terms(draw):
    values = draw(lists(integers(1, 60), min_size=5, max_size=12))
    return [Fraction(value) for value in values]


@composite
def linear_recurrences(draw):
    a = RatFunc.from_polys((draw(integers(1, 5)), draw(integers(0, 5))))
    b = RatFunc.from_polys((draw(integers(1, 5)), draw(integers(0, 5))))
    return SequenceDef("linear", RecurrenceDef(a, b, (1, draw(integers(1, 9)))))


@given(positive_terms())
@settings(deadline=None)
def test_ratio_log_convex_matches_double_ratio(terms: list[Fraction]) -> None:
    """The direct inequality agrees with log-convexity of the second ratio sequence."""
    direct = log_behavior.check_ratio_log_convex(terms, strict=True)
    twice = log_behavior.check_log_convex(log_behavior.apply_R(log_behavior.apply_R(terms)), strict=True)
    assert direct.holds == twice.holds
    if not direct.holds:
        assert direct.first_violation.index == twice.first_violation.index + 1


@given(polynomials(), integers(0, 15), booleans())
@settings(deadline=None)
def test_positivity_matches_scan(poly: IntPoly, start: int, strict: bool) -> None:
    """The proof agrees with an exhaustive scan past every real root."""
    limit = max(start, poly.cauchy_bound()) + 2
    failures = [n for n in range(start, limit + 1) if poly.evaluate(n) < 0 or (strict and poly.evaluate(n) == 0)]
    verdict = prove_positive_on_integers(poly, start, strict)
    if failures:
        assert verdict.status == PositivityStatus.NOT_POSITIVE
        assert verdict.witness == failures[0]
    else:
        assert verdict.positive


@given(polynomials(max_degree=5), integers(-10, 10))
@settings(deadline=None)
def test_sturm_count_matches_sympy(poly: IntPoly, x0: int) -> None:
    """Distinct real roots at or above x0 match an independent root finder."""
    roots = set(sympy.real_roots(sympy.Poly(list(reversed(poly.coefficients)), SYMBOL)))
    expected = sum(1 for root in roots if bool(root >= x0))
    assert sturm_distinct_roots_geq(poly, x0) == expected


@given(linear_recurrences(), integers(1, 6))
@settings(deadline=None)
def test_propagated_brackets_contain_ratios(sequence: SequenceDef, width: int) -> None:
    """Widened starting brackets keep enclosing the exact ratios."""
    exact = exact_ratios(sequence, 1, 12)
    bracket = (exact[1] / (width + 1), exact[1] * (width + 1))
    for item in propagate_ratio_bounds(sequence, 1, 12, bracket):
        assert item.lower <= exact[item.index] <= item.upper


@given(
    one_of(
        text(),
        text(alphabet="0123456789 -#\t\nx", max_size=200),
        text(max_size=50).map(lambda value: value.encode("utf-8")),
    )
)
@settings(deadline=None)
def test_bfile_parser_errors(data: str | bytes) -> None:
    """Arbitrary input parses or fails with a located error."""
    try:
        bfile = parse_bfile(data)
    except (errors.MalformedLine, errors.NonMonotoneIndex) as error:
        assert error.index >= 1
    else:
        indices = [index for index, _ in bfile.entries]
        assert indices == sorted(set(indices))
