"""Tests for certificate theorem checks."""

from typing import Callable

import pytest

from ratiolog.common import certify
from ratiolog.common.catalog import catalog_lookup
from ratiolog.common.certify import CertificateCatalog
from ratiolog.common.certify import Verdict
from ratiolog.common.polynomials import IntPoly
from ratiolog.common.ratfuncs import RatFunc
from ratiolog.common.sequences import SequenceDef
from ratiolog.shared import errors

N = RatFunc.variable()


@pytest.mark.parametrize_test_case(
    "test",
    {
        "f": {"args": ["f"], "returns": RatFunc(IntPoly((0, 0, 0, 0, 1, 3, 2)))},
        "f1": {"args": ["f1"], "returns": RatFunc(IntPoly((0, 0, 0, 0, 4, 8, 13, 14, 6, 1)))},
        "f2": {"args": ["f2"], "returns": RatFunc(IntPoly((0, 0, 0, 0, 12, 84, 128, 70, 14)))},
        "f3": {"args": ["f3"], "returns": RatFunc(IntPoly((0, 0, 0, 0, 354, 756, 528, 126)))},
        "unknown": {"args": ["f4"], "raises": errors.UsageError},
    },
)
def test_substitute_bound(test: dict, function_tester: Callable) -> None:
    """Certificate polynomials of a(n) = b(n) = n evaluated at x = n."""
    polys = certify.build_cert_polys(N, N)

    def substitute(which: str) -> RatFunc:
        return certify.substitute_bound(polys, which, N)

    function_tester(test, substitute)


def test_cert_polys_shape() -> None:
    """f has degree 8 in x and each derivative drops one coefficient."""
    polys = certify.build_cert_polys(N, N)
    assert polys.degree == 8
    assert [len(polys.component(name)) for name in certify.POLY_NAMES] == [9, 8, 7, 6]
    assert set(polys.to_json()) == set(certify.POLY_NAMES)


FACTORIAL = SequenceDef.from_json(
    {"name": "factorial", "a": {"num": ["0", "1"]}, "b": {"num": ["0", "1"]}, "initial": ["1", "1"]}
)


def test_domb_certified() -> None:
    """The tightened Domb certificate is certified with a fully proven base check."""
    report = certify.verify_certificate(CertificateCatalog.get("domb"))
    assert report.verdict == Verdict.CERTIFIED, [result.to_json() for result in report.hypotheses]
    assert report.code == errors.EXIT_HOLDS
    assert report.hypothesis("base").status == certify.STATUS_PROVED


@pytest.mark.parametrize("name,base_from", [("derangement", 8), ("motzkin", 8), ("fine", 6), ("franel", 4)])
def test_printed_plus_certificates_refuted(name: str, base_from: int) -> None:
    """Printed plus bounds fail the theorem once taken at n - lag, while the base check skips the known failures."""
    report = certify.verify_certificate(CertificateCatalog.get(name))
    assert report.verdict == Verdict.REFUTED
    assert report.covered_from is None
    assert report.base_checked[0] == base_from
    assert report.hypothesis("base").status == certify.STATUS_PROVED
    failed = [result.name for result in report.hypotheses if result.status == certify.STATUS_REFUTED]
    assert set(failed) <= {"H4", "H6", "H7", "H8"}


def test_derangement_bound_one_step_back() -> None:
    """lambda(n) = n gives z_n / z_{n-1} >= n - 1, which is below a(n) and makes f vanish in its first factor."""
    report = certify.verify_certificate(CertificateCatalog.get("derangement"))
    assert report.hypothesis("H4").status == certify.STATUS_REFUTED
    assert report.hypothesis("H4").witness == 3
    assert report.hypothesis("H6").status == certify.STATUS_REFUTED
    assert report.hypothesis("H6").witness == 3
    assert report.hypothesis("H5").status != certify.STATUS_REFUTED


def test_finite_failure_after_start_never_certified() -> None:
    """Motzkin fails ratio log-convexity at centre 3, so no empty base window lets the theorem claim it."""
    certificate = certify.PlusCertificate(
        "motzkin-no-base", catalog_lookup("motzkin"), RatFunc.from_polys((-8, 27, 54), (0, 36, 18)), 1, base_window=0
    )
    report = certify.verify_certificate(certificate)
    assert report.verdict == Verdict.REFUTED
    assert report.covered_from is None
    witnesses = [report.hypothesis(name).witness for name in ("H4", "H6", "H7", "H8")]
    assert 3 in witnesses


def test_exact_ratio_bound_without_lag() -> None:
    """Factorials have z_n / z_{n-1} = n = a(n) exactly, so lambda(n) = n passes every polynomial hypothesis."""
    report = certify.verify_certificate(certify.PlusCertificate("factorial", FACTORIAL, N, 1, base_window=8, lag=0))
    for name in ("H1", "H2", "H3", "H4", "H6", "H7", "H8", "base"):
        assert report.hypothesis(name).status == certify.STATUS_PROVED, name
    assert report.hypothesis("H4").start == 2
    assert report.verdict != Verdict.REFUTED


def test_lag_moves_hypotheses_to_the_shifted_bound() -> None:
    """The same bound with lag 1 is checked one index later and one step back."""
    report = certify.verify_certificate(certify.PlusCertificate("factorial", FACTORIAL, N, 1, base_window=8, lag=1))
    assert report.hypothesis("H6").start == 3
    assert report.hypothesis("H6").description == "f(lambda(n-1)) > 0"
    assert report.hypothesis("H6").witness == 3
    assert report.verdict == Verdict.REFUTED


def test_domb_printed_bound_refuted() -> None:
    """The printed upper bound fails the sign condition on f at the certificate start."""
    report = certify.verify_certificate(CertificateCatalog.get("domb-printed"))
    assert report.verdict == Verdict.REFUTED
    assert report.code == errors.EXIT_REFUTED
    assert report.hypothesis("iii-f").status == certify.STATUS_REFUTED
    assert report.hypothesis("iii-f").witness == 181
    assert report.covered_from is None


def test_covered_from() -> None:
    """Base check and theorem together cover every centre from the first positive one."""
    report = certify.verify_certificate(CertificateCatalog.get("domb"))
    assert report.covered_from == 2
    assert report.base_checked == (2, 181)


@pytest.mark.parametrize("name,witness", [("derangement", 3), ("motzkin", 3)])
def test_statement_form_is_informational(name: str, witness: int) -> None:
    """The unlagged bound fails early and is only reported."""
    report = certify.verify_certificate(CertificateCatalog.get(name))
    statement = report.hypothesis("statement-form")
    assert statement.status == certify.STATUS_INFORMATIONAL
    assert statement.witness == witness
    assert "statement-form" not in [result.name for result in report.hypotheses if result.status == "refuted"]


def test_hypotheses_in_fixed_order() -> None:
    """Reports list hypotheses in theorem order with the base check last."""
    report = certify.verify_certificate(CertificateCatalog.get("derangement"))
    assert [result.name for result in report.hypotheses] == [
        "H1",
        "H2",
        "H3",
        "H4",
        "H5",
        "statement-form",
        "H6",
        "H7",
        "H8",
        "base",
    ]


def test_plus_theorem_on_negative_b() -> None:
    """The plus theorem refutes sequences with b(n) < 0."""
    certificate = certify.PlusCertificate(
        "domb-plus", catalog_lookup("domb"), RatFunc.constant(15), 1, base_window=4, mode="symbolic"
    )
    report = certify.verify_certificate(certificate)
    assert report.verdict == Verdict.REFUTED
    assert report.hypothesis("H1").status == certify.STATUS_REFUTED


def test_document_round_trip() -> None:
    """Certificate documents survive their JSON form."""
    certificate = certify.Certificate.from_json(
        {"theorem": "plus", "sequence": "derangement", "lambda": {"num": ["0", "1"]}, "N": 1}
    )
    assert isinstance(certificate, certify.PlusCertificate)
    assert certificate.bound == N
    assert certificate.lag == 1
    assert certify.Certificate.from_json(certificate.to_json()) == certificate
    minus = CertificateCatalog.get("domb")
    assert certify.Certificate.from_json(minus.to_json()) == minus
    shipped = CertificateCatalog.get("fine")
    assert certify.Certificate.from_json(shipped.to_json()) == shipped
    assert shipped.to_json()["base_from"] == 6


@pytest.mark.parametrize_test_case(
    "test",
    {
        "start too small": {
            "args": [{"theorem": "plus", "sequence": "derangement", "lambda": "1", "N": 0}],
            "raises": errors.DocumentValueError,
        },
        "unknown theorem": {
            "args": [{"theorem": "zero", "sequence": "derangement", "lambda": "1", "N": 1}],
            "raises": errors.DocumentValueError,
        },
        "closed form sequence": {
            "args": [{"theorem": "plus", "sequence": "catalan", "lambda": "1", "N": 1}],
            "raises": errors.DocumentValueError,
        },
        "missing bound": {
            "args": [{"theorem": "minus", "sequence": "domb", "r": "15", "N": 1}],
            "raises": errors.DocumentValueError,
        },
        "base check past the window": {
            "args": [
                {"theorem": "plus", "sequence": "derangement", "lambda": "1", "N": 1, "base_window": 2, "base_from": 10}
            ],
            "raises": errors.DocumentValueError,
        },
        "negative lag": {
            "args": [{"theorem": "plus", "sequence": "derangement", "lambda": "1", "N": 1, "lag": -1}],
            "raises": errors.DocumentValueError,
        },
        "unknown sequence": {
            "args": [{"theorem": "plus", "sequence": "nope", "lambda": "1", "N": 1}],
            "raises": errors.UnknownSequence,
        },
    },
)
def test_from_json_errors(test: dict, function_tester: Callable) -> None:
    """Invalid certificate documents are rejected."""
    function_tester(test, certify.Certificate.from_json)


def test_catalog_names() -> None:
    """Built-in certificates are registered on first access."""
    assert CertificateCatalog.names() == ["derangement", "domb", "domb-printed", "fine", "franel", "motzkin"]
    with pytest.raises(errors.VerificationError):
        CertificateCatalog.get("nope")


def test_verdict_codes() -> None:
    """Verdicts map onto exit codes."""
    assert Verdict.CERTIFIED.code == 0
    assert Verdict.REFUTED.code == 1
    assert Verdict.INCONCLUSIVE.code == 2
