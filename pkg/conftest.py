"""Shared pytest fixtures and the table driven parametrize marker."""

from typing import Any
from typing import Callable
from typing import Iterator

import pytest

from ratiolog.common.catalog import SequenceCatalog
from ratiolog.common.certify import CertificateCatalog

OUTCOME_KEYS = ("returns", "raises", "attributes")


@pytest.fixture(autouse=True)
def reset_catalogs() -> Iterator[None]:
    """Start and end every test with only the built-in catalog entries."""
    SequenceCatalog.teardown()
    CertificateCatalog.teardown()
    yield
    SequenceCatalog.teardown()
    CertificateCatalog.teardown()


def _run_case(test: dict, func: Callable, compare: Callable[[Any, Any], bool] | None = None) -> None:
    """Call func with the case arguments and check the declared outcome.

    A case holds optional "args" and "kwargs", plus exactly one outcome key:
        - "returns": value compared with the result.
        - "raises": exception type the call must raise.
        - "attributes": mapping of attribute names to expected values on the result.

    Args:
        test: Case mapping.
        func: Callable under test. Use the class itself to check construction.
        compare: Equality used for returns and attributes, "==" by default.
    """
    declared = [key for key in OUTCOME_KEYS if key in test]
    if len(declared) != 1:
        raise ValueError(f"Test case must declare exactly one of {', '.join(OUTCOME_KEYS)}, found {declared}")
    args, kwargs = test.get("args", []), test.get("kwargs", {})
    equal = compare or (lambda actual, expected: actual == expected)

    if "raises" in test:
        with pytest.raises(test["raises"]):
            func(*args, **kwargs)
        return
    result = func(*args, **kwargs)
    if "attributes" in test:
        expected = test["attributes"]
        if not expected:
            raise ValueError("Test case attributes must not be empty")
        actual = {name: getattr(result, name) for name in expected}
    else:
        expected, actual = test["returns"], result
    assert equal(actual, expected), f"\nResult:\n\t{actual}\nExpected:\n\t{expected}"


@pytest.fixture
def function_tester() -> Callable:
    """Runner for table driven cases, see _run_case."""
    return _run_case


def pytest_generate_tests(metafunc: pytest.Metafunc) -> None:
    """Expand parametrize_test_case marks: dict keys become test ids, dict values the parameters."""
    mark = metafunc.definition.get_closest_marker("parametrize_test_case")
    if not mark:
        return
    name, cases = mark.args[0], mark.args[1]
    if isinstance(cases, dict):
        ids, values = [str(key) for key in cases], list(cases.values())
    else:
        ids, values = [str(case) for case in cases], list(cases)
    metafunc.parametrize(name, values, ids=ids, **mark.kwargs)
