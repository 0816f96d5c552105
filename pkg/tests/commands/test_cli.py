"""End to end tests for the command line entry point."""

import json
import pathlib

import pytest

from ratiolog import cli
from ratiolog.shared import errors

FIBONACCI = {"name": "fibonacci", "kind": "recurrence", "a": "1", "b": "1", "initial": ["0", "1"]}
ONES = [{"name": "ones", "kind": "explicit", "terms": ["1", "1", "1", "1", "1"]}]


def _json_run(argv: list[str], capsys: pytest.CaptureFixture) -> tuple[int, dict]:
    code = cli.main(["--format", "json", "--no-timing", *argv])
    return code, json.loads(capsys.readouterr().out)


def test_list(capsys: pytest.CaptureFixture) -> None:
    """Listing shows the catalog and the built-in certificates."""
    code, data = _json_run(["list"], capsys)
    assert code == errors.EXIT_HOLDS
    assert "derangement" in json.dumps(data["result"]["sequences"])
    assert data["result"]["certificates"]


def test_check_explicit_terms_refuted(capsys: pytest.CaptureFixture) -> None:
    """A concave triple is not log-convex."""
    code = cli.main(["check", "--terms", "1,2,3", "--property", "log-convex", "--strict"])
    assert code == errors.EXIT_REFUTED
    assert capsys.readouterr().out.startswith("check: refuted")


def test_check_domb_ratio_log_convex(capsys: pytest.CaptureFixture) -> None:
    """Domb numbers are ratio log-convex over a finite window."""
    code, data = _json_run(["check", "domb", "--property", "ratio-log-convex", "--from", "2", "--to", "60"], capsys)
    assert code == errors.EXIT_HOLDS
    assert data["status"] == "holds"
    assert data["command"] == "check"
    assert "timing_ms" not in data


def test_check_requires_window(capsys: pytest.CaptureFixture) -> None:
    """Generated sequences need an explicit last index."""
    code = cli.main(["check", "domb", "--property", "log-convex"])
    assert code == errors.EXIT_INCONCLUSIVE
    assert capsys.readouterr().err.startswith("error:")


def test_check_missing_property() -> None:
    """Argument errors exit through argparse."""
    with pytest.raises(SystemExit) as error:
        cli.main(["check", "domb", "--to", "10"])
    assert error.value.code == 2


def test_certify_builtin(capsys: pytest.CaptureFixture) -> None:
    """The built-in Domb certificate verifies."""
    code, data = _json_run(["certify", "domb", "--builtin"], capsys)
    assert code == errors.EXIT_HOLDS
    assert data["status"] == "holds"


def test_certify_printed_plus_bound(capsys: pytest.CaptureFixture) -> None:
    """The printed Motzkin bound is refuted once taken one index back."""
    code, data = _json_run(["certify", "motzkin", "--builtin"], capsys)
    assert code == errors.EXIT_REFUTED
    assert data["status"] == "refuted"


def test_gen_is_deterministic(capsys: pytest.CaptureFixture) -> None:
    """Identical runs without timing print identical JSON."""
    argv = ["--format", "json", "--no-timing", "gen", "derangement", "--count", "6"]
    assert cli.main(argv) == errors.EXIT_HOLDS
    first = capsys.readouterr().out
    assert cli.main(argv) == errors.EXIT_HOLDS
    second = capsys.readouterr().out
    assert first == second
    assert json.loads(first)["result"]["terms"] == ["1", "0", "1", "2", "9", "44"]


def test_gen_with_cache(tmp_path: pathlib.Path, capsys: pytest.CaptureFixture) -> None:
    """Cached generation matches direct generation."""
    code, data = _json_run(["gen", "motzkin", "--count", "6", "--cache", str(tmp_path)], capsys)
    assert code == errors.EXIT_HOLDS
    assert data["result"]["terms"] == ["1", "1", "2", "4", "9", "21"]
    assert list(tmp_path.iterdir())


def test_gen_sequence_document(tmp_path: pathlib.Path, capsys: pytest.CaptureFixture) -> None:
    """A sequence document path works wherever a catalog name does."""
    path = tmp_path / "fibonacci.json"
    path.write_text(json.dumps(FIBONACCI), encoding="utf-8")
    code, data = _json_run(["gen", str(path), "--count", "8"], capsys)
    assert code == errors.EXIT_HOLDS
    assert data["result"]["terms"] == ["0", "1", "1", "2", "3", "5", "8", "13"]


def test_extra_sequences(capsys: pytest.CaptureFixture) -> None:
    """Sequences passed as JSON text are registered for the run."""
    code = cli.main(["--format", "json", "--no-timing", "--sequences", json.dumps(ONES), "gen", "ones", "--count", "5"])
    assert code == errors.EXIT_HOLDS
    assert json.loads(capsys.readouterr().out)["result"]["terms"] == ["1"] * 5


def test_unknown_sequence(capsys: pytest.CaptureFixture) -> None:
    """Unknown names are reported on stderr."""
    assert cli.main(["gen", "no-such-sequence", "--count", "3"]) == errors.EXIT_INCONCLUSIVE
    assert capsys.readouterr().err.startswith("error:")


def test_unknown_sequence_json(capsys: pytest.CaptureFixture) -> None:
    """JSON errors carry the error slug."""
    assert cli.main(["--format", "json", "gen", "no-such-sequence", "--count", "3"]) == errors.EXIT_INCONCLUSIVE
    assert json.loads(capsys.readouterr().err)["error"] == "unknown-sequence"


def test_gamma_check_ineligible(capsys: pytest.CaptureFixture) -> None:
    """A family with u > 0 is rejected."""
    code, data = _json_run(["gamma-check", "--params", "0,1,0,2,1,1"], capsys)
    assert code == errors.EXIT_REFUTED
    assert data["result"]["eligibility"]["eligible"] is False


def test_gamma_check_binomial(capsys: pytest.CaptureFixture) -> None:
    """Central binomial coefficients are eligible and pass the finite levels."""
    code, data = _json_run(["gamma-check", "--binomial", "0,0,2,1", "--verify-k", "4", "--count", "40"], capsys)
    assert code == errors.EXIT_HOLDS
    assert len(data["result"]["levels"]) == 4


def test_gamma_check_needs_one_family(capsys: pytest.CaptureFixture) -> None:
    """Both family forms at once are a usage error."""
    assert cli.main(["gamma-check", "--params", "0,0,0,2,1,1", "--binomial", "0,0,2,1"]) == errors.EXIT_INCONCLUSIVE
    assert "error:" in capsys.readouterr().err


def test_onset(capsys: pytest.CaptureFixture) -> None:
    """Derangements become 2-log-monotonic from index 4."""
    code, data = _json_run(["onset", "derangement", "--k", "2", "--horizon", "40", "--anchor", "2"], capsys)
    assert code == errors.EXIT_HOLDS
    assert data["result"]["onset"] == 4
    assert data["result"]["scope"] == "window-relative"


def test_onset_requires_k(capsys: pytest.CaptureFixture) -> None:
    """The order is mandatory."""
    assert cli.main(["onset", "derangement", "--horizon", "40"]) == errors.EXIT_INCONCLUSIVE
    capsys.readouterr()


def test_oeis_diff_bundled(capsys: pytest.CaptureFixture) -> None:
    """Franel numbers match the bundled b-file."""
    code, data = _json_run(["oeis-diff", "franel"], capsys)
    assert code == errors.EXIT_HOLDS
    assert data["inputs"]["bfile"] == "bundled"
    assert data["inputs"]["oeis_id"] == "A000172"


def test_oeis_diff_mismatch(tmp_path: pathlib.Path, capsys: pytest.CaptureFixture) -> None:
    """A wrong b-file value is reported as a refutation."""
    path = tmp_path / "b000172.txt"
    path.write_text("# Franel numbers\n0 1\n1 2\n2 10\n3 57\n", encoding="utf-8")
    code, data = _json_run(["oeis-diff", "franel", "--bfile", str(path)], capsys)
    assert code == errors.EXIT_REFUTED
    assert data["status"] == "refuted"


def test_e_bound(capsys: pytest.CaptureFixture) -> None:
    """The rounding formula holds on a finite range."""
    assert cli.main(["e-bound", "--n-max", "50"]) == errors.EXIT_HOLDS
    assert capsys.readouterr().out.startswith("e-bound: holds")


def test_h_kernel_grid(capsys: pytest.CaptureFixture) -> None:
    """A small kernel grid is positive."""
    code = cli.main(["h-kernel", "--p", "2", "--q", "2", "--t", "1,10", "--u=-1/2,0", "--dps", "30"])
    assert code == errors.EXIT_HOLDS
    assert capsys.readouterr().out.startswith("h-kernel: holds")
