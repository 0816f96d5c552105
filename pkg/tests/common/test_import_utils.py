"""Tests for runtime module imports."""

import pathlib

from ratiolog import commands
from ratiolog.common import import_utils


def test_import_command_modules() -> None:
    """Every command module is imported by name, private modules are skipped."""
    folder = pathlib.Path(commands.__file__).parent
    imported = import_utils.import_modules(folder, "ratiolog.commands")
    assert "ratiolog.commands.certify" in imported
    assert "ratiolog.commands.gen" in imported
    assert "ratiolog.commands.__init__" not in imported
    assert imported == sorted(imported)


def test_import_walks_sub_packages(tmp_path: pathlib.Path) -> None:
    """Sub packages are searched by default, private and test directories are not."""
    (tmp_path / "empty_pkg").mkdir()
    (tmp_path / "_hidden").mkdir()
    (tmp_path / "tests").mkdir()
    assert not import_utils.import_modules(tmp_path, "nothing")
    assert not import_utils.import_modules(tmp_path / "missing", "nothing")
