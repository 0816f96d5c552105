"""Tests for the on-disk term cache."""

import pathlib

import pytest

from ratiolog.common import term_cache
from ratiolog.common.catalog import catalog_lookup
from ratiolog.common.sequences import SequenceDef
from ratiolog.common.sequences import generate_terms
from ratiolog.shared import errors


def test_extends_cached_prefix(tmp_path: pathlib.Path) -> None:
    """Cached terms are continued rather than regenerated."""
    domb = catalog_lookup("domb")
    term_cache.cache_terms(domb, generate_terms(domb, 100), tmp_path)
    assert term_cache.load_cached(domb, tmp_path, 120) == generate_terms(domb, 120)
    assert len(term_cache.load_cached(domb, tmp_path)) == 120
    assert term_cache.load_cached(domb, tmp_path, 10) == generate_terms(domb, 10)


def test_empty_directory_generates(tmp_path: pathlib.Path) -> None:
    """A missing cache file is created."""
    motzkin = catalog_lookup("motzkin")
    assert term_cache.load_cached(motzkin, tmp_path, 30) == generate_terms(motzkin, 30)
    path = term_cache.cache_path(motzkin, tmp_path)
    assert path.exists()
    header = path.read_text(encoding="utf-8").splitlines()[0]
    assert header == f"# ratiolog-terms v1 sha256={motzkin.content_hash()} offset=0 count=30"


def test_rational_terms(tmp_path: pathlib.Path) -> None:
    """Proper fractions are stored exactly."""
    sequence = SequenceDef.from_json({"name": "halves", "kind": "explicit", "terms": ["1/2", "3/4", "1", "-5/8", "2"]})
    term_cache.cache_terms(sequence, generate_terms(sequence, 5), tmp_path)
    assert term_cache.load_cached(sequence, tmp_path) == generate_terms(sequence, 5)


def test_hash_mismatch(tmp_path: pathlib.Path) -> None:
    """A cache written for a different rule under the same name is rejected."""
    original = SequenceDef.from_json({"name": "listed", "kind": "explicit", "terms": [1, 2, 3, 4, 5]})
    changed = SequenceDef.from_json({"name": "listed", "kind": "explicit", "terms": [1, 2, 3, 4, 6]})
    term_cache.cache_terms(original, generate_terms(original, 5), tmp_path)
    with pytest.raises(errors.HashMismatch):
        term_cache.load_cached(changed, tmp_path, 5)


@pytest.mark.parametrize(
    "text",
    [
        "garbage\n",
        "",
        "# ratiolog-terms v1 sha256={hash} offset=0 count=3\n1\n2\n",
        "# ratiolog-terms v1 sha256={hash} offset=0 count=2\n1\nx\n",
        "# ratiolog-terms v1 sha256={hash} offset=4 count=1\n1\n",
        "# ratiolog-terms v9 sha256={hash} offset=0 count=1\n1\n",
    ],
)
def test_corrupt_cache(tmp_path: pathlib.Path, text: str) -> None:
    """Unparsable files are reported instead of trusted."""
    domb = catalog_lookup("domb")
    term_cache.cache_path(domb, tmp_path).write_text(text.format(hash=domb.content_hash()), encoding="utf-8")
    with pytest.raises(errors.CorruptCache):
        term_cache.load_cached(domb, tmp_path, 5)
