"""On-disk cache of exact terms, invalidated by the content hash of the generating rule.

File layout: one header line "# ratiolog-terms v1 sha256=<hash> offset=<offset> count=<count>" followed by one
decimal term ("p" or "p/q") per line.
"""

from __future__ import annotations

import logging
import pathlib
import re
from fractions import Fraction

from ratiolog.common import config_utils
from ratiolog.common.sequences import SequenceDef
from ratiolog.common.sequences import generate_terms
from ratiolog.shared import errors
from ratiolog.shared.collections import atomic_write_text
from ratiolog.shared.responses import format_rational

logger = logging.getLogger(__name__)

CACHE_VERSION = "v1"
_HEADER_PATTERN = re.compile(r"^# ratiolog-terms (v[0-9]+) sha256=([0-9a-f]{64}) offset=(-?[0-9]+) count=([0-9]+)$")
_TERM_PATTERN = re.compile(r"^-?[0-9]+(/[0-9]+)?$")


def cache_path(sequence: SequenceDef, directory: str | pathlib.Path | None = None) -> pathlib.Path:
    """Location of the cache file for a sequence."""
    base = pathlib.Path(directory or config_utils.CACHE_DIR).expanduser()
    return base / f"{sequence.name}.terms"


def cache_terms(
    sequence: SequenceDef, terms: list[Fraction], directory: str | pathlib.Path | None = None
) -> pathlib.Path:
    """Write terms atomically, replacing any previous cache for the sequence.

    Args:
        sequence: Definition the terms were generated from.
        terms: Exact terms starting at the offset.
        directory: Cache folder, defaults to RATIOLOG_CACHE_DIR.

    Returns:
        Path of the written file.
    """
    path = cache_path(sequence, directory)
    header = (
        f"# ratiolog-terms {CACHE_VERSION} sha256={sequence.content_hash()}"
        f" offset={sequence.offset} count={len(terms)}"
    )
    atomic_write_text(path, "\n".join([header] + [format_rational(term) for term in terms]) + "\n")
    logger.info(f"Cached {len(terms)} terms of {sequence.name} in {path}")
    return path


def _read(sequence: SequenceDef, path: pathlib.Path) -> list[Fraction]:
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except (OSError, UnicodeDecodeError) as error:
        raise errors.CorruptCache(str(path), f"unreadable: {error}") from error
    match = _HEADER_PATTERN.match(lines[0]) if lines else None
    if not match or match.group(1) != CACHE_VERSION:
        raise errors.CorruptCache(str(path), "missing or unsupported header")
    expected = sequence.content_hash()
    if match.group(2) != expected:
        raise errors.HashMismatch(str(path), expected, match.group(2))
    if int(match.group(3)) != sequence.offset:
        raise errors.CorruptCache(str(path), "offset does not match the definition")
    body = [line.strip() for line in lines[1:] if line.strip()]
    if len(body) != int(match.group(4)):
        raise errors.CorruptCache(str(path), f"header announces {match.group(4)} terms, found {len(body)}")
    terms = []
    for line_number, line in enumerate(body, start=2):
        if not _TERM_PATTERN.match(line):
            raise errors.CorruptCache(str(path), f"invalid term on line {line_number}")
        try:
            terms.append(Fraction(line))
        except (ValueError, ZeroDivisionError) as error:
            raise errors.CorruptCache(str(path), f"invalid term on line {line_number}") from error
    return terms


def load_cached(
    sequence: SequenceDef, directory: str | pathlib.Path | None = None, count: int | None = None
) -> list[Fraction]:
    """Read cached terms, generating and caching any missing ones.

    Args:
        sequence: Definition whose terms are requested.
        directory: Cache folder, defaults to RATIOLOG_CACHE_DIR.
        count: Number of terms wanted, defaults to whatever is cached.

    Returns:
        Exact terms starting at the offset.

    Raises:
        HashMismatch if the cache was written for a different generating rule.
        CorruptCache if the file cannot be parsed.
    """
    path = cache_path(sequence, directory)
    cached = _read(sequence, path) if path.exists() else []
    if count is None or count <= len(cached):
        return cached if count is None else cached[:count]
    logger.info(f"Extending cached {sequence.name} terms from {len(cached)} to {count}")
    terms = generate_terms(sequence, count, prefix=cached)
    cache_terms(sequence, terms, directory)
    return terms
