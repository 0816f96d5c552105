"""OEIS b-file parsing and cross-validation of generated terms."""

from __future__ import annotations

import logging
import pathlib
import re
from dataclasses import dataclass
from fractions import Fraction

from ratiolog.common.log_behavior import CheckOutcome
from ratiolog.common.log_behavior import Violation
from ratiolog.common.sequences import ExplicitDef
from ratiolog.common.sequences import SequenceDef
from ratiolog.common.sequences import generate_terms
from ratiolog.shared import errors

logger = logging.getLogger(__name__)

BUNDLED_DIR = pathlib.Path(__file__).resolve().parent.parent / "data" / "bfiles"
_LINE_PATTERN = re.compile(r"^(-?[0-9]+)\s+(-?[0-9]+)$")
_ID_PATTERN = re.compile(r"[bA]([0-9]{6})")


@dataclass(frozen=True)
class BFile:
    """Parsed b-file: strictly increasing (index, value) entries."""

    oeis_id: str | None
    entries: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict[int, int]:
        """Values keyed by OEIS index."""
        return dict(self.entries)

    def to_json(self) -> dict:
        """Convert the b-file into a JSON compatible type."""
        return {"oeis_id": self.oeis_id, "entries": [[index, str(value)] for index, value in self.entries]}


def oeis_id_from_name(name: str) -> str | None:
    """A-number from a file name such as b000166.txt, if present."""
    match = _ID_PATTERN.search(pathlib.Path(name).name)
    return f"A{match.group(1)}" if match else None


def parse_bfile(data: bytes | str, oeis_id: str | None = None) -> BFile:
    """Parse b-file text: "<index> <value>" lines, comments starting with '#' and blank lines skipped.

    Args:
        data: Raw bytes or decoded text.
        oeis_id: Identifier to attach to the result.

    Returns:
        Parsed entries, values as exact integers.

    Raises:
        MalformedLine with the 1-based line number of the first unparsable line.
        NonMonotoneIndex with the line number of the first index not above the previous one.
    """
    text = data.decode("utf-8", errors="replace") if isinstance(data, bytes) else data
    entries: list[tuple[int, int]] = []
    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        match = _LINE_PATTERN.match(line)
        if not match:
            raise errors.MalformedLine(line_number, {"line": raw_line[:80]})
        try:
            index, value = int(match.group(1)), int(match.group(2))
        except ValueError as error:
            raise errors.MalformedLine(line_number, {"line": raw_line[:80]}) from error
        if entries and index <= entries[-1][0]:
            raise errors.NonMonotoneIndex(line_number, {"previous": entries[-1][0], "found": index})
        entries.append((index, value))
    return BFile(oeis_id, tuple(entries))


def read_bfile(path: str | pathlib.Path) -> BFile:
    """Parse a local b-file, taking the identifier from its name."""
    path = pathlib.Path(path).expanduser()
    return parse_bfile(path.read_bytes(), oeis_id_from_name(path.name))


def bundled_bfile(oeis_id: str) -> BFile:
    """Load the b-file shipped with the package for an A-number.

    Raises:
        UsageError if no b-file is bundled for the identifier.
    """
    path = BUNDLED_DIR / f"b{oeis_id.upper().lstrip('A')}.txt"
    if not path.exists():
        raise errors.UsageError(f"No bundled b-file for {oeis_id}")
    return read_bfile(path)


def cross_validate(sequence: SequenceDef, bfile: BFile) -> CheckOutcome:
    """Compare generated terms with a b-file on every overlapping index.

    OEIS index i corresponds to own index i - oeis_shift.

    Args:
        sequence: Definition to generate.
        bfile: Parsed reference values.

    Returns:
        Outcome over the overlapping OEIS indices, with the first mismatch as (index, b-file value, generated).

    Raises:
        NoOverlap if no b-file index maps into the definition's index range.
    """
    first = sequence.offset
    last = None
    if isinstance(sequence.kind, ExplicitDef):
        last = first + len(sequence.kind.terms) - 1
    overlap = [
        (index, value)
        for index, value in bfile.entries
        if index - sequence.oeis_shift >= first and (last is None or index - sequence.oeis_shift <= last)
    ]
    if not overlap:
        raise errors.NoOverlap(sequence.name, bfile.oeis_id or "unknown")
    terms = generate_terms(sequence, overlap[-1][0] - sequence.oeis_shift - first + 1)
    checked = (overlap[0][0], overlap[-1][0])
    for index, value in overlap:
        generated = terms[index - sequence.oeis_shift - first]
        if generated != Fraction(value):
            logger.info(f"{sequence.name} differs from {bfile.oeis_id} at index {index}")
            return CheckOutcome(False, False, Violation(index, value, generated), checked, "oeis-cross-validation")
    notes = (f"{len(overlap)} terms equal to {bfile.oeis_id} with shift {sequence.oeis_shift}",)
    return CheckOutcome(True, False, None, checked, "oeis-cross-validation", notes=notes)
