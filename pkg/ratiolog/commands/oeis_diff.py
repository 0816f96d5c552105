"""Command comparing generated terms with an OEIS b-file."""

import argparse
import logging

from ratiolog.commands import argument
from ratiolog.commands import command
from ratiolog.commands import outcome_code
from ratiolog.commands import resolve_sequence
from ratiolog.common.bfiles import bundled_bfile
from ratiolog.common.bfiles import cross_validate
from ratiolog.common.bfiles import read_bfile
from ratiolog.common.reports import RunReport
from ratiolog.shared import errors

logger = logging.getLogger(__name__)


@command(
    "oeis-diff",
    "Compare generated terms with a local OEIS b-file.",
    argument("sequence", help="Catalog name or path to a JSON sequence document."),
    argument("--bfile", help="Path to a b-file. Defaults to the copy bundled for the sequence's OEIS id."),
    argument("--p", type=int, help="Order of the Fuss-Catalan family."),
)
def oeis_diff(args: argparse.Namespace) -> RunReport:
    """Exact comparison on every overlapping index."""
    sequence = resolve_sequence(args.sequence, args.p)
    if args.bfile:
        bfile = read_bfile(args.bfile)
    elif sequence.oeis_id:
        bfile = bundled_bfile(sequence.oeis_id)
    else:
        raise errors.UsageError(f"{sequence.name} has no OEIS id, give --bfile")
    logger.info(f"Comparing {sequence.name} with {len(bfile.entries)} b-file entries")
    outcome = cross_validate(sequence, bfile)
    inputs = {"sequence": sequence.name, "bfile": args.bfile or "bundled", "oeis_id": bfile.oeis_id}
    return RunReport("oeis-diff", inputs, outcome, outcome_code(outcome.holds))
