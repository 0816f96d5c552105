"""Command generating exact terms."""

import argparse
import logging

from ratiolog.commands import argument
from ratiolog.commands import command
from ratiolog.commands import resolve_sequence
from ratiolog.common import config_utils
from ratiolog.common.reports import RunReport
from ratiolog.common.sequences import generate_terms
from ratiolog.common.term_cache import load_cached
from ratiolog.shared import errors

logger = logging.getLogger(__name__)


@command(
    "gen",
    "Generate exact terms of a sequence.",
    argument("sequence", help="Catalog name or path to a JSON sequence document."),
    argument("--count", type=int, required=True, help="Number of terms starting at the offset."),
    argument("--p", type=int, help="Order of the Fuss-Catalan family."),
    argument(
        "--cache",
        nargs="?",
        const=config_utils.CACHE_DIR,
        help=f"Read and extend a term cache. Defaults to {config_utils.RATIOLOG_CACHE_DIR} ENV variable.",
    ),
    argument("--assert-integral", action="store_true", help="Fail when a term is not an integer."),
)
def gen(args: argparse.Namespace) -> RunReport:
    """Generate terms, optionally through the on-disk cache."""
    if args.count < 1:
        raise errors.UsageError("--count must be positive")
    sequence = resolve_sequence(args.sequence, args.p)
    if args.cache:
        terms = load_cached(sequence, args.cache, args.count)
        if args.assert_integral:
            for position, term in enumerate(terms):
                if term.denominator != 1:
                    raise errors.NonIntegralTerm(sequence.offset + position)
    else:
        terms = generate_terms(sequence, args.count, assert_integral=args.assert_integral)
    inputs = {"sequence": sequence.name, "count": args.count, "cache": bool(args.cache)}
    outcome = {"sequence": sequence.name, "offset": sequence.offset, "terms": terms}
    return RunReport("gen", inputs, outcome)
