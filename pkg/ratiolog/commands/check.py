"""Command checking a log-behavior property on a finite index range."""

import argparse
import logging

from ratiolog.commands import argument
from ratiolog.commands import command
from ratiolog.commands import outcome_code
from ratiolog.commands import parse_term_list
from ratiolog.commands import resolve_sequence
from ratiolog.common import log_behavior
from ratiolog.common.reports import RunReport
from ratiolog.common.sequences import terms_between
from ratiolog.shared import errors

logger = logging.getLogger(__name__)

PROPERTIES = {
    "log-convex": log_behavior.LOG_CONVEX,
    "log-concave": log_behavior.LOG_CONCAVE,
    "ratio-log-convex": log_behavior.RATIO_LOG_CONVEX,
    "ratio-log-concave": log_behavior.RATIO_LOG_CONCAVE,
}


@command(
    "check",
    "Check a log-behavior property exactly on a range of centre indices.",
    argument("sequence", nargs="?", help="Catalog name or path to a JSON sequence document."),
    argument("--terms", help='Explicit comma separated terms starting at index 0, such as "1,2,3".'),
    argument("--property", dest="prop", choices=sorted(PROPERTIES), required=True, help="Property to check."),
    argument("--from", dest="first", type=int, help="First centre index. Defaults to the first admissible one."),
    argument("--to", dest="last", type=int, help="Last centre index. Required for generated sequences."),
    argument("--strict", action="store_true", help="Require strict inequalities."),
    argument("--p", type=int, help="Order of the Fuss-Catalan family."),
)
def check(args: argparse.Namespace) -> RunReport:
    """Check the property at every centre of the requested range."""
    pattern = PROPERTIES[args.prop]
    low, high = log_behavior.pattern_reach(pattern)
    if (args.sequence is None) == (args.terms is None):
        raise errors.UsageError("Give either a sequence or --terms")
    if args.terms is not None:
        terms = parse_term_list(args.terms)
        start = 0
        name = "explicit"
    else:
        sequence = resolve_sequence(args.sequence, args.p)
        if args.last is None:
            raise errors.UsageError("--to is required for generated sequences")
        first = sequence.positive_from - low if args.first is None else args.first
        start = max(sequence.offset, first + low)
        terms = terms_between(sequence, start, args.last + high)
        name = sequence.name
    outcome = log_behavior.check_pattern(terms, pattern, args.strict, start, args.first, args.last, label=args.prop)
    inputs = {"sequence": name, "property": args.prop, "from": args.first, "to": args.last, "strict": args.strict}
    return RunReport("check", inputs, outcome, outcome_code(outcome.holds))
