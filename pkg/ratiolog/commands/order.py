"""Commands for order-k log-monotonicity: per-level checks and onset search."""

import argparse

from ratiolog.commands import argument
from ratiolog.commands import command
from ratiolog.commands import outcome_code
from ratiolog.commands import resolve_sequence
from ratiolog.common import gamma_mono
from ratiolog.common.log_behavior import log_monotonic_order
from ratiolog.common.log_behavior import order_holds
from ratiolog.common.log_behavior import order_onset
from ratiolog.common.reports import RunReport
from ratiolog.common.sequences import terms_between
from ratiolog.shared import errors


@command(
    "order",
    "Check log-monotonicity of order k on terms from --from up to the horizon.",
    argument("sequence", help="Catalog name or path to a JSON sequence document."),
    argument("--k", type=int, required=True, help="Order, at least 1."),
    argument("--horizon", type=int, required=True, help="Last term index included."),
    argument("--from", dest="first", type=int, help="First term index. Defaults to the first positive index."),
    argument("--strict", action="store_true", help="Require strict inequalities at every level."),
    argument("--p", type=int, help="Order of the Fuss-Catalan family."),
)
def order(args: argparse.Namespace) -> RunReport:
    """Report one outcome per R level."""
    sequence = resolve_sequence(args.sequence, args.p)
    first = sequence.positive_from if args.first is None else args.first
    terms = terms_between(sequence, first, args.horizon)
    levels = log_monotonic_order(terms, args.k, start=first, strict=args.strict)
    holds = order_holds(levels)
    inputs = {"sequence": sequence.name, "k": args.k, "from": first, "horizon": args.horizon, "strict": args.strict}
    return RunReport("order", inputs, {"holds": holds, "levels": levels}, outcome_code(holds))


@command(
    "onset",
    "Find the smallest start index from which order-k log-monotonicity holds up to the horizon.",
    argument("sequence", nargs="?", help="Catalog name or path to a JSON sequence document."),
    argument("--k", type=int, help="Order, at least 1. With --derangement-table, the largest order."),
    argument("--horizon", type=int, required=True, help="Last term index included."),
    argument("--anchor", type=int, help="First candidate start. Defaults to the first positive index."),
    argument(
        "--derangement-table",
        action="store_true",
        help="Tabulate derangement onsets for k = 1 .. K from the anchors 2 and 3 against the sufficient onsets.",
    ),
    argument("--p", type=int, help="Order of the Fuss-Catalan family."),
)
def onset(args: argparse.Namespace) -> RunReport:
    """Window-relative onset, or the derangement onset table."""
    if args.k is None or args.k < 1:
        raise errors.UsageError("--k must be a positive integer")
    if args.derangement_table:
        rows = gamma_mono.derangement_onset_table(args.k, args.horizon)
        holds = all(row.within_bound is not False for row in rows)
        inputs = {"k_max": args.k, "horizon": args.horizon, "anchors": list(gamma_mono.DERANGEMENT_ANCHORS)}
        return RunReport("onset", inputs, {"rows": rows, "scope": "window-relative"}, outcome_code(holds))
    if args.sequence is None:
        raise errors.UsageError("A sequence is required unless --derangement-table is given")
    sequence = resolve_sequence(args.sequence, args.p)
    result = order_onset(sequence, args.k, args.horizon, args.anchor)
    code = errors.EXIT_HOLDS if result.onset is not None else errors.EXIT_INCONCLUSIVE
    inputs = {"sequence": sequence.name, "k": args.k, "horizon": args.horizon, "anchor": result.anchor}
    return RunReport("onset", inputs, result, code)
