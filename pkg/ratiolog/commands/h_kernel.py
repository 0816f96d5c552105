"""Command sampling the kernel h(t, u) on a grid."""

import argparse
from fractions import Fraction

from ratiolog.commands import argument
from ratiolog.commands import command
from ratiolog.commands import outcome_code
from ratiolog.commands import parse_rational_list
from ratiolog.common import config_utils
from ratiolog.common import gamma_mono
from ratiolog.common.reports import RunReport
from ratiolog.shared import errors

DEFAULT_T_GRID = "0.01,0.1,1,10,50"
DEFAULT_U_GRID = "-1,-0.75,-0.5,-0.25,0"


@command(
    "h-kernel",
    "Sample h(t, u) > 0 with error estimates. Numeric evidence, not proof.",
    argument("--p", required=True, help="Ratio a/b, such as 2 or 3."),
    argument("--q", required=True, help="Ratio a/bbar, such as 2 or 3/2."),
    argument("--t", dest="grid_t", default=DEFAULT_T_GRID, help=f"Comma separated t values. Default {DEFAULT_T_GRID}"),
    argument("--u", dest="grid_u", default=DEFAULT_U_GRID, help=f"Comma separated u values. Default {DEFAULT_U_GRID}"),
    argument(
        "--dps",
        type=int,
        default=config_utils.H_DPS,
        help=f"Starting decimal precision. Defaults to {config_utils.RATIOLOG_H_DPS} ENV variable.",
    ),
)
def h_kernel(args: argparse.Namespace) -> RunReport:
    """Grid check labelled as numeric evidence."""
    try:
        p, q = Fraction(args.p), Fraction(args.q)
    except (ValueError, ZeroDivisionError) as error:
        raise errors.UsageError("--p and --q must be rational numbers") from error
    grid_t = parse_rational_list(args.grid_t)
    grid_u = parse_rational_list(args.grid_u)
    outcome = gamma_mono.h_kernel_grid_check(p, q, grid_t, grid_u, args.dps)
    inputs = {"p": p, "q": q, "t": grid_t, "u": grid_u, "dps": args.dps}
    return RunReport("h-kernel", inputs, outcome, outcome_code(outcome.holds))
