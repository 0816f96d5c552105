"""Commands for Gamma-quotient families and the derangement series bound."""

import argparse

from ratiolog.commands import argument
from ratiolog.commands import command
from ratiolog.commands import outcome_code
from ratiolog.common import gamma_mono
from ratiolog.common.log_behavior import order_holds
from ratiolog.common.rationals import parse_integer
from ratiolog.common.reports import RunReport
from ratiolog.common.sequences import GammaQuotientDef
from ratiolog.shared import errors

DEFAULT_VERIFY_COUNT = 80


def _integers(text: str, count: int, flag: str) -> list[int]:
    try:
        values = [parse_integer(item.strip()) for item in text.split(",")]
    except errors.VerificationError as error:
        raise errors.UsageError(f"{flag} expects {count} comma separated integers") from error
    if len(values) != count:
        raise errors.UsageError(f"{flag} expects {count} comma separated integers")
    return values


@command(
    "gamma-check",
    "Decide infinite log-monotonicity conditions of a Gamma-quotient family.",
    argument("--params", help="Family parameters n0,k0,k0bar,a,b,bbar."),
    argument("--binomial", help="Binomial family n0,k0,step,inner_step for binom(n0 + i step, k0 + i inner_step)."),
    argument("--verify-k", type=int, help="Cross-check levels 0 .. K-1 of log-monotonicity on exact terms."),
    argument("--count", type=int, default=DEFAULT_VERIFY_COUNT, help="Number of exact terms for --verify-k."),
)
def gamma_check(args: argparse.Namespace) -> RunReport:
    """Eligibility verdict, plus finite level checks when requested."""
    if (args.params is None) == (args.binomial is None):
        raise errors.UsageError("Give exactly one of --params or --binomial")
    if args.params is not None:
        family = GammaQuotientDef(*_integers(args.params, 6, "--params"))
    else:
        family = gamma_mono.binomial_family(*_integers(args.binomial, 4, "--binomial"))
    eligibility = gamma_mono.check_gamma_eligibility(family)
    outcome: dict = {"eligibility": eligibility}
    holds = eligibility.eligible
    if args.verify_k is not None:
        levels = gamma_mono.verify_finite_log_monotonicity(family, args.verify_k, args.count)
        outcome["levels"] = levels
        holds = holds and order_holds(levels)
    inputs = {"params": list(family.params), "verify_k": args.verify_k, "count": args.count}
    return RunReport("gamma-check", inputs, outcome, outcome_code(holds))


@command(
    "e-bound",
    "Check |d_n - n!/e| <= 1/2 for derangements with exact series enclosures.",
    argument("--n-max", type=int, required=True, help="Last index checked."),
    argument("--n-min", type=int, default=3, help="First index checked."),
)
def e_bound(args: argparse.Namespace) -> RunReport:
    """Exact enclosure check of the derangement rounding formula."""
    outcome = gamma_mono.derangement_e_bound(args.n_max, args.n_min)
    return RunReport("e-bound", {"n_min": args.n_min, "n_max": args.n_max}, outcome, outcome_code(outcome.holds))
