#! /usr/bin/env python

"""Command line entry point for exact log-behavior verification."""

from __future__ import annotations

import argparse
import dataclasses
import logging
import sys
import time
from typing import Sequence

from ratiolog import commands
from ratiolog.common import config_utils
from ratiolog.common.catalog import SequenceCatalog
from ratiolog.common.certify import CertificateCatalog
from ratiolog.shared import errors
from ratiolog.shared import responses

logger = logging.getLogger(__name__)

FORMAT_TEXT = "text"
FORMAT_JSON = "json"
FORMATS = (FORMAT_TEXT, FORMAT_JSON)


def parse_args(argv: Sequence[str] | None = None) -> argparse.Namespace:
    """Parse user arguments.

    Args:
        argv: Arguments without the program name, defaults to sys.argv.

    Return:
        args: Namespace with the arguments and the selected command handler.
    """
    parser = argparse.ArgumentParser(
        prog="ratiolog",
        description="Exact verification of log-convexity, ratio log-convexity and log-monotonicity.",
    )
    parser.add_argument(
        "--format",
        choices=FORMATS,
        default=config_utils.FORMAT if config_utils.FORMAT in FORMATS else FORMAT_TEXT,
        help=f"Report format. Defaults to {config_utils.RATIOLOG_FORMAT} ENV variable.",
    )
    parser.add_argument(
        "--sequences",
        help=(
            "Path to a JSON file, or JSON text, with extra sequence documents. Documents named by the"
            f" {config_utils.RATIOLOG_SEQUENCES} ENV variable are always loaded."
        ),
    )
    parser.add_argument(
        "--no-timing",
        action="store_true",
        help="Leave the timing field out of JSON reports so identical runs are byte-identical.",
    )
    commands.add_subparsers(parser)
    return parser.parse_args(argv)


def _report_error(error: errors.VerificationError, output_format: str) -> None:
    if output_format == FORMAT_JSON:
        print(responses.dumps(responses.json_error(error)), file=sys.stderr)
    else:
        print(f"error: {error}", file=sys.stderr)


def run(args: argparse.Namespace) -> int:
    """Run the selected command and print its report.

    Args:
        args: Parsed namespace carrying the handler.

    Returns:
        Exit code: 0 holds, 1 refuted or violated, 2 inconclusive or unusable input.
    """
    began = time.monotonic()
    try:
        report = args.handler(args)
    except errors.VerificationError as error:
        logger.debug(f"{args.command} stopped: {error}")
        _report_error(error, args.format)
        return error.code
    report = dataclasses.replace(report, timing_ms=report.timing_ms or (time.monotonic() - began) * 1000)
    if args.format == FORMAT_JSON:
        print(responses.dumps(report.to_json(include_timing=not args.no_timing)))
    else:
        print(report.to_text())
    return report.code


def main(argv: Sequence[str] | None = None) -> int:
    """Parse arguments, run one command and return its exit code."""
    args = parse_args(argv)
    try:
        if args.sequences:
            failures = SequenceCatalog.load(args.sequences)
            if failures:
                logger.warning(f"Skipped {len(failures)} invalid sequence document(s)")
        return run(args)
    finally:
        SequenceCatalog.teardown()
        CertificateCatalog.teardown()


if __name__ == "__main__":
    sys.exit(main())
