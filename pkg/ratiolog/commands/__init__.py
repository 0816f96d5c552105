"""Root for CLI subcommands.

Each module in this package registers its handlers with the command decorator. Handlers receive the parsed
namespace and return a RunReport; errors they raise are reported by the CLI entry point.
"""

from __future__ import annotations

import argparse
import json
import os
import pathlib
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction
from typing import Any
from typing import Callable
from typing import Iterable

from ratiolog.common import import_utils
from ratiolog.common.catalog import catalog_lookup
from ratiolog.common.rationals import parse_rational
from ratiolog.common.reports import RunReport
from ratiolog.common.sequences import SequenceDef
from ratiolog.shared import errors

Handler = Callable[[argparse.Namespace], RunReport]


@dataclass(frozen=True)
class Argument:
    """Flags and keyword options forwarded to argparse add_argument."""

    flags: tuple[str, ...]
    options: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class Command:
    """Registered subcommand."""

    name: str
    help: str
    handler: Handler
    arguments: tuple[Argument, ...]


_commands: dict[str, Command] = {}


def argument(*flags: str, **options: Any) -> Argument:
    """Describe one argparse argument of a subcommand."""
    return Argument(flags, options)


def command(name: str, help_text: str, *arguments: Argument) -> Callable[[Handler], Handler]:
    """Register a handler as a subcommand.

    Args:
        name: Subcommand name used on the command line.
        help_text: One line summary shown in the usage text.
        arguments: Arguments accepted by the subcommand.

    Returns:
        Decorator returning the handler unchanged.
    """

    def decorator(handler: Handler) -> Handler:
        if name in _commands:
            raise ValueError(f"Duplicate command {name}")
        _commands[name] = Command(name, help_text, handler, tuple(arguments))
        return handler

    return decorator


def commands() -> list[Command]:
    """Every registered subcommand, ordered by name."""
    return [_commands[name] for name in sorted(_commands)]


def add_subparsers(parser: argparse.ArgumentParser) -> None:
    """Attach one subparser per registered command, storing the handler as the "handler" default."""
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
    for entry in commands():
        subparser = subparsers.add_parser(entry.name, help=entry.help, description=entry.help)
        for item in entry.arguments:
            subparser.add_argument(*item.flags, **item.options)
        subparser.set_defaults(handler=entry.handler)


def resolve_sequence(value: str, p: int | None = None) -> SequenceDef:
    """Find a sequence by catalog name, or load it from a sequence document file.

    Args:
        value: Catalog name, or path to a JSON sequence document.
        p: Order for the Fuss-Catalan family.

    Returns:
        The sequence definition.

    Raises:
        UnknownSequence if the value is neither a registered name nor a readable document.
        DocumentValueError if the document is not valid JSON.
    """
    path = pathlib.Path(value).expanduser()
    if value.endswith(".json") or path.is_file():
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except FileNotFoundError as error:
            raise errors.UnknownSequence(value) from error
        except json.JSONDecodeError as error:
            raise errors.DocumentValueError("invalid-json", {"path": str(path), "detail": str(error)}) from error
        if not isinstance(data, dict):
            raise errors.DocumentValueError("invalid-type", {"path": str(path), "expected": "object"})
        return SequenceDef.from_json(data)
    return catalog_lookup(value, p)


def parse_term_list(text: str) -> list[Fraction]:
    """Parse a comma separated list of exact rationals such as "1,2,3" or "1/2, 3"."""
    items = [item.strip() for item in text.split(",") if item.strip()]
    if not items:
        raise errors.UsageError("Expected a comma separated list of terms")
    try:
        return [parse_rational(item) for item in items]
    except errors.VerificationError as error:
        raise errors.UsageError(f"Invalid term list {text!r}: {error}") from error


def parse_rational_list(text: str) -> list[Fraction]:
    """Parse a comma separated grid of rationals, decimal notation allowed."""
    try:
        return [Fraction(item.strip()) for item in text.split(",") if item.strip()]
    except (ValueError, ZeroDivisionError) as error:
        raise errors.UsageError(f"Invalid number list {text!r}") from error


def outcome_code(holds: bool) -> int:
    """Exit code for a finite check."""
    return errors.EXIT_HOLDS if holds else errors.EXIT_REFUTED


def worst_code(codes: Iterable[int]) -> int:
    """Combined exit code: a refutation outranks an inconclusive result, which outranks success."""
    seen = set(codes)
    for code in (errors.EXIT_REFUTED, errors.EXIT_INCONCLUSIVE):
        if code in seen:
            return code
    return errors.EXIT_HOLDS


# Load all commands on initialization to populate the registry.
import_utils.import_modules(os.path.dirname(__file__), __package__)
