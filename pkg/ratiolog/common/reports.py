"""Run reports wrapping command outcomes, rendered as JSON or plain text."""

from __future__ import annotations

from dataclasses import dataclass
from dataclasses import field
from typing import Any

from ratiolog.shared import errors
from ratiolog.shared import responses

INDENT = "  "


@dataclass(frozen=True)
class RunReport:
    """Outcome of one CLI command.

    Attributes:
        command: Subcommand name.
        inputs: Canonical echo of the parameters.
        outcome: Check outcome, certificate report, table, or any value with to_json().
        code: Exit code derived from the outcome.
        timing_ms: Wall time, the only field allowed to differ between identical runs.
    """

    command: str
    inputs: dict[str, Any]
    outcome: Any
    code: int = errors.EXIT_HOLDS
    timing_ms: float = field(default=0.0, compare=False)

    def to_json(self, include_timing: bool = True) -> dict:
        """Convert the report into its JSON envelope."""
        data = responses.json_result(self.outcome, self.code)
        data["command"] = self.command
        data["inputs"] = responses.to_jsonable(self.inputs)
        if include_timing:
            data["timing_ms"] = round(self.timing_ms, 3)
        return data

    def to_text(self) -> str:
        """Render the report for a terminal."""
        lines = [f"{self.command}: {errors.exit_text(self.code)}"]
        for key, value in sorted(responses.to_jsonable(self.inputs).items()):
            lines.append(f"{INDENT}{key}: {value}")
        lines.extend(render_text(responses.to_jsonable(self.outcome), 1))
        lines.append(f"{INDENT}timing_ms: {self.timing_ms:.1f}")
        return "\n".join(lines)


def render_text(value: Any, depth: int = 0) -> list[str]:
    """Indented key/value lines for nested JSON compatible values, empty entries skipped."""
    prefix = INDENT * depth
    if isinstance(value, dict):
        lines = []
        for key, item in value.items():
            if item is None or item == [] or item == {}:
                continue
            if isinstance(item, (dict, list)):
                lines.append(f"{prefix}{key}:")
                lines.extend(render_text(item, depth + 1))
            else:
                lines.append(f"{prefix}{key}: {item}")
        return lines
    if isinstance(value, list):
        lines = []
        for item in value:
            if isinstance(item, dict):
                nested = render_text(item, depth + 1)
                if nested:
                    lines.append(f"{prefix}- {nested[0].strip()}")
                    lines.extend(nested[1:])
            elif isinstance(item, list):
                lines.append(f"{prefix}- {', '.join(str(element) for element in item)}")
            else:
                lines.append(f"{prefix}- {item}")
        return lines
    return [f"{prefix}{value}"]
