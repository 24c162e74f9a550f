"""Verification reports: one schema shared by the engine and the CLI.

JSON schema (frozen by golden files):
  {command, n, a_mode, b_mode, outcome, elapsed_ms, payload}
The text rendering carries identical data.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class Report:
    command: str
    n: int
    a_mode: str
    b_mode: str
    outcome: str  # "pass" | "fail"
    elapsed_ms: float
    payload: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.outcome == "pass"

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "n": self.n,
            "a_mode": self.a_mode,
            "b_mode": self.b_mode,
            "outcome": self.outcome,
            "elapsed_ms": self.elapsed_ms,
            "payload": self.payload,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = [
            f"COMMAND: {self.command}",
            f"N: {self.n}",
            f"A_MODE: {self.a_mode}",
            f"B_MODE: {self.b_mode}",
            f"RESULT: {self.outcome.upper()}",
            f"ELAPSED_MS: {self.elapsed_ms}",
        ]
        for key in sorted(self.payload):
            lines.extend(_render_entry(key, self.payload[key]))
        return "\n".join(lines) + "\n"


def _render_entry(key, value, indent: str = "") -> list[str]:
    if isinstance(value, dict):
        lines = [f"{indent}{key}:"]
        for sub in sorted(value):
            lines.extend(_render_entry(sub, value[sub], indent + "  "))
        return lines
    if isinstance(value, list):
        lines = [f"{indent}{key}:"]
        lines.extend(f"{indent}  {item}" for item in value)
        return lines
    return [f"{indent}{key}: {value}"]
