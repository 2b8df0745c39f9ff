"""Report documents: a JSON-compatible data model with two renderers.

Rationals are carried as "p/q" strings, keys are emitted sorted, and
nothing time- or machine-dependent is ever included, so rendering the
same document twice gives identical bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Verdict:
    """One named identity check with its outcome."""

    name: str
    passed: bool
    detail: str = ""


@dataclass
class ReportDocument:
    command: str
    genus: int
    params: dict = field(default_factory=dict)
    inputs: dict = field(default_factory=dict)
    outputs: dict = field(default_factory=dict)
    verdicts: list[Verdict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def to_data(self) -> dict:
        return {
            "command": self.command,
            "genus": self.genus,
            "params": self.params,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "verdicts": [{"name": v.name, "passed": v.passed, "detail": v.detail}
                         for v in sorted(self.verdicts, key=lambda v: v.name)],
            "status": "PASS" if self.passed else "FAIL",
        }

    def to_json(self) -> str:
        return json.dumps(self.to_data(), sort_keys=True, indent=2,
                          ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        data = self.to_data()
        lines: list[str] = []

        def emit(key, value, indent):
            pad = "  " * indent
            if isinstance(value, dict):
                lines.append(f"{pad}{key}:")
                for k in sorted(value):
                    emit(k, value[k], indent + 1)
            elif isinstance(value, list):
                lines.append(f"{pad}{key}:")
                for item in value:
                    lines.append(f"{pad}  - {item}")
            else:
                lines.append(f"{pad}{key}: {value}")

        for key in ("command", "genus", "params", "inputs", "outputs"):
            emit(key, data[key], 0)
        lines.append("verdicts:")
        for v in sorted(self.verdicts, key=lambda v: v.name):
            mark = "PASS" if v.passed else "FAIL"
            suffix = f"  ({v.detail})" if v.detail else ""
            lines.append(f"  {mark} {v.name}{suffix}")
        lines.append(f"status: {data['status']}")
        return "\n".join(lines) + "\n"
