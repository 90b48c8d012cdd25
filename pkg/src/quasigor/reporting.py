"""Verification reports: per-step records with computed vs expected values.

A report collects labelled steps; a step with an expected value is an
assertion, one without is informational (used by the experimental field
paths, which compute the same quantities but assert nothing).  JSON
serialization follows the shipped schema (data/report_schema.json,
versioned via ``schema_version``).
"""

from __future__ import annotations

from dataclasses import dataclass, field


SCHEMA_VERSION = "1"


@dataclass(frozen=True)
class Step:
    label: str
    value: object
    expected: object = None
    asserted: bool = False

    @property
    def passed(self):
        if not self.asserted:
            return None
        return self.value == self.expected


@dataclass
class VerificationReport:
    command: str
    field_label: str
    experimental: bool = False
    steps: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    timings_ms: dict = field(default_factory=dict)

    def add(self, label: str, value, expected=None, asserted: bool = False):
        self.steps.append(Step(label, value, expected, asserted))
        return value

    @property
    def passed(self) -> bool:
        return all(s.passed is not False for s in self.steps)

    @property
    def failed_steps(self):
        return [s for s in self.steps if s.passed is False]

    def to_json_dict(self, include_timings: bool = True) -> dict:
        out = {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "field": self.field_label,
            "status": "experimental" if self.experimental else ("pass" if self.passed else "fail"),
        }
        out.update(self.summary)
        out["steps"] = [
            {
                "label": s.label,
                "value": s.value,
                "expected": s.expected,
                "pass": s.passed,
            }
            for s in self.steps
        ]
        out["timings_ms"] = (
            {k: round(v, 1) for k, v in self.timings_ms.items()} if include_timings else {}
        )
        return out

    def render_text(self, include_timings: bool = False) -> str:
        lines = [f"{self.command} over {self.field_label}"]
        width = max(len(s.label) for s in self.steps) if self.steps else 0
        for s in self.steps:
            if s.asserted:
                mark = "PASS" if s.passed else "FAIL"
                lines.append(f"  {s.label:<{width}}  {s.value!s:>6}  expected {s.expected!s:>6}  {mark}")
            else:
                lines.append(f"  {s.label:<{width}}  {s.value!s:>6}")
        if self.experimental:
            lines.append("  status: experimental, no assertions")
        else:
            lines.append(f"  overall: {'PASS' if self.passed else 'FAIL'}")
        if include_timings and self.timings_ms:
            total = sum(self.timings_ms.values())
            lines.append(f"  time: {total / 1000.0:.1f}s")
        return "\n".join(lines)
