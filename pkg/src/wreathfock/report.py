"""Check reports shared by the verification suites and the CLI."""
from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class CheckResult:
    name: str
    passed: bool
    witness: str | None = None

    def to_json_obj(self):
        obj = {"name": self.name, "status": "pass" if self.passed else "fail"}
        if self.witness is not None:
            obj["witness"] = self.witness
        return obj


@dataclass
class Report:
    """Deterministic run report; timing is kept in memory only so that
    serialized output stays byte-stable across runs."""

    command: str
    checks: list[CheckResult] = field(default_factory=list)
    elapsed_seconds: float | None = None

    def add(self, name: str, passed: bool, witness: str | None = None):
        self.checks.append(CheckResult(name, passed, witness))

    def extend(self, results):
        self.checks.extend(results)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self) -> CheckResult | None:
        for c in self.checks:
            if not c.passed:
                return c
        return None

    def to_json(self) -> str:
        return json.dumps({
            "schema": "wreathfock-report/1",
            "command": self.command,
            "all_passed": self.all_passed,
            "checks": [c.to_json_obj() for c in self.checks],
        }, indent=2, sort_keys=False)

    def to_table(self) -> str:
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"[{status}] {c.name}"
            if c.witness:
                line += f"  ({c.witness})"
            lines.append(line)
        lines.append(f"{sum(c.passed for c in self.checks)}/{len(self.checks)} checks passed")
        return "\n".join(lines)
