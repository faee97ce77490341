from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Report:
    """Outcome of a verification: violations are data, never exceptions."""

    check: str
    params: dict[str, Any] = field(default_factory=dict)
    violations: list[Any] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.check,
            "params": self.params,
            "passed": self.passed,
            "violations": self.violations,
            "details": self.details,
        }
