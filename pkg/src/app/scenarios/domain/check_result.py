from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np


@dataclass
class CheckResult:
    """
    One acceptance check. ``series`` rows, when present, are written to
    ``<name>.csv`` next to the summary.
    """
    name: str
    value: float
    limit: float
    passed: bool
    target: Optional[float] = None
    series: List[dict] = field(default_factory=list)

    @classmethod
    def upper_bound(cls, name: str, value: float, limit: float, series: Optional[List[dict]] = None) -> "CheckResult":
        value = float(value)
        return cls(name, value, float(limit), bool(np.isfinite(value) and value <= limit), series=series or [])

    @classmethod
    def lower_bound(cls, name: str, value: float, limit: float, series: Optional[List[dict]] = None) -> "CheckResult":
        value = float(value)
        return cls(name, value, float(limit), bool(np.isfinite(value) and value >= limit), series=series or [])

    @classmethod
    def slope(
        cls,
        name: str,
        value: float,
        target: float,
        tolerance: float,
        series: Optional[List[dict]] = None,
    ) -> "CheckResult":
        value = float(value)
        passed = bool(np.isfinite(value) and abs(value - target) <= tolerance)
        return cls(name, value, float(tolerance), passed, float(target), series or [])

    def to_dict(self) -> dict:
        record = {"name": self.name, "value": self.value, "limit": self.limit, "passed": self.passed}
        if self.target is not None:
            record["target"] = self.target
        return record


@dataclass
class SuiteReport:
    suite: str
    checks: List[CheckResult] = field(default_factory=list)
    config: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[str]:
        return [check.name for check in self.checks if not check.passed]

    def summary(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [check.to_dict() for check in self.checks],
            "config": self.config,
        }
