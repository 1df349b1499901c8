import json
from dataclasses import asdict, dataclass, field
from typing import Iterable, List

import numpy as np


@dataclass(frozen=True)
class CheckResult:
    name: str
    max_residual: float
    mean_residual: float
    tolerance: float
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    suite: str
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def add(self, check: CheckResult) -> CheckResult:
        self.checks.append(check)
        return check

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [asdict(check) for check in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"suite: {self.suite}"]
        for check in self.checks:
            status = "PASS" if check.passed else "FAIL"
            lines.append(
                f"  [{status}] {check.name}: max={check.max_residual:.3e} "
                f"mean={check.mean_residual:.3e} tol={check.tolerance:.1e}"
                + (f"  ({check.detail})" if check.detail else "")
            )
        lines.append(f"verdict: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"


def residual_check(name: str, residuals: Iterable[float], tolerance: float, detail: str = "") -> CheckResult:
    """Pass iff every |residual| <= tolerance. An empty sample fails."""
    values = np.abs(np.asarray(list(residuals), dtype=float))
    if values.size == 0:
        return CheckResult(name, float("nan"), float("nan"), tolerance, False, "no samples")
    if not np.all(np.isfinite(values)):
        return CheckResult(name, float("inf"), float("inf"), tolerance, False, "non-finite residual")
    max_residual = float(values.max())
    return CheckResult(name, max_residual, float(values.mean()), tolerance, max_residual <= tolerance, detail)


def lower_bound_check(name: str, values: Iterable[float], minimum: float, detail: str = "") -> CheckResult:
    """Pass iff max |value| exceeds `minimum` (negative controls)."""
    arr = np.abs(np.asarray(list(values), dtype=float))
    if arr.size == 0 or not np.all(np.isfinite(arr)):
        return CheckResult(name, float("nan"), float("nan"), minimum, False, "no finite samples")
    max_value = float(arr.max())
    return CheckResult(name, max_value, float(arr.mean()), minimum, max_value > minimum, detail)
