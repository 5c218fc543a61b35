"""
Verification report domain model
"""

from dataclasses import dataclass, field
from datetime import datetime
from typing import Dict, List, Optional


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one verification check"""
    scope: str
    name: str
    passed: bool
    detail: str = ""
    counterexample: str = ""
    elapsed_seconds: float = 0.0


@dataclass
class ScopeSummary:
    """Pass/fail tally for one scope"""
    scope: str
    total: int
    passed: int

    @property
    def failed(self) -> int:
        return self.total - self.passed


@dataclass
class VerificationReport:
    """
    Collected results of a verification run
    """
    scopes: List[str]
    started_at: datetime = field(default_factory=datetime.now)
    results: List[CheckResult] = field(default_factory=list)

    def add(self, result: CheckResult) -> CheckResult:
        self.results.append(result)
        return result

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    @property
    def failures(self) -> List[CheckResult]:
        return [result for result in self.results if not result.passed]

    @property
    def first_failure(self) -> Optional[CheckResult]:
        failures = self.failures
        return failures[0] if failures else None

    def summary(self) -> Dict[str, ScopeSummary]:
        """Per-scope tallies in the order scopes were first seen"""
        tallies: Dict[str, ScopeSummary] = {}
        for result in self.results:
            tally = tallies.setdefault(result.scope, ScopeSummary(result.scope, 0, 0))
            tally.total += 1
            tally.passed += int(result.passed)
        return tallies
