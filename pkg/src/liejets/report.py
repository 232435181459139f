"""Check results and verification reports.

Every verification driver returns a :class:`CheckResult`; a full run bundles
them into a :class:`VerificationReport` keyed by check id, so the output
doubles as a traceability matrix over the claim catalog.
"""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["CheckResult", "VerificationReport", "merge_results"]

PASS = "pass"
FAIL = "fail"


@dataclass
class CheckResult:
    """Outcome of a single named check."""

    check: str
    status: str
    detail: dict = field(default_factory=dict)
    counterexample: dict | None = None
    seconds: float | None = None

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self, include_timing: bool = True) -> dict:
        doc: dict = {"check": self.check, "status": self.status, "detail": self.detail}
        if self.counterexample is not None:
            doc["counterexample"] = self.counterexample
        if include_timing and self.seconds is not None:
            doc["seconds"] = round(self.seconds, 6)
        return doc


@dataclass
class VerificationReport:
    """Ordered collection of check results plus run metadata."""

    checks: list[CheckResult]
    seed: int
    versions: dict

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self, include_timing: bool = True) -> dict:
        return {
            "checks": [c.to_json(include_timing) for c in self.checks],
            "seed": self.seed,
            "versions": self.versions,
        }


def merge_results(check_id: str, results: list[CheckResult]) -> CheckResult:
    """Fold per-instance results (e.g. one per algebra) into one check."""
    status = PASS if all(r.passed for r in results) else FAIL
    detail = {r.detail.get("algebra", str(i)): r.detail for i, r in enumerate(results)}
    counterexample = next(
        (r.counterexample for r in results if r.counterexample is not None), None
    )
    return CheckResult(check_id, status, detail, counterexample)
