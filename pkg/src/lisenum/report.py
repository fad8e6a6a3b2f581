"""Structured pass/fail records for verification runs."""

from __future__ import annotations

from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a single named check.

    ``witness`` carries the counterexample for failures, or the recorded
    value for points that were evaluated but deliberately not asserted.
    """

    name: str
    status: str
    witness: str | None = None
    group: str = ""

    def as_dict(self) -> dict:
        d: dict = {"group": self.group, "name": self.name, "status": self.status}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


def passed(name: str, group: str = "") -> CheckResult:
    return CheckResult(name, PASS, None, group)


def failed(name: str, witness: str, group: str = "") -> CheckResult:
    return CheckResult(name, FAIL, witness, group)


def skipped(name: str, witness: str, group: str = "") -> CheckResult:
    return CheckResult(name, SKIPPED, witness, group)


@dataclass
class VerificationReport:
    """A deterministic collection of check results for one suite run."""

    suite: str
    bounds: dict
    checks: list[CheckResult] = field(default_factory=list)
    runtime_seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not any(c.status == FAIL for c in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status == FAIL]

    def totals(self) -> dict:
        t = {PASS: 0, FAIL: 0, SKIPPED: 0}
        for c in self.checks:
            t[c.status] += 1
        return t

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "bounds": dict(self.bounds),
            "runtime_seconds": self.runtime_seconds,
            "totals": self.totals(),
            "checks": [c.as_dict() for c in self.checks],
        }

    def summary(self) -> str:
        """Human-readable digest.  Deliberately free of timing information
        so that identical invocations print identical bytes."""
        t = self.totals()
        lines = [
            f"suite {self.suite}: {t[PASS]} passed, {t[FAIL]} failed, "
            f"{t[SKIPPED]} skipped ({len(self.checks)} checks)"
        ]
        by_group: dict[str, dict] = {}
        for c in self.checks:
            g = by_group.setdefault(c.group, {PASS: 0, FAIL: 0, SKIPPED: 0})
            g[c.status] += 1
        for name in sorted(by_group):
            g = by_group[name]
            lines.append(
                f"  {name or '(ungrouped)'}: {g[PASS]} passed, {g[FAIL]} failed, "
                f"{g[SKIPPED]} skipped"
            )
        for c in self.failures:
            lines.append(f"  FAIL [{c.group}] {c.name}: {c.witness}")
        return "\n".join(lines)
