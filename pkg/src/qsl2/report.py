"""Structured pass/fail reporting shared by all verification suites."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any, Dict, List


@dataclass
class Case:
    id: str
    status: str  # "pass" | "fail" | "skip"
    lhs: str = ""
    rhs: str = ""
    duration_ms: int = 0


@dataclass
class Report:
    suite: str
    params: Dict[str, Any]
    cases: List[Case] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(1 for c in self.cases if c.status == "pass")

    @property
    def failed(self) -> int:
        return sum(1 for c in self.cases if c.status == "fail")

    @property
    def skipped(self) -> int:
        return sum(1 for c in self.cases if c.status == "skip")

    def ok(self) -> bool:
        return self.failed == 0

    def as_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "params": self.params,
            "cases": [
                {
                    "id": c.id,
                    "status": c.status,
                    "lhs": c.lhs,
                    "rhs": c.rhs,
                    "duration_ms": c.duration_ms,
                }
                for c in self.cases
            ],
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
        }


class Recorder:
    """Collects cases for one suite, timing each check since the previous one.

    Failing cases always carry printable left/right renderings; passing cases
    leave them empty to keep reports small.
    """

    def __init__(self, suite: str, params: Dict[str, Any] | None = None) -> None:
        self.report = Report(suite=suite, params=dict(params or {}))
        self._mark = time.perf_counter()

    def _elapsed_ms(self) -> int:
        now = time.perf_counter()
        ms = int((now - self._mark) * 1000)
        self._mark = now
        return ms

    def check_equal(self, case_id: str, lhs: Any, rhs: Any) -> bool:
        ok = lhs == rhs
        self.report.cases.append(
            Case(
                id=case_id,
                status="pass" if ok else "fail",
                lhs="" if ok else str(lhs),
                rhs="" if ok else str(rhs),
                duration_ms=self._elapsed_ms(),
            )
        )
        return ok

    def check_true(self, case_id: str, ok: bool, lhs: str = "", rhs: str = "") -> bool:
        self.report.cases.append(
            Case(
                id=case_id,
                status="pass" if ok else "fail",
                lhs="" if ok else lhs,
                rhs="" if ok else rhs,
                duration_ms=self._elapsed_ms(),
            )
        )
        return ok

    def skip(self, case_id: str, reason: str) -> None:
        self.report.cases.append(
            Case(id=case_id, status="skip", lhs=reason, duration_ms=self._elapsed_ms())
        )

    def done(self) -> Report:
        return self.report


def render_text(reports: List[Report]) -> str:
    """One line per case, plus a single trailing summary line."""
    lines = []
    total = passed = failed = skipped = 0
    for rep in reports:
        for c in rep.cases:
            total += 1
            if c.status == "pass":
                passed += 1
                lines.append(f"[pass] {rep.suite}/{c.id} ({c.duration_ms} ms)")
            elif c.status == "skip":
                skipped += 1
                lines.append(f"[skip] {rep.suite}/{c.id}: {c.lhs}")
            else:
                failed += 1
                lines.append(
                    f"[fail] {rep.suite}/{c.id}: lhs={c.lhs} rhs={c.rhs} ({c.duration_ms} ms)"
                )
    lines.append(f"{total} cases: {passed} passed, {failed} failed, {skipped} skipped")
    return "\n".join(lines)


def render_json(reports: List[Report]) -> str:
    payload: Any
    if len(reports) == 1:
        payload = reports[0].as_dict()
    else:
        payload = [rep.as_dict() for rep in reports]
    return json.dumps(payload, indent=2)
