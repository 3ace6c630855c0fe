"""Uniform pass/fail reporting for verification suites.

Reports serialize deterministically: cases are sorted by id, JSON keys are
sorted, and no timing or host information is embedded, so byte-identical
output across runs and worker counts is a hard guarantee.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Optional


@dataclass(frozen=True)
class CaseResult:
    case_id: str
    ok: bool
    detail: str = ""

    @property
    def status(self) -> str:
        return "pass" if self.ok else "fail"


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    anchor: str                 # plain-language statement of the identity checked
    params: dict
    cases: tuple[CaseResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cases)

    def sorted_cases(self) -> list[CaseResult]:
        return sorted(self.cases, key=lambda c: c.case_id)

    def to_json_obj(self) -> dict:
        return {
            "suite": self.suite,
            "anchor": self.anchor,
            "params": self.params,
            "ok": self.ok,
            "cases": [
                {"id": c.case_id, "status": c.status, "detail": c.detail}
                for c in self.sorted_cases()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2, sort_keys=True)

    def to_csv(self) -> str:
        lines = ["id,status,detail"]
        for c in self.sorted_cases():
            detail = c.detail.replace('"', "'")
            lines.append(f'{c.case_id},{c.status},"{detail}"')
        return "\n".join(lines) + "\n"


def make_report(suite: str, anchor: str, params: dict,
                cases: Iterable[CaseResult]) -> SuiteReport:
    return SuiteReport(suite, anchor, dict(params), tuple(cases))


def default_jobs() -> int:
    env = os.environ.get("QLAB_JOBS", "")
    try:
        n = int(env)
    except ValueError:
        return 1
    return max(1, n)


def run_cases(tasks: list[tuple[str, Callable[[], tuple[bool, str]]]],
              jobs: Optional[int] = None) -> list[CaseResult]:
    """Evaluate (case_id, thunk) pairs, optionally on a thread pool.

    Results keep the input order regardless of worker count, so reports are
    byte-identical for any jobs value.
    """
    n = default_jobs() if jobs is None else max(1, jobs)

    def run_one(task: tuple[str, Callable[[], tuple[bool, str]]]) -> CaseResult:
        case_id, thunk = task
        try:
            ok, detail = thunk()
        except Exception as exc:  # a crashed case is a failed case
            return CaseResult(case_id, False, f"error: {exc!r}")
        return CaseResult(case_id, ok, detail)

    if n == 1 or len(tasks) <= 1:
        return [run_one(t) for t in tasks]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(run_one, tasks))
