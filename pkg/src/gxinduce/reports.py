"""Check results shared by every validator."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterator, Optional

__all__ = ["CheckResult", "CheckReport"]


@dataclass
class CheckResult:
    """Outcome of one named check; ``witness`` locates the first failure."""

    check_id: str
    passed: bool
    witness: Optional[Any] = None
    detail: str = ""
    count: int = 0

    def to_json(self) -> dict:
        out = {"check": self.check_id, "passed": self.passed, "count": self.count}
        if self.witness is not None:
            out["witness"] = _jsonable(self.witness)
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class CheckReport:
    suite: str
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def add(self, result: CheckResult) -> CheckResult:
        self.results.append(result)
        return result

    def extend(self, other: "CheckReport") -> None:
        self.results.extend(other.results)

    def __iter__(self) -> Iterator[CheckResult]:
        return iter(self.results)

    def __getitem__(self, check_id: str) -> CheckResult:
        for r in self.results:
            if r.check_id == check_id:
                return r
        raise KeyError(check_id)

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def to_json(self) -> dict:
        return {"suite": self.suite, "passed": self.passed, "checks": [r.to_json() for r in self.results]}

    def summary(self) -> str:
        lines = [f"[{self.suite}] {'PASS' if self.passed else 'FAIL'}"]
        for r in self.results:
            tag = "ok  " if r.passed else "FAIL"
            extra = f" witness={_jsonable(r.witness)}" if r.witness is not None else ""
            lines.append(f"  {tag} {r.check_id} ({r.count} cases){extra}")
        return "\n".join(lines)


class Tally:
    """Accumulates a single check over many cases, remembering the first failure."""

    def __init__(self, check_id: str) -> None:
        self.check_id = check_id
        self.count = 0
        self.witness = None
        self.failed = False
        self.detail = ""

    def record(self, ok: bool, witness: Any, detail: str = "") -> bool:
        self.count += 1
        if not ok and not self.failed:
            self.failed = True
            self.witness = witness
            self.detail = detail
        return ok

    def result(self) -> CheckResult:
        return CheckResult(self.check_id, not self.failed, self.witness, self.detail, self.count)


def _jsonable(x: Any) -> Any:
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return str(x)
