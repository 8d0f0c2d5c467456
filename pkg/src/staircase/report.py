"""Check reports shared by the library, the CLI and the acceptance tests."""

from dataclasses import dataclass, field
import json
import time

__all__ = ["CheckReport", "timed", "all_passed"]

PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"


@dataclass
class CheckReport:
    name: str
    status: str
    detail: str = ""
    runtime: float = 0.0
    children: list = field(default_factory=list)

    @property
    def passed(self):
        return self.status == PASS

    def line(self):
        text = f"{self.status} {self.name}"
        if self.detail:
            text += f": {self.detail}"
        return text

    def to_json(self, with_runtime=False):
        data = {"name": self.name, "status": self.status, "detail": self.detail}
        if with_runtime:
            data["runtime"] = round(self.runtime, 3)
        return json.dumps(data, sort_keys=True)

    def __bool__(self):
        return self.passed

    @classmethod
    def combine(cls, name, reports, detail=""):
        reports = list(reports)
        failed = [r for r in reports if r.status == FAIL]
        status = FAIL if failed else PASS
        if failed and not detail:
            detail = "; ".join(r.line() for r in failed[:3])
        return cls(name, status, detail, sum(r.runtime for r in reports), reports)


def check(name, ok, detail=""):
    return CheckReport(name, PASS if ok else FAIL, "" if ok else detail)


def timed(name, fn, *args, **kw):
    """Run ``fn`` (returning ``(ok, detail)`` or a CheckReport) and time it."""
    t0 = time.perf_counter()
    out = fn(*args, **kw)
    dt = time.perf_counter() - t0
    if isinstance(out, CheckReport):
        out.runtime = dt
        return out
    ok, detail = out
    rep = check(name, ok, detail)
    rep.runtime = dt
    return rep


def all_passed(reports):
    return all(r.status != FAIL for r in reports)
