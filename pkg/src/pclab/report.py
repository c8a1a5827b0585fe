"""Check results and the line-oriented report format.

Each check prints as ``CHECK <id> <PASS|FAIL|WARN> [key=value ...]`` and the
same records can be dumped as JSON (big integers as decimal strings).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

PASS, FAIL, WARN = "PASS", "FAIL", "WARN"


@dataclass
class CheckResult:
    id: str
    status: str
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def line(self) -> str:
        extra = " ".join(f"{k}={_fmt(v)}" for k, v in self.details.items())
        return f"CHECK {self.id} {self.status}" + (f" {extra}" if extra else "")

    def to_json(self) -> dict:
        return {"id": self.id, "status": self.status,
                "details": {k: _jsonable(v) for k, v in self.details.items()}}


def _fmt(v) -> str:
    if isinstance(v, float) and v == float("inf"):
        return "inf"
    if isinstance(v, (list, tuple)):
        return ",".join(_fmt(x) for x in v)
    return str(v).replace(" ", "")


def _jsonable(v):
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return "inf" if v == float("inf") else v
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return str(v)


class Report:
    """Collects results in order; optionally echoes lines as they arrive."""

    def __init__(self, stream=None):
        self.results: list[CheckResult] = []
        self.stream = stream

    def add(self, result: CheckResult) -> CheckResult:
        self.results.append(result)
        if self.stream is not None:
            print(result.line(), file=self.stream, flush=True)
        return result

    def extend(self, results):
        for r in results:
            self.add(r)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def counts(self) -> dict:
        out = {PASS: 0, FAIL: 0, WARN: 0}
        for r in self.results:
            out[r.status] += 1
        return out

    def to_json(self, config: dict | None = None) -> str:
        return json.dumps({"config": config or {}, "counts": self.counts(),
                           "checks": [r.to_json() for r in self.results]}, indent=2)
