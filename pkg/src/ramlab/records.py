"""Run manifests, verification reports, and CSV/JSON record schemas.

Fixed field orders (documented in the README):
  count rows:  p, profile, method, count, provenance
  census rows: p, k, points, orders, degree, orbit_count, raw_count,
               wild_rejections, candidates, status, method
Point lists use "inf" for the point at infinity and "-" as the separator
inside a field.  Every persisted number carries the method that produced it.
Timestamps live only in manifests, never in primary outputs, so replaying a
manifest reproduces primary outputs byte for byte.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from datetime import datetime, timezone

from ramlab import __version__

COUNT_FIELDS = ("p", "profile", "method", "count", "provenance")
CENSUS_FIELDS = ("p", "k", "points", "orders", "degree", "orbit_count",
                 "raw_count", "wild_rejections", "candidates", "status", "method")


def fmt_points(points) -> str:
    return "-".join("inf" if P is None else str(P) for P in points)


def fmt_ints(values) -> str:
    return "-".join(str(v) for v in values)


@dataclass
class RunManifest:
    command: str
    params: dict
    version: str = __version__
    deterministic: bool = True
    timestamp: str = ""

    def finalized(self) -> "RunManifest":
        if not self.timestamp:
            self.timestamp = datetime.now(timezone.utc).isoformat()
        return self

    def to_json(self) -> str:
        return json.dumps(
            {"command": self.command, "params": self.params, "version": self.version,
             "deterministic": self.deterministic, "timestamp": self.timestamp},
            indent=2, sort_keys=True) + "\n"

    def save(self, path):
        with open(path, "w") as fh:
            fh.write(self.finalized().to_json())

    @classmethod
    def load(cls, path) -> "RunManifest":
        with open(path) as fh:
            data = json.load(fh)
        return cls(command=data["command"], params=data["params"],
                   version=data.get("version", "?"),
                   deterministic=data.get("deterministic", True),
                   timestamp=data.get("timestamp", ""))


@dataclass
class Check:
    name: str
    status: str  # pass | fail | skipped
    expected: object
    computed: object
    provenance: str

    def line(self) -> str:
        tag = {"pass": "PASS", "fail": "FAIL", "skipped": "SKIP"}[self.status]
        return (f"{tag} {self.name}: expected={self.expected} computed={self.computed}"
                f" [{self.provenance}]")


@dataclass
class VerificationReport:
    suite: str
    checks: list = field(default_factory=list)

    def add(self, name, expected, computed, provenance, ok=None) -> Check:
        if ok is None:
            ok = expected == computed
        c = Check(name, "pass" if ok else "fail", expected, computed, provenance)
        self.checks.append(c)
        return c

    def skip(self, name, provenance, note="") -> Check:
        c = Check(name, "skipped", note, None, provenance)
        self.checks.append(c)
        return c

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def lines(self):
        out = [c.line() for c in self.checks]
        n_fail = sum(1 for c in self.checks if c.status == "fail")
        out.append(f"{self.suite}: {len(self.checks)} checks, "
                   f"{n_fail} failed -> {'PASS' if self.passed else 'FAIL'}")
        return out

    def to_json(self) -> str:
        return json.dumps({
            "suite": self.suite,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "status": c.status,
                 "expected": _jsonable(c.expected), "computed": _jsonable(c.computed),
                 "provenance": c.provenance}
                for c in self.checks
            ],
        }, indent=2, sort_keys=True) + "\n"


def _jsonable(v):
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (str, int, float, bool)) or v is None:
        return v
    return str(v)


# ---------------------------------------------------------------------------
# Count and census records
# ---------------------------------------------------------------------------

def count_record(p, entries, method, count) -> dict:
    return {"p": p, "profile": fmt_ints(entries), "method": method,
            "count": count, "provenance": f"computed:{method}"}


def census_record(result) -> dict:
    return {
        "p": result.p, "k": result.k,
        "points": fmt_points(result.profile.points),
        "orders": fmt_ints(result.profile.orders),
        "degree": result.profile.degree,
        "orbit_count": result.orbit_count,
        "raw_count": result.raw_count,
        "wild_rejections": result.wild_rejections,
        "candidates": result.candidates,
        "status": result.status,
        "method": result.method,
    }


def rows_to_csv(rows, fields) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(fields), lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def representatives_json(result) -> dict:
    doc = census_record(result)
    doc["representatives"] = [
        {"num": [int(c) for c in g.num.coeffs], "den": [int(c) for c in g.den.coeffs]}
        for g in result.representatives
    ]
    return doc
