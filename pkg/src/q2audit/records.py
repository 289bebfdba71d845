"""Audit records and the JSONL / CSV report writers.

Every record has the same columns, in this order:

    check        name of the verified statement (e.g. "lemma1c", "hudson")
    p            modulus, or p0 for table rows
    c            character exponent index (empty when not applicable)
    mode         "tabled" | "quadratic" | ""
    order        order of the character
    h, r, u, H   parameters of the check, when applicable
    X            real parameter (H/(2h), or grid abscissa)
    value        computed quantity
    bound        bound it is compared against
    margin       bound - value for upper bounds, value - bound for lower bounds
    tolerance    absolute slack: the record passes iff margin >= -tolerance
    passed       bool
    informational  bool; informational failures do not affect the exit code
    note         free text (aggregation details, hypothesis status)
    elapsed      seconds, only when timing was requested (else null)
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field, fields
from typing import Any, Iterable

import numpy as np


@dataclass
class AuditRecord:
    check: str
    p: int | None = None
    c: int | None = None
    mode: str = ""
    order: int | None = None
    h: int | None = None
    r: int | None = None
    u: int | None = None
    H: int | None = None
    X: float | None = None
    value: float | int | None = None
    bound: float | int | None = None
    margin: float | None = None
    tolerance: float = 0.0
    passed: bool = True
    informational: bool = False
    note: str = ""
    elapsed: float | None = None

    @classmethod
    def upper(cls, check: str, value, bound, tolerance: float = 0.0, **kw) -> AuditRecord:
        value, bound = _num(value), _num(bound)
        margin = _num(bound - value)
        return cls(check, value=value, bound=bound, margin=margin, tolerance=tolerance,
                   passed=margin >= -tolerance, **kw)

    @classmethod
    def lower(cls, check: str, value, bound, tolerance: float = 0.0, **kw) -> AuditRecord:
        value, bound = _num(value), _num(bound)
        margin = _num(value - bound)
        return cls(check, value=value, bound=bound, margin=margin, tolerance=tolerance,
                   passed=margin >= -tolerance, **kw)

    @property
    def key(self) -> tuple:
        return tuple(-1 if v is None else v for v in (self.p, self.c, self.h, self.r, self.u, self.H, self.X))

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> AuditRecord:
        names = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in d.items() if k in names})


FIELDS = tuple(f.name for f in fields(AuditRecord))


def _num(x):
    """Plain int/float for JSON; mpf and numpy scalars are converted."""
    if isinstance(x, (bool, int, np.integer)):
        return int(x)
    return float(x)


@dataclass
class Report:
    name: str
    records: list[AuditRecord] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def violations(self) -> list[AuditRecord]:
        return [r for r in self.records if not r.passed and not r.informational]

    @property
    def informational_failures(self) -> list[AuditRecord]:
        return [r for r in self.records if not r.passed and r.informational]

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def min_margin(self) -> float | None:
        ms = [r.margin for r in self.records if r.margin is not None and not r.informational]
        return min(ms) if ms else None

    def summary(self) -> dict[str, Any]:
        by_check: dict[str, int] = {}
        for r in self.records:
            by_check[r.check] = by_check.get(r.check, 0) + 1
        return {
            "report": self.name,
            "records": len(self.records),
            "by_check": by_check,
            "violations": len(self.violations),
            "informational_failures": len(self.informational_failures),
            "min_margin": self.min_margin(),
            "elapsed": round(self.elapsed, 3),
        }

    def extend(self, other: Report) -> None:
        self.records.extend(other.records)
        self.elapsed += other.elapsed


def _json_value(v):
    if isinstance(v, float) and not math.isfinite(v):
        return str(v)
    return v


def to_jsonl(records: Iterable[AuditRecord]) -> str:
    return "".join(
        json.dumps({k: _json_value(v) for k, v in r.to_dict().items()}) + "\n" for r in records
    )


def to_csv(records: Iterable[AuditRecord]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
    w.writeheader()
    for r in records:
        w.writerow({k: "" if v is None else v for k, v in r.to_dict().items()})
    return buf.getvalue()


def render(records: Iterable[AuditRecord], fmt: str) -> str:
    if fmt == "jsonl":
        return to_jsonl(records)
    if fmt == "csv":
        return to_csv(records)
    raise ValueError(f"unknown format {fmt!r}")


def read_jsonl(text: str) -> list[AuditRecord]:
    return [AuditRecord.from_dict(json.loads(line)) for line in text.splitlines() if line.strip()]
