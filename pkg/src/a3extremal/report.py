"""Report documents and their JSON / CSV serialisation.

Floats are always written with 17 significant digits (``%.17g``), which the
standard ``json`` module cannot be told to do, hence the small writer below.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from importlib import resources

import numpy as np

SCHEMA_VERSION = "1.0"

__all__ = ["SCHEMA_VERSION", "Check", "ReportDocument", "fmt_float", "to_json", "to_csv", "load_schema"]


def fmt_float(x: float) -> str:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"non-finite value {x!r} cannot be serialised")
    return "%.17g" % x


@dataclass
class Check:
    name: str
    passed: bool
    residual: float

    def as_dict(self) -> dict:
        return {"name": self.name, "pass": self.passed, "residual": float(self.residual)}


@dataclass
class ReportDocument:
    command: str
    inputs: dict
    results: dict
    checks: list = field(default_factory=list)
    rows: list = field(default_factory=list)  # flat records for CSV output
    schema_version: str = SCHEMA_VERSION

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "checks": [c.as_dict() for c in self.checks],
        }


def _encode(obj, indent: int, level: int) -> str:
    pad, inner = " " * (indent * level), " " * (indent * (level + 1))
    if obj is None:
        return "null"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return fmt_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, np.ndarray):
        obj = obj.tolist()
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {_encode(v, indent, level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(v, (int, float, np.number)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(_encode(v, indent, level + 1) for v in obj) + "]"
        items = [inner + _encode(v, indent, level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def to_json(doc: ReportDocument, indent: int = 2) -> str:
    return _encode(doc.as_dict(), indent, 0) + "\n"


def _cell(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return fmt_float(v)
    return str(v)


def to_csv(doc: ReportDocument) -> str:
    if not doc.rows:
        return ""
    buf = io.StringIO()
    header = list(doc.rows[0].keys())
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in doc.rows:
        w.writerow([_cell(row[h]) for h in header])
    return buf.getvalue()


def load_schema() -> dict:
    return json.loads(resources.files(__package__).joinpath("report.schema.json").read_text())
