"""Machine-readable output records.

Every evaluation produces one JSON object with the keys below, always in
this order, unused keys set to ``null``.  Floats are written with 17
significant digits so that they read back bit-exactly.  The JSON Schema is
shipped as ``output_record.schema.json`` next to this module.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from importlib import resources
from typing import Any, Optional

from .algebra import Multivector
from .closed import MixingScalars
from .textio import format_number

KEYS = ("command", "algebra", "function", "t", "input", "result", "mixing",
        "branch", "engine", "series", "discrepancy", "series_result")


@dataclass
class OutputRecord:
    command: str
    algebra: tuple[int, int]
    input: Multivector
    result: Multivector
    engine: str
    function: Optional[str] = None
    t: Optional[float] = None
    mixing: Optional[MixingScalars] = None
    branch: Optional[str] = None
    series: Optional[dict] = field(default=None)
    discrepancy: Optional[float] = None
    series_result: Optional[Multivector] = None

    def to_dict(self) -> dict[str, Any]:
        mix = None
        if self.mixing is not None:
            m = self.mixing
            mix = {"a_plus_sq": m.a_plus_sq, "a_minus_sq": m.a_minus_sq,
                   "a_plus": m.a_plus, "a_minus": m.a_minus}
        values = {
            "command": self.command,
            "algebra": list(self.algebra),
            "function": self.function,
            "t": self.t,
            "input": _coeffs(self.input),
            "result": _coeffs(self.result),
            "mixing": mix,
            "branch": self.branch,
            "engine": self.engine,
            "series": self.series,
            "discrepancy": self.discrepancy,
            "series_result": _coeffs(self.series_result) if self.series_result is not None else None,
        }
        return {k: values[k] for k in KEYS}

    def to_json(self) -> str:
        return dumps(self.to_dict())


def _coeffs(mv: Multivector) -> list[float]:
    return [float(x) for x in mv.coeffs]


def dumps(obj: Any) -> str:
    """Compact JSON with insertion-ordered keys and 17-digit floats."""
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            raise ValueError(f"cannot serialise non-finite number {obj!r}")
        return format_number(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def load_schema() -> dict:
    text = resources.files("mvexp").joinpath("output_record.schema.json").read_text()
    return json.loads(text)
