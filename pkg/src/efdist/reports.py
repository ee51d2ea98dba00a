"""Structured experiment records with deterministic JSON serialization.

A report's verdict is ``pass`` only when every checked instance satisfied
the claimed inequality or equality, ``fail`` when a counterexample was
found, and ``data-only`` when the run records measurements without judging
a claim (or had to stop at a resource ceiling).

Serialized report files are byte-stable given identical inputs and seeds:
``runtime_ms`` is written as 0 unless timings are explicitly requested,
keys are sorted, and values are normalized (fractions to "p/q" strings,
infinities to "infinity").
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction

__all__ = ["Report", "reports_to_json", "render_text", "stopwatch_ms"]

PASS = "pass"
FAIL = "fail"
DATA_ONLY = "data-only"


@dataclass
class Report:
    experiment: str
    claim: str
    inputs: dict = field(default_factory=dict)
    computed: dict = field(default_factory=dict)
    verdict: str = DATA_ONLY
    runtime_ms: int = 0

    def to_json(self, include_runtime: bool = False) -> dict:
        return {
            "experiment": self.experiment,
            "claim": self.claim,
            "inputs": _jsonable(self.inputs),
            "computed": _jsonable(self.computed),
            "verdict": self.verdict,
            "runtime_ms": self.runtime_ms if include_runtime else 0,
        }


def _jsonable(value):
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        if math.isinf(value):
            return "infinity"
        return value
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (str, int, bool)) or value is None:
        return value
    return str(value)


def reports_to_json(reports, include_runtime: bool = False) -> str:
    payload = [r.to_json(include_runtime) for r in reports]
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=True) + "\n"


def render_text(reports) -> str:
    lines = []
    for r in reports:
        lines.append(f"[{r.verdict.upper():9s}] {r.experiment}")
        lines.append(f"  claim: {r.claim}")
        if r.inputs:
            lines.append(f"  inputs: {json.dumps(_jsonable(r.inputs), sort_keys=True)}")
        for key in sorted(r.computed):
            lines.append(f"  {key}: {json.dumps(_jsonable(r.computed[key]), sort_keys=True)}")
        lines.append(f"  runtime: {r.runtime_ms} ms")
    return "\n".join(lines) + "\n"


class stopwatch_ms:
    """``with stopwatch_ms() as t: ...; report.runtime_ms = t.elapsed``"""

    def __enter__(self):
        self._start = time.perf_counter()
        self.elapsed = 0
        return self

    def __exit__(self, *exc):
        self.elapsed = int((time.perf_counter() - self._start) * 1000)
        return False
