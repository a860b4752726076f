"""Machine-checked witness reports shared by the demos and the CLI."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .core import Bicomplex, Hyperbolic


def to_jsonable(obj):
    """Recursively convert library values to plain JSON data."""
    if isinstance(obj, (Bicomplex, Hyperbolic)):
        return obj.to_json()
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else str(obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if hasattr(obj, "tolist"):
        return to_jsonable(obj.tolist())
    return obj


@dataclass
class Check:
    name: str
    passed: bool
    residual: float = 0.0

    def to_json(self):
        return {"name": self.name, "pass": bool(self.passed), "residual": float(self.residual)}


@dataclass
class Report:
    claim: str
    witnesses: list = field(default_factory=list)
    checks: list = field(default_factory=list)

    def check(self, name, passed, residual=0.0):
        self.checks.append(Check(name, bool(passed), float(residual)))
        return bool(passed)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.passed

    def to_json(self):
        return {
            "claim": self.claim,
            "witnesses": to_jsonable(self.witnesses),
            "checks": [c.to_json() for c in self.checks],
        }

    def dumps(self):
        return json.dumps(self.to_json(), indent=2)

    def render_text(self):
        lines = [self.claim]
        for w in self.witnesses:
            lines.append(f"  witness: {json.dumps(to_jsonable(w))}")
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"  [{mark}] {c.name} (residual {c.residual:.3g})")
        return "\n".join(lines)
