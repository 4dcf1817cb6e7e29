"""Residual checks and the JSON report shape shared by verifiers and the CLI."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    name: str
    residual: float
    tolerance: float
    # for rejection checks the residual must stay *above* the tolerance
    minimum: bool = False
    detail: str = ""

    @property
    def passed(self) -> bool:
        if math.isnan(self.residual):
            return False
        if self.minimum:
            return bool(self.residual >= self.tolerance)
        return bool(self.residual < self.tolerance)

    def to_dict(self) -> dict[str, Any]:
        residual = None if math.isnan(self.residual) else float(self.residual)
        out = {"name": self.name, "residual": residual,
               "tolerance": float(self.tolerance), "pass": bool(self.passed)}
        if self.minimum:
            out["kind"] = "lower-bound"
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class Report:
    command: str
    inputs: dict[str, Any]
    checks: list[Check] = field(default_factory=list)
    extra: dict[str, Any] = field(default_factory=dict)

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def to_dict(self) -> dict[str, Any]:
        out = {"command": self.command, "inputs": self.inputs,
               "checks": [c.to_dict() for c in self.checks], "overall": bool(self.overall)}
        out.update(self.extra)
        return out
