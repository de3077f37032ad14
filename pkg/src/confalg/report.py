"""Verification reports: named groups of residual polynomials.

A check passes iff every residual is the zero polynomial.  Failures keep the
offending basis label and the rendered residual so every failed check is a
reproducible input.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckItem:
    name: str
    residuals: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.residuals

    def add(self, basis: str, poly) -> None:
        if not poly.is_zero:
            self.residuals.append((basis, str(poly)))

    def add_vector(self, basis: str, target_names, vec) -> None:
        for name, p in zip(target_names, vec):
            if not p.is_zero:
                self.residuals.append((f"{basis}->{name}", str(p)))


@dataclass
class Report:
    checks: list[CheckItem] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def new_check(self, name: str) -> CheckItem:
        item = CheckItem(name)
        self.checks.append(item)
        return item

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "checks": [
                {
                    "name": c.name,
                    "ok": c.ok,
                    "residuals": [{"basis": b, "poly": p} for b, p in c.residuals],
                }
                for c in self.checks
            ],
        }

    def summary(self) -> str:
        lines = []
        for c in self.checks:
            state = "ok" if c.ok else f"FAILED ({len(c.residuals)} residuals)"
            lines.append(f"{c.name}: {state}")
        return "\n".join(lines)
