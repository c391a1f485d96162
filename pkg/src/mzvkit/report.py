"""Pass/fail reports shared by the identity checkers and the CLI."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    name: str
    params: tuple = ()
    passed: bool = False
    witness: str | None = None
    seconds: float = 0.0
    suite: str | None = None

    def __post_init__(self):
        if not self.passed and self.witness is None:
            self.witness = "no witness recorded"

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "params": list(self.params),
            "pass": self.passed,
            "seconds": round(self.seconds, 6),
        }
        if self.suite is not None:
            out["suite"] = self.suite
        if not self.passed:
            out["witness"] = self.witness
        return out

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        params = ",".join(str(p) for p in self.params)
        head = f"{status} {self.name}({params})" if params else f"{status} {self.name}"
        if self.suite:
            head = f"[{self.suite}] {head}"
        if not self.passed:
            head += f"  -- {self.witness}"
        return head


def make_report(name, params, witness, seconds, suite=None) -> Report:
    return Report(name=name, params=tuple(params), passed=witness is None,
                  witness=witness, seconds=seconds, suite=suite)
