"""Uniform pass/fail report for identity checks."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    """Outcome of an exhaustive exact check over a stated range.

    ``counterexample`` holds the first failing instance (JSON-able), or None.
    ``data`` carries any extra payload a check contract promises, e.g. a
    coefficient table.
    """

    claim: str
    range: dict
    status: str  # "pass" | "fail"
    counterexample: dict | None = None
    data: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        out = {
            "claim": self.claim,
            "range": self.range,
            "status": self.status,
            "counterexample": self.counterexample,
        }
        out.update(self.data)
        return out


def passing(claim: str, rng: dict, **data) -> Report:
    return Report(claim, rng, "pass", None, dict(data))


def failing(claim: str, rng: dict, counterexample: dict, **data) -> Report:
    return Report(claim, rng, "fail", counterexample, dict(data))
