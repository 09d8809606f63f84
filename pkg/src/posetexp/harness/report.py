from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Optional

from ..exponent import DEFAULT_CAP

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"
EXPLORATORY = "exploratory"


@dataclass
class CheckConfig:
    """Bounds for one harness run.

    ``n_max`` overrides every check's own default operand size when set.
    ``witness_n`` bounds the size of searched witnesses; ``None`` means the
    provable bound for each search (so a miss is a real failure).
    """

    n_max: Optional[int] = None
    cap: int = DEFAULT_CAP
    witness_n: Optional[int] = None
    jobs: int = 1
    catalog_n: int = 7
    sample_rate: float = 0.05
    seed: int = 1978

    def __post_init__(self):
        for name in ("cap", "jobs", "catalog_n"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.n_max is not None and self.n_max <= 0:
            raise ValueError("n_max must be positive")
        if self.witness_n is not None and self.witness_n <= 0:
            raise ValueError("witness_n must be positive")

    def size(self, default: int) -> int:
        return self.n_max if self.n_max is not None else default


@dataclass
class VerificationReport:
    check_name: str
    universe: dict
    cases_attempted: int = 0
    cases_skipped_cap: list = field(default_factory=list)
    failures: list = field(default_factory=list)
    inconclusive: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)
    counts: dict = field(default_factory=dict)
    elapsed: float = 0.0
    exploratory: bool = False
    max_witnesses: int = 25

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def status(self) -> str:
        if self.exploratory:
            return EXPLORATORY
        if self.failures:
            return FAIL
        if self.inconclusive:
            return INCONCLUSIVE
        return PASS

    def bump(self, item: str, by: int = 1) -> None:
        self.counts[item] = self.counts.get(item, 0) + by
        self.cases_attempted += by

    def fail(self, item: str, operands: dict, explanation: str) -> None:
        self.failures.append({"item": item, "operands": operands, "explanation": explanation})

    def skip(self, item: str, operands: dict, reason: str) -> None:
        self.cases_skipped_cap.append({"item": item, "operands": operands, "reason": reason})

    def unsure(self, item: str, operands: dict, reason: str) -> None:
        self.inconclusive.append({"item": item, "operands": operands, "reason": reason})

    def witness(self, item: str, data: dict) -> None:
        if len(self.witnesses) < self.max_witnesses:
            self.witnesses.append({"item": item, **data})

    def sort(self) -> None:
        keyf = lambda d: json.dumps(d, sort_keys=True)  # noqa: E731
        for lst in (self.cases_skipped_cap, self.failures, self.inconclusive):
            lst.sort(key=keyf)

    def to_dict(self) -> dict:
        d = asdict(self)
        d.pop("max_witnesses")
        d["pass"] = self.passed
        d["status"] = self.status
        return d

    def summary_line(self) -> str:
        return (f"{self.check_name:<8} {self.status.upper():<13} cases={self.cases_attempted} "
                f"skipped={len(self.cases_skipped_cap)} failures={len(self.failures)} "
                f"inconclusive={len(self.inconclusive)} ({self.elapsed:.1f}s)")


def exit_code(reports: list[VerificationReport]) -> int:
    """0 all pass, 1 any failure, 2 inconclusive without failures."""
    statuses = {r.status for r in reports}
    if FAIL in statuses:
        return 1
    if INCONCLUSIVE in statuses:
        return 2
    return 0


def to_json(reports: list[VerificationReport]) -> str:
    return json.dumps({"reports": [r.to_dict() for r in reports],
                       "exit_code": exit_code(reports)}, indent=2, sort_keys=True)


def to_markdown(reports: list[VerificationReport], figures: Optional[list[str]] = None) -> str:
    lines = ["# Verification report", "",
             "| check | status | cases | skipped | failures | inconclusive | seconds |",
             "|---|---|---|---|---|---|---|"]
    for r in reports:
        lines.append(f"| {r.check_name} | {r.status} | {r.cases_attempted} | "
                     f"{len(r.cases_skipped_cap)} | {len(r.failures)} | "
                     f"{len(r.inconclusive)} | {r.elapsed:.1f} |")
    for r in reports:
        lines += ["", f"## {r.check_name}", "",
                  "Universe: " + ", ".join(f"{k}={v}" for k, v in sorted(r.universe.items()))]
        if r.counts:
            lines.append("")
            lines.append("Cases per item: " + ", ".join(f"{k}: {v}" for k, v in sorted(r.counts.items())))
        for title, items in (("Failures", r.failures), ("Skipped", r.cases_skipped_cap),
                             ("Inconclusive", r.inconclusive)):
            if items:
                lines += ["", f"### {title}", ""]
                lines += [f"- `{json.dumps(it, sort_keys=True)}`" for it in items[:50]]
                if len(items) > 50:
                    lines.append(f"- ... {len(items) - 50} more")
    if figures:
        lines += ["", "## Figures", ""]
        lines += [f"![{f}]({f})" for f in figures]
    return "\n".join(lines) + "\n"
