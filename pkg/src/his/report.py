"""Structured experiment reports with embedded targets and pass/fail.

Reports are built only from the experiment config and seed, never from
wall-clock or environment state, so identical invocations serialize to
byte-identical JSON and CSV files regardless of worker count.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from pathlib import Path

PASS = "pass"
FAIL = "fail"
INFO = "info"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ReportRow:
    """One experiment condition with summary statistics and its target band."""

    condition: str
    n: int
    mean: float
    sd: float
    ci95_low: float
    ci95_high: float
    target: str
    status: str
    extra: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Check:
    """A report-level relational check (monotonicity, gaps, counts)."""

    name: str
    status: str
    detail: str


@dataclass(frozen=True)
class ExperimentReport:
    name: str
    seed: int
    config: dict
    rows: list[ReportRow]
    checks: list[Check]

    @property
    def status(self) -> str:
        statuses = [r.status for r in self.rows] + [c.status for c in self.checks]
        if FAIL in statuses:
            return FAIL
        if INCONCLUSIVE in statuses:
            return INCONCLUSIVE
        return PASS

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self) -> str:
        doc = {
            "experiment": self.name,
            "seed": self.seed,
            "config": self.config,
            "status": self.status,
            "rows": [
                {
                    "condition": r.condition,
                    "n": r.n,
                    "mean": r.mean,
                    "sd": r.sd,
                    "ci95_low": r.ci95_low,
                    "ci95_high": r.ci95_high,
                    "target": r.target,
                    "status": r.status,
                    "extra": r.extra,
                }
                for r in self.rows
            ],
            "checks": [
                {"name": c.name, "status": c.status, "detail": c.detail} for c in self.checks
            ],
        }
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(
            ["condition", "n", "mean", "sd", "ci95_low", "ci95_high", "target", "status", "extra"]
        )
        for r in self.rows:
            writer.writerow(
                [
                    r.condition,
                    r.n,
                    repr(r.mean),
                    repr(r.sd),
                    repr(r.ci95_low),
                    repr(r.ci95_high),
                    r.target,
                    r.status,
                    json.dumps(r.extra, sort_keys=True),
                ]
            )
        return buf.getvalue()

    def write(self, out_dir, formats=("json", "csv")) -> list[Path]:
        out_dir = Path(out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        paths = []
        for fmt in formats:
            path = out_dir / f"{self.name}-{self.seed}.{fmt}"
            path.write_text(self.to_json() if fmt == "json" else self.to_csv())
            paths.append(path)
        return paths

    def summary_lines(self) -> list[str]:
        lines = [f"{self.name} (seed {self.seed}): {self.status.upper()}"]
        for r in self.rows:
            lines.append(
                f"  [{r.status:>12}] {r.condition:<24} mean={r.mean:+.4f} sd={r.sd:.4f} "
                f"ci95=[{r.ci95_low:+.4f}, {r.ci95_high:+.4f}] n={r.n} target={r.target}"
            )
        for c in self.checks:
            lines.append(f"  [{c.status:>12}] {c.name}: {c.detail}")
        return lines


def make_row(
    condition: str,
    values,
    target_low: float | None = None,
    target_high: float | None = None,
    min_n: int = 2,
    extra: dict | None = None,
) -> ReportRow:
    """Summarize per-trial values into a row, gated against [low, high].

    With fewer than `min_n` values the row is marked inconclusive; with
    no target band it is informational only.
    """
    n = len(values)
    if n == 0:
        raise ValueError(f"row {condition!r} has no values")
    mean = float(sum(values) / n)
    sd = float(math.sqrt(sum((v - mean) ** 2 for v in values) / n)) if n > 1 else 0.0
    half = 1.96 * sd / math.sqrt(n)
    if target_low is None and target_high is None:
        target, status = "", INFO
    else:
        lo = "-inf" if target_low is None else f"{target_low:g}"
        hi = "inf" if target_high is None else f"{target_high:g}"
        target = f"[{lo}, {hi}]"
        if n < min_n:
            status = INCONCLUSIVE
        else:
            ok = (target_low is None or mean >= target_low) and (
                target_high is None or mean <= target_high
            )
            status = PASS if ok else FAIL
    return ReportRow(
        condition=condition,
        n=n,
        mean=mean,
        sd=sd,
        ci95_low=mean - half,
        ci95_high=mean + half,
        target=target,
        status=status,
        extra=extra or {},
    )


def make_check(name: str, passed: bool, detail: str, conclusive: bool = True) -> Check:
    if not conclusive:
        return Check(name=name, status=INCONCLUSIVE, detail=detail)
    return Check(name=name, status=PASS if passed else FAIL, detail=detail)
