"""Verification reports: per-check records, deterministic rendering, figures.

Every verification entry point returns a :class:`VerificationReport` — a
flat list of named checks, each carrying its parameters, an exact
pass/fail status, the printed residual terms when it failed, and wall-clock
timing.  Pass means the residual was exactly zero; there is no tolerance
anywhere.

Rendering is deterministic: checks are sorted by (name, parameters) so two
runs of the same configuration produce byte-identical text and JSON apart
from the elapsed-time fields.  The optional figure output (a pass/fail
summary and a timing chart) lands next to the report file.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

__all__ = ["CheckRecord", "VerificationReport"]


@dataclass(frozen=True)
class CheckRecord:
    name: str
    params: dict
    status: str  # "pass" or "fail"
    residual: tuple = ()  # printed residual terms, empty iff pass
    elapsed_ms: float = 0.0

    def sort_key(self):
        return (self.name, json.dumps(self.params, sort_keys=True, default=str))


@dataclass
class VerificationReport:
    command: str
    rank: int | None = None
    checks: list = field(default_factory=list)

    def add(self, name: str, params: dict, ok: bool, residual=(), elapsed_ms: float = 0.0):
        self.checks.append(
            CheckRecord(
                name=name,
                params=dict(params),
                status="pass" if ok else "fail",
                residual=tuple(residual),
                elapsed_ms=elapsed_ms,
            )
        )

    def extend(self, other: "VerificationReport"):
        self.checks.extend(other.checks)

    @property
    def total(self) -> int:
        return len(self.checks)

    @property
    def failed(self) -> int:
        return sum(1 for c in self.checks if c.status == "fail")

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def sorted_checks(self):
        return sorted(self.checks, key=CheckRecord.sort_key)

    def failures(self):
        return [c for c in self.sorted_checks() if c.status == "fail"]

    # -- rendering -----------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "command": self.command,
            "rank": self.rank,
            "checks": [
                {
                    "name": c.name,
                    "params": c.params,
                    "status": c.status,
                    "residual": list(c.residual),
                    "elapsed_ms": round(c.elapsed_ms, 3),
                }
                for c in self.sorted_checks()
            ],
            "summary": {"total": self.total, "failed": self.failed},
        }

    def render_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=False) + "\n"

    def render_text(self) -> str:
        lines = [f"# {self.command}" + (f" (rank {self.rank})" if self.rank else "")]
        for c in self.sorted_checks():
            params = " ".join(f"{k}={v}" for k, v in sorted(c.params.items()))
            lines.append(f"{c.status.upper():4}  {c.name}" + (f"  [{params}]" if params else ""))
            for term in c.residual:
                lines.append(f"      residual: {term}")
        lines.append(f"summary: {self.total - self.failed}/{self.total} passed, {self.failed} failed")
        return "\n".join(lines) + "\n"

    # -- figures ---------------------------------------------------------------

    def render_figures(self, out_stem: str) -> list:
        """Write summary figures next to the report: <stem>_checks.png with
        pass/fail counts per check family and <stem>_timing.png with total
        elapsed time per family.  Requires matplotlib (optional extra)."""
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        families: dict = {}
        for c in self.checks:
            fam = families.setdefault(c.name, {"pass": 0, "fail": 0, "ms": 0.0})
            fam[c.status] += 1
            fam["ms"] += c.elapsed_ms
        names = sorted(families)
        paths = []

        fig, ax = plt.subplots(figsize=(max(4, 0.6 * len(names) + 2), 3.5))
        passed = [families[n]["pass"] for n in names]
        failed = [families[n]["fail"] for n in names]
        ax.bar(names, passed, color="#2a9d50", label="pass")
        ax.bar(names, failed, bottom=passed, color="#c23636", label="fail")
        ax.set_ylabel("checks")
        ax.set_title(f"{self.command}: {self.total - self.failed}/{self.total} passed")
        ax.legend()
        plt.setp(ax.get_xticklabels(), rotation=30, ha="right")
        fig.tight_layout()
        checks_path = f"{out_stem}_checks.png"
        fig.savefig(checks_path, dpi=110)
        plt.close(fig)
        paths.append(checks_path)

        fig, ax = plt.subplots(figsize=(max(4, 0.6 * len(names) + 2), 3.5))
        ax.bar(names, [families[n]["ms"] for n in names], color="#3462a8")
        ax.set_ylabel("elapsed (ms)")
        ax.set_title(f"{self.command}: timing by check family")
        plt.setp(ax.get_xticklabels(), rotation=30, ha="right")
        fig.tight_layout()
        timing_path = f"{out_stem}_timing.png"
        fig.savefig(timing_path, dpi=110)
        plt.close(fig)
        paths.append(timing_path)
        return paths
