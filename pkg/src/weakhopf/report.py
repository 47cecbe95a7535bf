"""Verification reports and their human and machine renderings.

The machine format uses the same line dialect as spec files::

    weakhopf-report 1
    command homology
    input pair2
    config bound 4
    [profile left]
    0 2 0 0 0 0 truncated 0
    [check quasi-Frobenius]
    status verified
    evidence injdim-left 0
    [summary]
    status verified
    exit 0

Timings appear only in the human rendering so that machine reports are
byte-identical across runs.
"""
from __future__ import annotations

from dataclasses import dataclass, field

REPORT_HEADER = "weakhopf-report"
REPORT_VERSION = 1

PASS, FAIL = "pass", "fail"
VERIFIED, REFUTED, INCONCLUSIVE = "verified", "refuted", "inconclusive-at-bound"
SKIPPED = "skipped"

EXIT_OK, EXIT_REFUTED, EXIT_INCONCLUSIVE, EXIT_INPUT = 0, 1, 2, 3


def _one_line(x) -> str:
    return " ".join(str(x).split())


@dataclass
class CheckResult:
    name: str
    status: str
    evidence: list[tuple[str, str]] = field(default_factory=list)
    witness: str | None = None
    seconds: float = 0.0

    def add(self, key: str, value) -> "CheckResult":
        self.evidence.append((key, _one_line(value)))
        return self

    @property
    def failed(self) -> bool:
        return self.status in (FAIL, REFUTED)

    @property
    def inconclusive(self) -> bool:
        return self.status == INCONCLUSIVE


@dataclass
class Table:
    title: str
    header: list[str]
    rows: list[list[str]]


@dataclass
class VerificationReport:
    command: str
    input: str
    config: list[tuple[str, str]] = field(default_factory=list)
    tables: list[Table] = field(default_factory=list)
    checks: list[CheckResult] = field(default_factory=list)
    error: tuple[str, str] | None = None  # (code, message)

    @property
    def exit_code(self) -> int:
        if self.error is not None:
            return EXIT_INPUT
        if any(c.failed for c in self.checks):
            return EXIT_REFUTED
        if any(c.inconclusive for c in self.checks):
            return EXIT_INCONCLUSIVE
        return EXIT_OK

    @property
    def status(self) -> str:
        return {EXIT_OK: VERIFIED, EXIT_REFUTED: REFUTED, EXIT_INCONCLUSIVE: INCONCLUSIVE, EXIT_INPUT: "input-error"}[self.exit_code]

    def render(self, fmt: str = "human") -> str:
        return render_machine(self) if fmt == "machine" else render_human(self)


def render_machine(r: VerificationReport) -> str:
    out = [f"{REPORT_HEADER} {REPORT_VERSION}", f"command {r.command}"]
    if r.input:
        out.append(f"input {_one_line(r.input)}")
    for k, v in r.config:
        out.append(f"config {k} {_one_line(v)}")
    if r.error is not None:
        code, msg = r.error
        out.append("[error]")
        out.append(f"code {code}")
        out.append(f"message {_one_line(msg)}")
    for t in r.tables:
        out.append(f"[{t.title}]")
        if t.header:
            out.append("# " + " ".join(t.header))
        out.extend(" ".join(row) for row in t.rows)
    for c in r.checks:
        out.append(f"[check {c.name}]")
        out.append(f"status {c.status}")
        out.extend(f"evidence {k} {v}" for k, v in c.evidence)
        if c.witness is not None:
            out.append(f"witness {_one_line(c.witness)}")
    out.append("[summary]")
    out.append(f"status {r.status}")
    out.append(f"exit {r.exit_code}")
    return "\n".join(out) + "\n"


def render_human(r: VerificationReport) -> str:
    out = [f"{r.command}: {r.input}" if r.input else r.command]
    if r.config:
        out.append("  " + ", ".join(f"{k}={v}" for k, v in r.config))
    if r.error is not None:
        code, msg = r.error
        out.append(f"error [{code}]: {msg}")
    for t in r.tables:
        out.append("")
        out.append(t.title)
        widths = [max(len(x) for x in col) for col in zip(t.header, *t.rows)] if t.rows else [len(h) for h in t.header]
        out.append("  " + "  ".join(h.rjust(w) for h, w in zip(t.header, widths)))
        for row in t.rows:
            out.append("  " + "  ".join(x.rjust(w) for x, w in zip(row, widths)))
    if r.checks:
        out.append("")
        width = max(len(c.name) for c in r.checks)
        for c in r.checks:
            out.append(f"  {c.name.ljust(width)}  {c.status:<22} {c.seconds:6.2f}s")
            for k, v in c.evidence:
                out.append(f"      {k}: {v}")
            if c.witness is not None:
                out.append(f"      witness: {c.witness}")
    out.append("")
    out.append(f"result: {r.status} (exit {r.exit_code})")
    return "\n".join(out) + "\n"
