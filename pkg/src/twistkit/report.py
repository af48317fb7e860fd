"""Check results shared by the verification modules and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field

STATUSES = ("pass", "fail", "recorded-mismatch", "vacuous")


@dataclass
class CheckResult:
    check: str
    subject: str
    status: str
    residual: str = "0"
    details: dict = field(default_factory=dict)
    ledger: list = field(default_factory=list)
    seconds: float | None = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def to_json(self, timing: bool = False) -> dict:
        doc = {
            "check": self.check,
            "subject": self.subject,
            "status": self.status,
            "residual": self.residual,
            "details": self.details,
            "ledger": self.ledger,
        }
        if timing and self.seconds is not None:
            doc["seconds"] = round(self.seconds, 3)
        return doc


def status_of(ok: bool) -> str:
    return "pass" if ok else "fail"
