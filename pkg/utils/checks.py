"""Boolean check results carrying a diagnostic."""

from dataclasses import dataclass


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a validator; truthy iff the check passed."""

    ok: bool
    diagnostic: str = ""

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passed(cls) -> "CheckResult":
        return cls(True, "")

    @classmethod
    def failed(cls, diagnostic: str) -> "CheckResult":
        return cls(False, diagnostic)
