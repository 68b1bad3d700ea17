"""Uniform pass/fail reports for all axiom and theorem checkers."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CheckReport:
    """Outcome of a single check.

    ``witness`` holds the lexicographically first violation (element labels,
    possibly nested for pair algebras) so failures are deterministic and
    re-checkable.  ``flags`` carries named sub-verdicts for checks that report
    several hypothesis or condition bits at once.
    """

    passed: bool
    detail: str = ""
    witness: tuple | None = None
    flags: tuple[tuple[str, bool], ...] = ()

    def __bool__(self) -> bool:
        return self.passed

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def flag(self, name: str) -> bool:
        for key, value in self.flags:
            if key == name:
                return value
        raise KeyError(name)

    @classmethod
    def ok(cls, detail: str = "", flags: tuple[tuple[str, bool], ...] = ()) -> "CheckReport":
        return cls(True, detail, None, flags)

    @classmethod
    def fail(
        cls,
        detail: str,
        witness: tuple | None = None,
        flags: tuple[tuple[str, bool], ...] = (),
    ) -> "CheckReport":
        return cls(False, detail, witness, flags)
