"""Tiny result records shared by the verification suites and the CLI."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Case:
    """One named check: an input rendering plus expected and actual values."""

    name: str
    expected: str
    actual: str

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


def case(name: str, expected, actual) -> Case:
    return Case(name, str(expected), str(actual))


def failures(cases) -> list[Case]:
    return [c for c in cases if not c.ok]
