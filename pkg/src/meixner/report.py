"""Outcome of an identity check and the accumulator that produces it."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .scalars import format_scalar, is_exact


@dataclass(frozen=True)
class CheckReport:
    name: str
    passed: bool
    max_abs_error: float | None  # None when every comparison was exact
    detail: str | None = None
    comparisons: int = 0

    @property
    def exact(self) -> bool:
        return self.max_abs_error is None

    def __bool__(self) -> bool:
        return self.passed


class Comparator:
    """Collects scalar comparisons; exact pairs must match, float pairs within ``tol``.

    Float errors are measured as ``|lhs - rhs| / max(1, |rhs|)``: absolute
    for values of modest size, relative for the large coefficients where
    round-off scales with magnitude.
    """

    def __init__(self, name: str, tol: float = 1e-10):
        self.name = name
        self.tol = tol
        self.max_err: float | None = None
        self.failure: str | None = None
        self.count = 0

    def _record(self, err: float) -> None:
        self.max_err = err if self.max_err is None else max(self.max_err, err)

    def scalar(self, label: str, lhs, rhs) -> bool:
        self.count += 1
        diff = lhs - rhs
        if is_exact(lhs) and is_exact(rhs):
            if diff == 0:
                return True
            err = abs(complex(diff))
            self._record(err)
            ok = False
        else:
            err = abs(complex(diff)) / max(1.0, abs(complex(rhs)))
            self._record(err)
            ok = err <= self.tol
        if not ok and self.failure is None:
            self.failure = f"{label}: {format_scalar(lhs)} != {format_scalar(rhs)}"
        return ok

    def sequence(self, label: str, lhs: Sequence, rhs: Sequence) -> bool:
        n = max(len(lhs), len(rhs))
        ok = True
        for k in range(n):
            a = lhs[k] if k < len(lhs) else 0
            b = rhs[k] if k < len(rhs) else 0
            ok = self.scalar(f"{label}[{k}]", a, b) and ok
        return ok

    def fail(self, message: str) -> None:
        self.count += 1
        if self.failure is None:
            self.failure = message
        self._record(float("inf"))

    def report(self) -> CheckReport:
        return CheckReport(
            name=self.name,
            passed=self.failure is None,
            max_abs_error=self.max_err,
            detail=self.failure,
            comparisons=self.count,
        )
