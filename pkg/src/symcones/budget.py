from __future__ import annotations

import os

ENV_VAR = "SYMCONES_BUDGET"


class BudgetExhausted(RuntimeError):
    """Raised when a computation would exceed its node/ray ceiling.

    This is an outcome distinct from any mathematical answer: the caller
    learns nothing about the object, only that the work was refused.
    """


class Budget:
    """A shared work counter.  ``limit=None`` means unlimited."""

    def __init__(self, limit: int | None = None):
        self.limit = limit
        self.used = 0

    def charge(self, amount: int = 1, what: str = "work") -> None:
        self.used += amount
        if self.limit is not None and self.used > self.limit:
            raise BudgetExhausted(f"{what}: budget of {self.limit} units exhausted")

    def check(self, size: int, what: str = "size") -> None:
        if self.limit is not None and size > self.limit:
            raise BudgetExhausted(f"{what} {size} exceeds budget {self.limit}")

    @classmethod
    def from_env(cls, default: int | None = None) -> "Budget":
        raw = os.environ.get(ENV_VAR)
        if raw:
            return cls(int(raw))
        return cls(default)


def ensure(budget: Budget | None) -> Budget:
    return budget if budget is not None else Budget(None)
