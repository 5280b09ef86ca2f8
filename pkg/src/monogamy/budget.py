"""Dense-matrix budget guard for d^n-sized constructions.

The default cap is d^n <= 4096; the MONOGAMY_BUDGET environment variable
overrides it. Oversized requests raise BudgetExceededError instead of
silently switching algorithms.
"""

from __future__ import annotations

import os

DEFAULT_BUDGET = 4096
ENV_VAR = "MONOGAMY_BUDGET"


class BudgetExceededError(Exception):
    """Raised when a requested d^n exceeds the dense-matrix budget."""


def current_budget(override: int | None = None) -> int:
    if override is not None:
        return int(override)
    env = os.environ.get(ENV_VAR)
    if env is not None:
        return int(env)
    return DEFAULT_BUDGET


def check_budget(n: int, d: int, override: int | None = None) -> None:
    cap = current_budget(override)
    if d ** n > cap:
        raise BudgetExceededError(
            f"d^n = {d}^{n} = {d**n} exceeds the dense-matrix budget {cap}; "
            f"set {ENV_VAR} to raise the cap"
        )
