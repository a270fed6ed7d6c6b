from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Literal, Tuple

import numpy as np

CheckGroup = Literal["field", "operators", "states", "quasidist", "squeeze"]
CheckTier = Literal["default", "extended"]


@dataclass(frozen=True)
class Outcome:
    """What a check function returns: the worst deviation it saw and the bar it had to clear."""

    max_error: float
    tolerance: float
    detail: str = ""

    @property
    def passed(self) -> bool:
        return bool(self.max_error <= self.tolerance)

    @classmethod
    def worst(cls, bars: Dict[str, Tuple[float, float]]) -> Outcome:
        """Collapse ``{label: (error, tolerance)}`` to the entry closest to failing.

        The result passes only if every entry clears its own bar.
        """
        label, (error, tolerance) = max(bars.items(), key=lambda item: item[1][0] / item[1][1])
        detail = ", ".join(f"{name} {err:.2e}/{tol:.0e}" for name, (err, tol) in bars.items())
        return cls(error, tolerance, f"worst {label}; {detail}")


@dataclass(frozen=True)
class CheckResult:
    name: str
    group: CheckGroup
    passed: bool
    max_error: float
    seconds: float
    detail: str = ""


CheckFn = Callable[[np.random.Generator], Outcome]


@dataclass(frozen=True)
class CheckSpec:
    name: str
    group: CheckGroup
    tier: CheckTier
    fn: CheckFn = field(repr=False)


CHECK_REGISTRY: Dict[str, CheckSpec] = {}


def register_check(name: str, group: CheckGroup, tier: CheckTier = "default") -> Callable[[CheckFn], CheckFn]:
    """
    Decorator factory for registering verification checks.

    Parameters
    ----------
    name : str
        Unique name of the check, shown in the report.
    group : CheckGroup
        Module the check exercises.
    tier : CheckTier
        ``"default"`` checks always run; ``"extended"`` ones run only when
        ``verify --dims 31`` asks for the large single-qudit dimension.

    Returns
    -------
    Callable[[CheckFn], CheckFn]
        A decorator that registers the check and returns it unchanged.
    """

    def register_check_fn(fn: CheckFn) -> CheckFn:
        if name in CHECK_REGISTRY:
            raise ValueError(f"Cannot register duplicate check {name}")
        CHECK_REGISTRY[name] = CheckSpec(name=name, group=group, tier=tier, fn=fn)
        return fn

    return register_check_fn


def checks_for(tiers: List[CheckTier]) -> List[CheckSpec]:
    return [check for check in CHECK_REGISTRY.values() if check.tier in tiers]
