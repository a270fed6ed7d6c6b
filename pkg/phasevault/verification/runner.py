from __future__ import annotations

import json
import logging
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

import pandas as pd

import phasevault.verification.checks  # noqa: F401  (registers the suite)
from phasevault.utils.reproducibility.seed import make_rng
from phasevault.verification.registry import CHECK_REGISTRY, CheckResult, CheckSpec, CheckTier, checks_for

__all__ = ["SuiteReport", "run_check", "run_suite", "EXTENDED_DIMS"]

logger = logging.getLogger(__name__)

REPORT_SCHEMA = 1
EXTENDED_DIMS = frozenset({31})


@dataclass
class SuiteReport:
    results: List[CheckResult] = field(default_factory=list)
    dims: List[int] = field(default_factory=list)
    seed: int = 1992

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> List[str]:
        return [r.name for r in self.results if not r.passed]

    def to_frame(self) -> pd.DataFrame:
        columns = ["name", "group", "passed", "max_error", "seconds", "detail"]
        return pd.DataFrame([asdict(r) for r in self.results], columns=columns)

    def to_payload(self) -> Dict[str, Any]:
        return {
            "schema": REPORT_SCHEMA,
            "dims": list(self.dims),
            "seed": self.seed,
            "passed": self.passed,
            "checks": [asdict(r) for r in self.results],
        }

    def write(self, path: Union[str, Path]) -> Path:
        target = Path(path)
        target.write_text(json.dumps(self.to_payload(), indent=2), encoding="utf-8")
        return target


def run_check(check: CheckSpec, seed: int = 1992) -> CheckResult:
    """Run one check; an exception inside it counts as a failure, not a crash."""
    start = time.perf_counter()
    try:
        outcome = check.fn(make_rng(seed))
        passed, max_error, detail = outcome.passed, float(outcome.max_error), outcome.detail
    except Exception as err:  # noqa: BLE001
        logger.exception("Check %s raised", check.name)
        passed, max_error, detail = False, float("inf"), f"{type(err).__name__}: {err}"
    seconds = time.perf_counter() - start
    logger.info("%-34s %s  max_error=%.3e  %.2fs", check.name, "PASS" if passed else "FAIL", max_error, seconds)
    return CheckResult(check.name, check.group, passed, max_error, seconds, detail)


def run_suite(dims: Sequence[int] = (), seed: int = 1992, names: Optional[Sequence[str]] = None) -> SuiteReport:
    """Run the default checks, plus the extended tier when ``dims`` asks for d = 31.

    ``names`` restricts the run to the given checks, whatever their tier.
    """
    unknown = sorted(set(dims) - EXTENDED_DIMS)
    if unknown:
        raise ValueError(f"No extended checks exist for dims {unknown}; available: {sorted(EXTENDED_DIMS)}.")
    if names is not None:
        missing = [name for name in names if name not in CHECK_REGISTRY]
        if missing:
            raise ValueError(f"Unknown checks {missing}.")
        selected = [CHECK_REGISTRY[name] for name in names]
    else:
        tiers: List[CheckTier] = ["default", "extended"] if dims else ["default"]
        selected = checks_for(tiers)
    report = SuiteReport(dims=list(dims), seed=seed)
    for check in selected:
        report.results.append(run_check(check, seed))
    logger.info("%d/%d checks passed", sum(r.passed for r in report.results), len(report.results))
    return report
