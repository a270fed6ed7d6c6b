from phasevault.verification.registry import CHECK_REGISTRY, CheckResult, CheckSpec, Outcome, register_check
from phasevault.verification.runner import EXTENDED_DIMS, SuiteReport, run_check, run_suite

__all__ = [
    "CHECK_REGISTRY",
    "EXTENDED_DIMS",
    "CheckResult",
    "CheckSpec",
    "Outcome",
    "SuiteReport",
    "register_check",
    "run_check",
    "run_suite",
]
