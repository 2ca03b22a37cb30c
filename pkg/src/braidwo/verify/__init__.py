from .registry import (
    SUITE_CRITERION,
    SUITE_MAP,
    CheckResult,
    SuiteResult,
    check,
    get_registered_suites,
    register,
)
from .runner import resolve_suite_names, run_suite, run_suites
