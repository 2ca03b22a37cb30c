from typing import Callable, Dict, List

from pydantic import BaseModel, Field

from ..config import WorkbenchConfig
from ..registry import Registry

Suite = Callable[[WorkbenchConfig], List["CheckResult"]]

_SUITES = Registry("suite")

SUITE_MAP: Dict[str, Suite] = _SUITES.funcs
SUITE_CRITERION: Dict[str, int] = _SUITES.attrs


class CheckResult(BaseModel):
    name: str
    passed: bool
    detail: str = ""

    model_config = {"frozen": True}


class SuiteResult(BaseModel):
    suite: str
    criterion: int
    checks: List[CheckResult] = Field(default_factory=list)
    error: str | None = None
    wall_time_s: float = 0.0

    @property
    def passed(self) -> bool:
        return self.error is None and all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]


def check(name: str, passed: bool, detail: str = "") -> CheckResult:
    return CheckResult(name=name, passed=bool(passed), detail=detail)


def register(name: str, criterion: int):
    """Register a suite: takes a WorkbenchConfig, returns CheckResult records."""
    return _SUITES.register(name, criterion)


def get_registered_suites() -> Dict[str, Suite]:
    return SUITE_MAP
