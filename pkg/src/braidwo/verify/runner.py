from concurrent.futures import ProcessPoolExecutor
import logging
from typing import Iterable, List

from ..config import WorkbenchConfig, get_config, set_config
from ..timer import Timer
from . import suites  # noqa: F401  (registers the suites)
from .registry import SUITE_CRITERION, SUITE_MAP, SuiteResult

logger = logging.getLogger(__name__)


def resolve_suite_names(names: Iterable[str]) -> List[str]:
    names = list(names)
    if not names or "all" in names:
        return sorted(SUITE_MAP)
    unknown = [n for n in names if n not in SUITE_MAP]
    if unknown:
        raise ValueError(f"Unknown suite(s) {unknown}. Available: {sorted(SUITE_MAP)}")
    return sorted(set(names))


def run_suite(name: str, config: WorkbenchConfig | None = None) -> SuiteResult:
    if config is None:
        config = get_config()
    result = SuiteResult(suite=name, criterion=SUITE_CRITERION[name])
    with Timer(f"verify {name}") as timer:
        try:
            result.checks = SUITE_MAP[name](config)
        except Exception as exc:
            logger.exception("Suite '%s' raised", name)
            result.error = f"{type(exc).__name__}: {exc}"
    timer.log(logging.DEBUG)
    result.wall_time_s = timer.total_seconds()

    status = "passed" if result.passed else "FAILED"
    logger.info("Suite %s (criterion %d) %s in %.3f s", name, result.criterion, status, result.wall_time_s)
    for c in result.failures:
        logger.warning("Suite %s: check '%s' failed: %s", name, c.name, c.detail)
    return result


def _run_in_worker(name: str, config_dict: dict) -> SuiteResult:
    config = WorkbenchConfig(**config_dict)
    set_config(config)
    return run_suite(name, config)


def run_suites(
    names: Iterable[str], workers: int = 1, config: WorkbenchConfig | None = None
) -> List[SuiteResult]:
    """Run the named suites, in a process pool when workers > 1; results ordered by suite name."""
    if config is None:
        config = get_config()
    selected = resolve_suite_names(names)

    if workers <= 1 or len(selected) <= 1:
        results = [run_suite(name, config) for name in selected]
    else:
        config_dict = config.model_dump()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_run_in_worker, name, config_dict) for name in selected]
            results = [f.result() for f in futures]

    return sorted(results, key=lambda r: r.suite)
