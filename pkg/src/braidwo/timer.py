from datetime import datetime
import logging
import time

logger = logging.getLogger(__name__)

TIMESTAMP_FORMAT = "%Y%m%dT%H%M%S.%f"


class Timer:
    """Wall-clock stopwatch for experiments and verification suites.

    with Timer("longest_simple") as timer:
        ...
    timer.total_seconds()
    """

    def __init__(self, name=""):
        self.name: str = name
        self._stopped: bool = False
        self.start_wall_clock: datetime = datetime.now()
        self.end_wall_clock: datetime | None = None
        self.t_start = time.perf_counter()
        self.raw_dt: float = 0.0

    def _lap_or_stop(self, stop: bool):
        if self._stopped:
            raise RuntimeError(f"Timer '{self.name}' has been already stopped.")
        self.raw_dt = time.perf_counter() - self.t_start
        if stop:
            self.end_wall_clock = datetime.now()
            self._stopped = True
        return self.total_seconds()

    def lap(self):
        return self._lap_or_stop(False)

    def stop(self):
        return self._lap_or_stop(True)

    @property
    def stopped(self) -> bool:
        return self._stopped

    def total_seconds(self):
        return self.raw_dt

    def get_print_str(self, decimal: int = 3):
        return f"Elapsed ({self.name}) = {self.raw_dt:.{decimal}f} [s]"

    def log(self, level: int = logging.INFO, decimal: int = 3):
        logger.log(level, self.get_print_str(decimal=decimal))

    def get_start_time_str(self):
        return self.start_wall_clock.strftime(TIMESTAMP_FORMAT)

    def get_end_time_str(self):
        if self.end_wall_clock is None:
            raise RuntimeError("You have not stopped the timer yet")
        return self.end_wall_clock.strftime(TIMESTAMP_FORMAT)

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        if not self._stopped:
            self.stop()
