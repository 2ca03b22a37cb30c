"""Run manifests: one record per CLI command or experiment."""

from importlib.metadata import PackageNotFoundError, version
import logging
from pathlib import Path
import platform
from typing import Any, Dict, List

from pydantic import BaseModel, Field

from .serialization import SCHEMA, dumps
from .timer import Timer

logger = logging.getLogger(__name__)


def _tool_version() -> str:
    try:
        return version("braidwo")
    except PackageNotFoundError:
        return "0.0.0+unknown"


def environment_notes() -> Dict[str, str]:
    from .config import get_config

    config = get_config()
    return {
        "python": platform.python_version(),
        "platform": platform.platform(),
        "cache_dir": str(config.cache_dir),
        "hardy_budget_bits": str(config.hardy_budget_bits),
        "recursive_enum_cap": str(config.recursive_enum_cap),
    }


class RunManifest(BaseModel):
    schema_tag: str = Field(SCHEMA, alias="schema")
    tool_version: str = Field(default_factory=_tool_version)
    command: str
    parameters: Dict[str, Any] = Field(default_factory=dict)
    started: str = ""
    ended: str = ""
    wall_time_s: float = 0.0
    outcomes: List[Dict[str, Any]] = Field(default_factory=list)
    environment: Dict[str, str] = Field(default_factory=environment_notes)

    model_config = {"populate_by_name": True}

    def add_outcome(self, **record):
        self.outcomes.append(record)

    def finish(self, timer: Timer):
        if not timer.stopped:
            timer.stop()
        self.started = timer.get_start_time_str()
        self.ended = timer.get_end_time_str()
        self.wall_time_s = timer.total_seconds()

    def to_json(self) -> str:
        return dumps(self.model_dump(mode="json", by_alias=True))

    def save(self, filepath: Path):
        filepath = Path(filepath)
        filepath.parent.mkdir(parents=True, exist_ok=True)
        filepath.write_text(self.to_json() + "\n")
        logger.info("Run manifest written to %s", filepath)
