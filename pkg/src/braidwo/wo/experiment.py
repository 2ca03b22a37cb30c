import logging
from pathlib import Path
from typing import List

from pydantic import BaseModel, Field

from ..outcomes import ExperimentOutcome
from ..timer import Timer
from .growth import GrowthSpec
from .simple import longest_simple

logger = logging.getLogger(__name__)

WITNESS_INLINE_LIMIT = 64


class ExperimentReport(BaseModel):
    k: int
    growth: GrowthSpec
    budget: int | None = None
    outcome: ExperimentOutcome
    length: int
    note: str = ""
    witness: List[str] = Field(default_factory=list)
    witness_path: str | None = None
    started: str
    ended: str
    wall_time_s: float


def wo_experiment(
    k: int,
    growth: GrowthSpec,
    budget: int | None = None,
    witness_path: Path | None = None,
) -> ExperimentReport:
    """Bounded search for the longest (k, f)-simple descending sequence.

    The witness chain is inlined when short and written one entry per line to
    witness_path when given.
    """
    logger.info("WO experiment k=%d f=%s started", k, growth.label())
    with Timer(f"wo k={k} f={growth.label()}") as timer:
        result = longest_simple(k, growth, budget)
    timer.log()

    entries = [str(b) for b in result.witness.entries]
    saved = None
    if witness_path is not None:
        witness_path = Path(witness_path)
        witness_path.write_text("\n".join(entries) + "\n")
        saved = str(witness_path)

    if result.outcome is ExperimentOutcome.LOWER_BOUND:
        logger.info("k=%d f=%s: length >= %d (%s)", k, growth.label(), result.length, result.note)

    return ExperimentReport(
        k=k,
        growth=growth,
        budget=budget,
        outcome=result.outcome,
        length=result.length,
        note=result.note,
        witness=entries if len(entries) <= WITNESS_INLINE_LIMIT else [],
        witness_path=saved,
        started=timer.get_start_time_str(),
        ended=timer.get_end_time_str(),
        wall_time_s=timer.total_seconds(),
    )
