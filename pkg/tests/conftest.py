from pathlib import Path

import pytest

from braidwo.config import VerifyRanges, WorkbenchConfig, set_config
from braidwo.serialization import allow_huge_ints

allow_huge_ints()


def small_ranges() -> VerifyRanges:
    return VerifyRanges(
        uniqueness_word_len=6,
        order_word_len=6,
        garside_word_len=7,
        oracle_word_len=6,
        mirror_word_len=7,
        mirror_horizon=12,
        isomorphism_word_len=6,
        hardy_word_len=4,
        hardy_max_k=3,
        game_word_len=5,
        envelope_word_len=5,
        special_max_weight=3,
        special_max_level=4,
        special_max_breadth=2,
        special_horizon=6,
    )


@pytest.fixture(autouse=True)
def workbench_config(tmp_path: Path):
    config = WorkbenchConfig(cache_dir=tmp_path / "cache", verify=small_ranges())
    set_config(config)
    yield config
    set_config(None)
