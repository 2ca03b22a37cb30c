import os
from pathlib import Path
from typing import Dict

from platformdirs import user_cache_path
from pydantic import BaseModel, Field, field_validator
import yaml

CONFIG_ENV_VAR = "BRAIDWO_CONFIG"
CACHE_DIR_ENV_VAR = "BRAIDWO_CACHE_DIR"


class VerifyRanges(BaseModel):
    uniqueness_word_len: int = Field(10, ge=0)
    order_word_len: int = Field(10, ge=0)
    garside_word_len: int = Field(12, ge=0)
    oracle_word_len: int = Field(9, ge=0)
    mirror_word_len: int = Field(12, ge=0)
    mirror_horizon: int = Field(25, ge=1)
    isomorphism_word_len: int = Field(10, ge=0)
    hardy_word_len: int = Field(6, ge=0)
    hardy_max_k: int = Field(4, ge=0)
    game_word_len: int = Field(6, ge=0)
    envelope_word_len: int = Field(8, ge=0)
    special_max_weight: int = Field(6, ge=0)
    special_max_level: int = Field(4, ge=2)
    special_max_breadth: int = Field(3, ge=2)
    special_horizon: int = Field(10, ge=1)

    model_config = {"extra": "forbid", "frozen": True}


class WorkbenchConfig(BaseModel):
    hardy_budget_bits: int = Field(
        1_048_576, ge=64, description="Bit budget for Hardy and hydra evaluations"
    )
    recursive_enum_cap: int = Field(8, ge=0)
    brute_enum_cap: int = Field(5, ge=0)
    congruence_budget: int = Field(100_000, ge=1)
    witness_budget: int = Field(200_000, ge=1)
    max_witness_length: int = Field(9, ge=1)
    unrank_block_cap: int = Field(16, ge=2)
    stepwise_budget: int = Field(1_000_000, ge=1)
    game_trials: int = Field(100, ge=1)
    cache_dir: Path = Path(".braidwo_cache")
    verify: VerifyRanges = Field(default_factory=VerifyRanges)

    model_config = {"extra": "forbid", "frozen": True}

    @field_validator("cache_dir", mode="before")
    @classmethod
    def resolve_cache_dir(cls, value):
        if value == "user":
            return user_cache_path() / "braidwo"
        return Path(value)


_CONFIG: Dict[str, WorkbenchConfig] = {}


def load_config(yaml_filepath: str | Path | None = None) -> WorkbenchConfig:
    if yaml_filepath is None:
        yaml_filepath = os.environ.get(CONFIG_ENV_VAR, None)

    d = {}
    if yaml_filepath is not None:
        yaml_filepath = Path(yaml_filepath)
        if not yaml_filepath.exists():
            raise FileNotFoundError(f"Config file '{yaml_filepath}' does not exist")
        d = yaml.safe_load(yaml_filepath.read_text()) or {}

    cache_dir = os.environ.get(CACHE_DIR_ENV_VAR, None)
    if cache_dir:
        d["cache_dir"] = cache_dir

    return WorkbenchConfig(**d)


def get_config() -> WorkbenchConfig:
    if "current" not in _CONFIG:
        _CONFIG["current"] = load_config()
    return _CONFIG["current"]


def set_config(config: WorkbenchConfig | None):
    if config is None:
        _CONFIG.clear()
    else:
        _CONFIG["current"] = config


def save_config(config: WorkbenchConfig, yaml_filepath: Path):
    d = config.model_dump(mode="json")
    with open(yaml_filepath, "w") as f:
        yaml.dump(d, f, sort_keys=False, default_flow_style=False, width=70, indent=2)
