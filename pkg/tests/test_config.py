import json
from pathlib import Path

from pydantic import ValidationError
import pytest

from braidwo.braid import ExpSeq
from braidwo.config import (
    CACHE_DIR_ENV_VAR,
    CONFIG_ENV_VAR,
    WorkbenchConfig,
    get_config,
    load_config,
    save_config,
    set_config,
)
from braidwo.manifest import RunManifest
from braidwo.ordinals import parse_ordinal
from braidwo.serialization import (
    SCHEMA,
    dumps,
    json_deserialize_bignat,
    json_deserialize_expseq,
    json_deserialize_ordinal,
    json_deserialize_tree,
    json_serialize_bignat,
    loads,
    to_jsonable,
)
from braidwo.special import Leaf, Node
from braidwo.timer import Timer


def _write_yaml(path: Path, text: str) -> Path:
    path.write_text(text)
    return path


def test_defaults(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv(CONFIG_ENV_VAR, raising=False)
    monkeypatch.delenv(CACHE_DIR_ENV_VAR, raising=False)
    config = load_config()
    assert config.hardy_budget_bits == 1_048_576
    assert config.recursive_enum_cap == 8
    assert config.cache_dir == Path(".braidwo_cache")
    assert config.verify.mirror_horizon == 25


def test_yaml_file(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv(CACHE_DIR_ENV_VAR, raising=False)
    path = _write_yaml(
        tmp_path / "braidwo.yaml",
        "hardy_budget_bits: 4096\nverify:\n  mirror_horizon: 7\n",
    )
    config = load_config(path)
    assert config.hardy_budget_bits == 4096
    assert config.verify.mirror_horizon == 7
    assert config.verify.order_word_len == 10

    monkeypatch.setenv(CONFIG_ENV_VAR, str(path))
    assert load_config() == config


def test_invalid_files(tmp_path: Path) -> None:
    with pytest.raises(FileNotFoundError):
        load_config(tmp_path / "missing.yaml")
    with pytest.raises(ValidationError):
        load_config(_write_yaml(tmp_path / "a.yaml", "hardy_bits: 12\n"))
    with pytest.raises(ValidationError):
        load_config(_write_yaml(tmp_path / "b.yaml", "hardy_budget_bits: 8\n"))
    with pytest.raises(ValidationError):
        load_config(_write_yaml(tmp_path / "c.yaml", "verify:\n  special_max_level: 1\n"))


def test_cache_dir_overrides(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv(CACHE_DIR_ENV_VAR, str(tmp_path / "elsewhere"))
    assert load_config().cache_dir == tmp_path / "elsewhere"

    monkeypatch.delenv(CACHE_DIR_ENV_VAR)
    config = WorkbenchConfig(cache_dir="user")
    assert config.cache_dir.name == "braidwo"


def test_save_and_reload(tmp_path: Path) -> None:
    config = WorkbenchConfig(brute_enum_cap=3, cache_dir=tmp_path)
    path = tmp_path / "saved.yaml"
    save_config(config, path)
    assert load_config(path) == config


def test_current_config(workbench_config: WorkbenchConfig) -> None:
    assert get_config() is workbench_config
    replacement = WorkbenchConfig(stepwise_budget=10)
    set_config(replacement)
    assert get_config().stepwise_budget == 10


def test_timer() -> None:
    with Timer("sum") as timer:
        sum(range(1000))
    assert timer.stopped
    assert timer.total_seconds() >= 0.0
    assert timer.get_print_str().startswith("Elapsed (sum) = ")
    assert timer.get_start_time_str() <= timer.get_end_time_str()
    with pytest.raises(RuntimeError):
        timer.stop()
    with pytest.raises(RuntimeError):
        Timer().get_end_time_str()


def test_value_codecs() -> None:
    big = 3**500
    assert json_serialize_bignat(big) == str(big)
    assert json_deserialize_bignat(json_serialize_bignat(big, sci=True)) == big
    assert json_deserialize_bignat(7) == 7

    assert json_deserialize_expseq({"__expseq__": True, "exps": "(2,2)"}) == ExpSeq.of(2, 2)
    assert json_deserialize_ordinal("w*2+1") == parse_ordinal("w*2+1")
    assert json_deserialize_tree("[3: <2>, <0>]") == Node(3, (Leaf(2), Leaf(0)))


def test_report_documents() -> None:
    payload = {
        "braid": ExpSeq.of(2, 2),
        "ord": parse_ordinal("w*2+2"),
        "tree": Leaf(3),
        "length": 14,
    }
    text = dumps(payload)
    assert text == dumps(dict(reversed(list(payload.items()))))
    doc = loads(text)
    assert doc["schema"] == SCHEMA
    assert doc["braid"] == {"__expseq__": True, "exps": "(2,2)"}
    assert doc["ord"]["cnf"] == "w*2+2"
    assert doc["tree"]["tree"] == "<3>"
    assert doc["length"] == 14

    with pytest.raises(ValueError):
        loads(json.dumps({"schema": "other/1"}))


def test_run_manifest(tmp_path: Path) -> None:
    manifest = RunManifest(command="hydra length", parameters={"braid": "(2,2)"})
    manifest.add_outcome(length="14")
    with Timer("hydra length") as timer:
        pass
    manifest.finish(timer)

    path = tmp_path / "runs" / "manifest.json"
    manifest.save(path)
    doc = loads(path.read_text())
    assert doc["command"] == "hydra length"
    assert doc["outcomes"] == [{"length": "14"}]
    assert doc["environment"]["cache_dir"] == str(tmp_path / "cache")
    assert doc["ended"] == timer.get_end_time_str()


def test_sci_reports_digest_big_numbers() -> None:
    payload = {"length": 14, "huge": 2**200, "flag": True}
    plain = to_jsonable(payload)
    assert plain == {"length": 14, "huge": 2**200, "flag": True}

    digested = to_jsonable(payload, sci=True)
    assert digested["length"] == 14
    assert digested["flag"] is True
    assert digested["huge"]["sci"].endswith("(201 bits)")
    assert json_deserialize_bignat(digested["huge"]) == 2**200
    assert loads(dumps(payload, sci=True))["huge"]["decimal"] == str(2**200)
