from pathlib import Path

import pytest

from braidwo.braid import ExpSeq, delta3
from braidwo.hydra import Battle, T, critical_strategy, leading_strategy, random_strategy


def test_play_and_permitted_positions() -> None:
    battle = Battle(ExpSeq.of(2, 2))
    assert battle.permitted() == [1, 2]
    assert battle.play(2) == ExpSeq.of(1, 3)
    assert battle.t == 1
    assert battle.moves == [(1, 2, "(1,3)")]

    with pytest.raises(ValueError):
        Battle(ExpSeq.of(1, 0)).play(1)
    with pytest.raises(ValueError):
        Battle(ExpSeq.of(0, 1))


def test_critical_strategy_reproduces_the_hydra() -> None:
    battle = Battle(ExpSeq.of(2, 2))
    assert battle.play_out(critical_strategy, max_moves=100)
    assert battle.t == 14
    with pytest.raises(RuntimeError):
        battle.play(1)


def test_every_strategy_terminates() -> None:
    for strategy in (leading_strategy, random_strategy(0), random_strategy(1)):
        battle = Battle(ExpSeq.of(2, 2))
        assert battle.play_out(strategy, max_moves=10_000)
        assert 0 < battle.t <= 10_000

    leading = Battle(delta3(1))
    leading.play_out(leading_strategy, max_moves=10_000)
    assert leading.won and leading.t <= T(delta3(1))


def test_random_strategy_is_seeded() -> None:
    a, b = Battle(delta3(1)), Battle(delta3(1))
    a.play_out(random_strategy(42), max_moves=10_000)
    b.play_out(random_strategy(42), max_moves=10_000)
    assert a.moves == b.moves


def test_trace_roundtrip(tmp_path: Path) -> None:
    battle = Battle(ExpSeq.of(2, 2))
    battle.play_out(random_strategy(3), max_moves=10_000)
    path = tmp_path / "battle_trace.txt"
    battle.save_trace(path)

    assert path.read_text().startswith("# start (2,2)\n")
    replayed = Battle.replay(path)
    assert replayed.moves == battle.moves
    assert replayed.won


def test_replay_rejects_bad_traces(tmp_path: Path) -> None:
    path = tmp_path / "bad.txt"
    path.write_text("1\t1\t(2,1)\n")
    with pytest.raises(ValueError):
        Battle.replay(path)

    path.write_text("# start (2,2)\n1\t1\t(2,0)\n")
    with pytest.raises(ValueError):
        Battle.replay(path)
