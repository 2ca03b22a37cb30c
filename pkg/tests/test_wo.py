from pathlib import Path

import pytest

from braidwo.braid import ExpSeq, compare, delta3
from braidwo.divisors import total_count
from braidwo.ordinals import f_r
from braidwo.outcomes import ExperimentOutcome, OrderResult
from braidwo.wo import (
    FUNC_MAP,
    GrowthSpec,
    bad_sequence_count,
    constant_bound,
    dilate,
    dilation_window,
    exhaustive_longest,
    h_of,
    hydra_simple_check,
    is_simple,
    lhs,
    longest_simple,
    monotonicity_audit,
    parse_growth,
    register,
    rhs,
    wo_experiment,
)
from braidwo.wo.growth import const

CHAIN = [
    ExpSeq.of(1, 1, 1),
    ExpSeq.of(1, 1, 0),
    ExpSeq.of(1, 1),
    ExpSeq.of(1, 0),
    ExpSeq.of(1),
    ExpSeq(),
]


def test_growth_registry() -> None:
    assert {"const", "square", "linear", "f_r", "f_omega"} <= set(FUNC_MAP)
    assert parse_growth("const(2)") == GrowthSpec(name="const", args=[2])
    assert parse_growth("const:2") == parse_growth(" const(2) ")
    assert parse_growth("square").label() == "square"
    assert parse_growth("f_r(3)").label() == "f_r(3)"
    assert parse_growth("f_r(3)").build()(100) == f_r(3, 100)
    assert parse_growth("linear(3)").build()(5) == 15
    assert parse_growth("const(4)").build()(10**6) == 4

    with pytest.raises(ValueError):
        parse_growth("nope").build()
    with pytest.raises(ValueError):
        parse_growth("const(2")
    with pytest.raises(ValueError):
        const(-1)
    with pytest.raises(AssertionError):
        register("square")(lambda x: x)


def test_simplicity_check() -> None:
    f = const(0)
    assert is_simple(CHAIN, 1, f).ok

    check = is_simple([ExpSeq.of(1, 0), ExpSeq.of(1, 1)], 1, f)
    assert not check.ok and check.index == 1

    check = is_simple([ExpSeq.of(2)], 1, f)
    assert not check.ok and check.index == 0
    assert "exceeds" in check.reason

    assert hydra_simple_check(ExpSeq.of(2, 2), horizon=20).ok


def test_longest_simple_below_delta() -> None:
    result = longest_simple(1, GrowthSpec(name="const", args=[0]))
    assert result.length == 6
    assert list(result.witness.entries) == CHAIN
    assert result.outcome is ExperimentOutcome.TRUE_MAX
    assert result.witness.check().ok


@pytest.mark.parametrize("k, c", [(0, 0), (0, 2), (1, 0), (1, 1), (2, 0)])
def test_greedy_matches_exhaustive_for_constant_growth(k: int, c: int) -> None:
    growth = GrowthSpec(name="const", args=[c])
    greedy = longest_simple(k, growth)
    exhaustive = exhaustive_longest(k, growth)
    assert greedy.length == exhaustive.length == total_count(k + c)
    assert exhaustive.outcome is ExperimentOutcome.TRUE_MAX
    assert greedy.length <= constant_bound(k, c)


def test_longest_simple_limits() -> None:
    result = longest_simple(1, const(0), budget=3)
    assert result.length == 3
    assert result.outcome is ExperimentOutcome.LOWER_BOUND

    result = longest_simple(8, const(1))
    assert result.length == 1
    assert result.outcome is ExperimentOutcome.LOWER_BOUND
    assert "enumeration cap" in result.note

    truncated = exhaustive_longest(1, const(0), horizon=3)
    assert truncated.length == 3
    assert truncated.outcome is ExperimentOutcome.LOWER_BOUND

    with pytest.raises(ValueError):
        longest_simple(-1, const(0))


def test_bounds() -> None:
    assert constant_bound(1, 0) == 16
    assert constant_bound(2, 3) == 2**16
    assert bad_sequence_count(1, 2) == (10, 125)


def test_dilation_threshold() -> None:
    assert h_of(1) == 176
    assert lhs(1, 176) == rhs(1, 176) == 176
    assert lhs(1, 175) > rhs(1, 175)
    assert monotonicity_audit(1, 20) == []
    with pytest.raises(ValueError):
        h_of(0)


def test_dilation_entries() -> None:
    h = h_of(1)
    assert dilate(1, 0) == ExpSeq((2,) * 6 + (h + 2,))
    assert dilate(1, h) == ExpSeq((2,) * 7)

    after = dilate(1, h + 1)
    assert after.breadth == 5
    assert compare(after, dilate(1, h)) is OrderResult.LESS

    with pytest.raises(ValueError):
        dilate(0, 1)
    with pytest.raises(ValueError):
        dilate(1, -1)


def test_dilation_window_before_threshold() -> None:
    report = dilation_window(1, 1, h_of(1))
    assert report.ok
    assert len(report.rows) == h_of(1)
    assert all(row.normal and row.within_bound for row in report.rows)


def test_experiment_writes_witness(tmp_path: Path) -> None:
    path = tmp_path / "witness.txt"
    report = wo_experiment(1, GrowthSpec(name="const", args=[0]), witness_path=path)
    assert report.length == 6
    assert report.outcome is ExperimentOutcome.TRUE_MAX
    assert report.witness == [str(b) for b in CHAIN]
    assert path.read_text().splitlines() == report.witness
    assert report.witness_path == str(path)
    assert report.wall_time_s >= 0.0
    assert report.started <= report.ended
