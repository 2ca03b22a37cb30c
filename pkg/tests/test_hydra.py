import pytest

from braidwo.braid import ExpSeq, all_braids, delta3
from braidwo.errors import BudgetExhausted
from braidwo.hydra import (
    HydraState,
    T,
    append_sigma1,
    hardy_length,
    hydra_length_fast,
    mirror_check,
    mirror_offset,
    ord3,
    permitted_positions,
    route_report,
    run,
    step,
    u_function,
    u_function_hardy,
)
from braidwo.hydra.routes import PRINTED_FIGURE
from braidwo.ordinals import parse_ordinal

EXAMPLE_TRACE = [
    (2, 2),
    (2, 1),
    (2, 0),
    (1, 3),
    (1, 2),
    (1, 1),
    (1, 0),
    (7,),
    (6,),
    (5,),
    (4,),
    (3,),
    (2,),
    (1,),
    (),
]


def test_run_follows_the_critical_position() -> None:
    trace = run(ExpSeq.of(2, 2))
    assert trace.terminated
    assert [s.braid.exps for s in trace.states] == EXAMPLE_TRACE
    assert [s.t for s in trace.states] == list(range(15))
    assert trace.length == 14
    assert trace.export_lines()[0] == "0\t(2,2)\tw*2+2"


def test_lengths() -> None:
    assert T(ExpSeq.of(2, 2)) == 14
    assert T(delta3(1)) == 30
    assert T(ExpSeq()) == 0
    assert T(ExpSeq.of(5)) == 5


def test_fast_length_matches_stepwise() -> None:
    compared = 0
    for b in all_braids(6):
        trace = run(b, max_steps=5_000)
        if trace.terminated:
            assert hydra_length_fast(b) == trace.length, b
            compared += 1
    assert compared > 15


def test_step_and_positions() -> None:
    assert permitted_positions(ExpSeq.of(2, 2)) == [1, 2]
    assert permitted_positions(ExpSeq.of(1, 0)) == [2]
    assert permitted_positions(delta3(1)) == [1, 3]
    assert step(ExpSeq.of(1, 1, 0), 2) == ExpSeq.of(3, 0)

    with pytest.raises(ValueError):
        permitted_positions(ExpSeq())
    with pytest.raises(ValueError):
        step(ExpSeq.of(1), 0)
    with pytest.raises(ValueError):
        HydraState(ExpSeq.of(0, 1))


def test_budget_is_reported() -> None:
    trace = run(delta3(1), max_steps=5)
    assert not trace.terminated
    assert trace.length == 5
    with pytest.raises(BudgetExhausted):
        T(delta3(1), max_steps=5)
    with pytest.raises(BudgetExhausted):
        hydra_length_fast(delta3(3), budget_bits=64)


def test_ordinal_of_braids() -> None:
    assert ord3(ExpSeq.of(2, 2)) == parse_ordinal("w*2+2")
    assert ord3(delta3(1)) == parse_ordinal("w^(2)+1")
    assert ord3(ExpSeq.of(1, 1, 0)) == parse_ordinal("w^(2)")
    assert ord3(ExpSeq()) == parse_ordinal("0")


def test_hardy_length_matches_dynamics() -> None:
    assert hardy_length(ExpSeq.of(2, 0), 2) == 14
    compared = 0
    for b in all_braids(4):
        for k in range(3):
            try:
                dynamics = hydra_length_fast(append_sigma1(b, k))
            except BudgetExhausted:
                continue
            assert hardy_length(b, k) == dynamics, (b, k)
            compared += 1
    assert compared > 20


def test_u_function() -> None:
    assert [u_function(k) for k in range(3)] == [2, 5, 79]
    assert u_function_hardy(2) == 79
    with pytest.raises(BudgetExhausted):
        u_function_hardy(3)
    with pytest.raises(ValueError):
        u_function(-1)


def test_mirror_property() -> None:
    report = mirror_check(ExpSeq.of(2, 2), horizon=50)
    assert len(report.records) == 14
    assert report.standard_mismatches == 0
    assert report.unexplained_mismatches == 0

    report = mirror_check(delta3(1), horizon=50)
    assert report.standard_mismatches == 1
    assert report.unexplained_mismatches == 0
    drop = report.records[1]
    assert drop.case == "breadth-drop"
    assert drop.ord_after == drop.adapted_prediction == "w*3"
    assert drop.standard_prediction == "w*2"

    assert mirror_offset(ExpSeq.of(1, 1, 0)) == 1
    assert mirror_offset(ExpSeq.of(1, 0)) == 0


def test_route_report_flags_printed_figure() -> None:
    report = route_report()
    assert report.dynamics == 1153 * 2**1152 - 2
    assert report.routes_agree
    assert report.braid_hardy == report.dynamics
    assert report.standard_hardy != report.dynamics
    assert report.printed_figure == PRINTED_FIGURE
    assert not report.printed_matches
