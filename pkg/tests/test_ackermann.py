import numpy as np
import pytest

from braidwo.ordinals import (
    ack_inv,
    ack_r_inv,
    ackermann,
    ackermann_diag,
    ackermann_recursive,
    f_omega,
    f_r,
)
from braidwo.outcomes import ABOVE_CUTOFF


def test_diagonal_values() -> None:
    assert [ackermann_diag(x) for x in range(4)] == [1, 3, 7, 61]
    assert ackermann(4, 1, cutoff=10**6) == 65533
    assert ackermann(4, 2, cutoff=10**6) is ABOVE_CUTOFF
    assert ackermann_diag(4, cutoff=10**100) is ABOVE_CUTOFF


def test_closed_forms_match_recursion() -> None:
    for r in range(4):
        for x in range(6):
            assert ackermann(r, x) == ackermann_recursive(r, x)


def test_cutoff_is_exact() -> None:
    assert ackermann(2, 10, cutoff=23) == 23
    assert ackermann(2, 10, cutoff=22) is ABOVE_CUTOFF
    assert ackermann(3, 5, cutoff=253) == 253
    assert ackermann(3, 5, cutoff=252) is ABOVE_CUTOFF


def test_invalid_arguments() -> None:
    with pytest.raises(ValueError):
        ackermann(-1, 0)
    with pytest.raises(ValueError):
        ackermann(4, 1)
    with pytest.raises(ValueError):
        ack_inv(-1)


def test_inverses() -> None:
    assert [ack_inv(x) for x in (0, 1, 2, 3, 4, 7, 8, 61, 62)] == [0, 0, 1, 1, 2, 2, 3, 3, 4]
    assert ack_inv(10**50) == 4
    assert ack_r_inv(2, 10) == 4
    assert ack_r_inv(2, 9) == 3
    assert ack_r_inv(3, 5) == 0
    assert ack_r_inv(3, 6) == 1
    assert ack_r_inv(0, 100) == 99


def test_inverse_brackets_random_arguments() -> None:
    rng = np.random.default_rng(7)
    for x in rng.integers(1, 10**9, size=100):
        x = int(x)
        for r in (1, 2, 3):
            y = ack_r_inv(r, x)
            assert ackermann(r, y) >= x
            assert y == 0 or ackermann(r, y - 1) < x


def test_threshold_functions() -> None:
    assert f_omega(100) == 40
    assert f_omega(1) == 0
    assert f_r(2, 100) == 490
