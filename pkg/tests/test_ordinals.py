import pytest

from braidwo.errors import BudgetExhausted, OrdinalSyntaxError
from braidwo.ordinals import (
    OMEGA,
    ONE,
    ZERO,
    Ordinal,
    braid_offset,
    format_ordinal,
    fund_seq,
    fund_seq_braid,
    fundamental,
    hardy,
    ilog2p1,
    iroot,
    isqrt,
    nat,
    omega_mul,
    omega_power,
    ord_add,
    ord_cmp,
    ord_sum,
    parse_ordinal,
    predecessor,
    sci_digest,
)
from braidwo.outcomes import FundamentalVariant, OrderResult

W2 = omega_power(nat(2))
W_W = omega_power(OMEGA)


def test_parse_and_format() -> None:
    a = parse_ordinal("w^(2)*3+w+4")
    assert a == Ordinal(((nat(2), 3), (ONE, 1), (ZERO, 4)))
    assert format_ordinal(a) == "w^(2)*3+w+4"
    assert parse_ordinal("0") == ZERO
    assert parse_ordinal("w^(w)") == W_W
    assert format_ordinal(omega_power(ONE, 2)) == "w*2"
    assert str(nat(7)) == "7"

    for bad in ["w+w^(2)", "w^(2", "w*", "x", "w+"]:
        with pytest.raises(OrdinalSyntaxError):
            parse_ordinal(bad)


def test_cnf_validation() -> None:
    with pytest.raises(ValueError):
        Ordinal(((ONE, 1), (nat(2), 1)))
    with pytest.raises(ValueError):
        Ordinal(((ONE, 0),))
    with pytest.raises(ValueError):
        nat(-1)


def test_comparison_and_arithmetic() -> None:
    assert ord_cmp(nat(100), OMEGA) is OrderResult.LESS
    assert ord_cmp(W2, omega_power(ONE, 5)) is OrderResult.GREATER
    assert nat(3) < OMEGA < W2 < W_W
    assert ord_add(nat(3), OMEGA) == OMEGA
    assert ord_add(OMEGA, nat(3)) == parse_ordinal("w+3")
    assert ord_add(OMEGA, OMEGA) == omega_power(ONE, 2)
    assert ord_sum(W2, OMEGA, W2) == omega_power(nat(2), 2)
    assert omega_mul(ONE, nat(2)) == omega_power(ONE, 2)
    assert omega_mul(ONE, parse_ordinal("w+2")) == parse_ordinal("w^(2)+w*2")

    assert predecessor(parse_ordinal("w+3")) == parse_ordinal("w+2")
    assert predecessor(ONE) == ZERO
    with pytest.raises(ValueError):
        predecessor(OMEGA)


def test_ordinal_properties() -> None:
    a = parse_ordinal("w*2+5")
    assert a.is_successor and not a.is_limit and not a.is_finite
    assert a.finite_part == 5
    assert a.without_finite_part() == omega_power(ONE, 2)
    assert int(nat(9)) == 9
    assert OMEGA.is_limit
    with pytest.raises(ValueError):
        int(OMEGA)


def test_standard_fundamental_sequences() -> None:
    assert fund_seq(OMEGA, 5) == nat(5)
    assert fund_seq(W2, 3) == omega_power(ONE, 3)
    assert fund_seq(W_W, 2) == W2
    assert fund_seq(parse_ordinal("w^(2)+w"), 4) == parse_ordinal("w^(2)+4")
    assert fund_seq(nat(4), 9) == nat(3)
    assert fund_seq(ZERO, 9) == ZERO


def test_braid_fundamental_sequences() -> None:
    assert braid_offset(3) == 1
    assert braid_offset(4) == braid_offset(7) == 2
    assert fund_seq_braid(OMEGA, 5) == nat(5)
    assert fund_seq_braid(W2, 3) == omega_power(ONE, 4)
    assert fund_seq_braid(omega_power(nat(3)), 3) == omega_power(nat(2), 5)
    # only single terms with coefficient 1 are adapted
    assert fund_seq_braid(omega_power(nat(2), 2), 3) == parse_ordinal("w^(2)+w*3")

    with pytest.raises(ValueError):
        fund_seq_braid(W_W, 2)
    assert fundamental(W_W, 2, FundamentalVariant.BRAID) == W2


def test_hardy_values() -> None:
    assert hardy(ZERO, 7) == 7
    assert hardy(nat(5), 3) == 8
    assert all(hardy(OMEGA, x) == 2 * x + 1 for x in range(50))
    assert all(hardy(omega_power(ONE, 2), x) == 4 * x + 3 for x in range(50))
    assert all(hardy(W2, x) == (x + 2) * 2**x - 1 for x in range(12))
    assert all(
        hardy(W2, x, FundamentalVariant.BRAID) == (x + 2) * 2 ** (x + 1) - 1 for x in range(12)
    )
    assert hardy(W_W, 2) == 39


def test_hardy_budget() -> None:
    with pytest.raises(BudgetExhausted) as info:
        hardy(W_W, 5, budget_bits=64)
    assert info.value.budget == 64


def test_integer_helpers() -> None:
    assert ilog2p1(0) == 0
    assert ilog2p1(1) == 1
    assert ilog2p1(8) == 4
    assert iroot(10**30, 3) == 10**10
    assert iroot(10**30 - 1, 3) == 10**10 - 1
    assert iroot(26, 3) == 2
    assert isqrt(99) == 9
    assert all(isqrt(n * n) == n and isqrt(n * n + 2 * n) == n for n in range(200))
    assert sci_digest(123) == "123 (7 bits)"
    assert sci_digest(10**20) == "1.00000000000e20 (67 bits)"

    with pytest.raises(ValueError):
        iroot(5, 0)
    with pytest.raises(ValueError):
        ilog2p1(-1)
