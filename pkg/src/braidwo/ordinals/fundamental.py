from ..outcomes import FundamentalVariant
from .cnf import ZERO, Ordinal, nat, omega_power, ord_add, predecessor


def _split_last(lam: Ordinal):
    """lam = gamma + omega^delta, returning (gamma, delta)."""
    *head, (delta, c) = lam.terms
    if c > 1:
        head.append((delta, c - 1))
    return Ordinal(tuple(head)), delta


def fund_seq(lam: Ordinal, x: int) -> Ordinal:
    if lam.is_zero:
        return ZERO
    gamma, delta = _split_last(lam)
    if delta.is_zero:
        return gamma
    if delta.is_successor:
        return ord_add(gamma, omega_power(predecessor(delta), x))
    return ord_add(gamma, omega_power(fund_seq(delta, x)))


def braid_offset(p: int) -> int:
    return 1 if p == 3 else 2


def fund_seq_braid(lam: Ordinal, x: int) -> Ordinal:
    """Fundamental sequences matching the 3-strand hydra dynamics below omega^omega."""
    if lam.terms and not lam.terms[0][0].is_finite:
        raise ValueError(f"Braid-adapted sequences are defined below w^(w): {lam}")
    if len(lam.terms) == 1 and lam.terms[0][1] == 1:
        p = int(lam.terms[0][0]) + 1
        if p >= 3:
            return omega_power(nat(p - 2), x + braid_offset(p))
    return fund_seq(lam, x)


def fundamental(lam: Ordinal, x: int, variant: FundamentalVariant) -> Ordinal:
    match variant:
        case FundamentalVariant.STANDARD:
            return fund_seq(lam, x)
        case FundamentalVariant.BRAID:
            # at and above w^(w) the braid variant falls back to the standard rule
            if lam.terms and not lam.terms[0][0].is_finite:
                return fund_seq(lam, x)
            return fund_seq_braid(lam, x)
        case _:
            raise NotImplementedError(variant)
