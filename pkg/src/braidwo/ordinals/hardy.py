"""Hardy hierarchy evaluation with phase skipping."""

import logging

from ..errors import BudgetExhausted
from ..outcomes import FundamentalVariant
from .cnf import ONE, Ordinal
from .fundamental import fundamental

logger = logging.getLogger(__name__)


def _check_bits(x: int, budget_bits: int, alpha: Ordinal):
    if x.bit_length() > budget_bits:
        raise BudgetExhausted(
            f"Hardy argument exceeds {budget_bits} bits", budget_bits, f"at {alpha}"
        )


def hardy(
    alpha: Ordinal,
    x: int,
    variant: FundamentalVariant = FundamentalVariant.STANDARD,
    budget_bits: int | None = None,
) -> int:
    """H_alpha(x): H_0(x) = x, H_(a+1)(x) = H_a(x+1), H_lam(x) = H_lam[x](x+1).

    A trailing finite part m is one jump x += m. A trailing w*c collapses to
    x = 2^c (x+1) - 1 since H_w(x) = 2x + 1 under both variants.
    """
    if budget_bits is None:
        from ..config import get_config

        budget_bits = get_config().hardy_budget_bits

    while not alpha.is_zero:
        exponent, c = alpha.terms[-1]
        if exponent.is_zero:
            x += c
            alpha = alpha.without_finite_part()
        elif exponent == ONE:
            if c + (x + 1).bit_length() > budget_bits:
                raise BudgetExhausted(
                    f"Hardy doubling run of length {c} exceeds {budget_bits} bits",
                    budget_bits,
                    f"at {alpha}",
                )
            x = ((x + 1) << c) - 1
            alpha = Ordinal(alpha.terms[:-1])
            logger.debug("Collapsed w*%d run, argument now %d bits", c, x.bit_length())
        else:
            alpha = fundamental(alpha, x, variant)
            x += 1
        _check_bits(x, budget_bits, alpha)
    return x
