"""Closed counting formulas for divisors of Delta^ell."""

from math import factorial
from typing import Sequence

import numpy as np
from scipy.special import comb


def total_count(ell: int) -> int:
    """Number of braids with complexity <= ell: 2^(ell+3) - 3 ell - 7."""
    return 2 ** (ell + 3) - 3 * ell - 7


def count_sigma(ell: int, m: int) -> int:
    """c_{ell,m} = C(ell+3, m+1) - ell - 3, the length of the merged block
    Sigma_{ell,2m-1} + theta_{2m-1} s1^(ell) + Sigma_{ell,2m}."""
    if not (1 <= m <= ell):
        raise ValueError(f"c_(ell,m) needs 1 <= m <= ell: {ell}, {m}")
    return int(comb(ell + 3, m + 1, exact=True)) - ell - 3


def card_S(k: int, ell: int) -> int:
    """Number of braids b <= Delta^k with complexity <= ell."""
    if not (1 <= k <= ell):
        raise ValueError(f"card_S needs ell >= k >= 1: k={k}, ell={ell}")
    return sum(int(comb(ell + 3, m + 1, exact=True)) for m in range(1, k + 1)) - k + 1


def card_S_bound(k: int, ell: int) -> int:
    return (ell + 3) ** (k + 2)


def growth_fit(k: int, ells: Sequence[int]) -> float:
    """Leading coefficient of a degree k+1 least-squares fit of card_S(k, .)."""
    x = np.asarray(ells, dtype=float)
    y = np.asarray([card_S(k, ell) for ell in ells], dtype=float)
    coeffs = np.polyfit(x, y, k + 1)
    return float(coeffs[0])


def leading_coefficient(k: int) -> float:
    return 1.0 / factorial(k + 1)
