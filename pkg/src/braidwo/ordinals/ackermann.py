"""The Ackermann family Ack_r, its diagonal, inverses and the threshold functions."""

from functools import lru_cache
from typing import Callable

from ..outcomes import ABOVE_CUTOFF, Inconclusive
from .intmath import isqrt


def ackermann(r: int, x: int, cutoff: int | None = None) -> int | Inconclusive:
    """Ack_r(x), or ABOVE_CUTOFF as soon as the value provably exceeds cutoff.

    Levels 0 to 3 use their closed forms x+1, x+2, 2x+3 and 2^(x+3)-3.
    """
    if r < 0 or x < 0:
        raise ValueError(f"Ackermann needs r, x >= 0: r={r}, x={x}")

    match r:
        case 0:
            value = x + 1
        case 1:
            value = x + 2
        case 2:
            value = 2 * x + 3
        case 3:
            if cutoff is not None and x + 3 > cutoff.bit_length() + 1:
                return ABOVE_CUTOFF
            value = (1 << (x + 3)) - 3
        case _:
            if cutoff is None:
                raise ValueError(f"Ack_{r} needs a cutoff")
            # Ack_r(x) = Ack_{r-1}^(x+1)(1)
            value = 1
            for _ in range(x + 1):
                value = ackermann(r - 1, value, cutoff)
                if value is ABOVE_CUTOFF:
                    return ABOVE_CUTOFF

    if cutoff is not None and value > cutoff:
        return ABOVE_CUTOFF
    return value


def ackermann_diag(x: int, cutoff: int | None = None) -> int | Inconclusive:
    return ackermann(x, x, cutoff)


@lru_cache(maxsize=None)
def ackermann_recursive(r: int, x: int) -> int:
    """The definitional double recursion, for small arguments only."""
    if r == 0:
        return x + 1
    value = 1
    for _ in range(x + 1):
        value = ackermann_recursive(r - 1, value)
    return value


def _least_reaching(f: Callable[[int], int | Inconclusive], x: int) -> int:
    # least y with f(y) >= x, f nondecreasing; gallop then bisect
    def reaches(y: int) -> bool:
        v = f(y)
        return v is ABOVE_CUTOFF or v >= x

    if reaches(0):
        return 0
    hi = 1
    while not reaches(hi):
        hi *= 2
    lo = hi // 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if reaches(mid):
            hi = mid
        else:
            lo = mid
    return hi


def ack_inv(x: int) -> int:
    if x < 0:
        raise ValueError(f"ack_inv needs x >= 0: {x}")
    return _least_reaching(lambda y: ackermann_diag(y, cutoff=x), x)


def ack_r_inv(r: int, x: int) -> int:
    if x < 0:
        raise ValueError(f"ack_r_inv needs x >= 0: {x}")
    return _least_reaching(lambda y: ackermann(r, y, cutoff=x), x)


def f_r(r: int, x: int) -> int:
    a = ack_r_inv(r, x)
    return isqrt(a * a * x)


def f_omega(x: int) -> int:
    a = ack_inv(x)
    return isqrt(a * a * x)


def square(x: int) -> int:
    return x * x


def const(c: int) -> Callable[[int], int]:
    def constant(x: int) -> int:
        return c

    constant.__name__ = f"const_{c}"
    return constant
