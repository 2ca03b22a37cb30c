"""Dilation of the hydra sequence from Delta^k into a slowly growing descending sequence.

Entries up to h(k) are (2, ..., 2, h(k) + 2 - t) with 2k + 4 leading 2s. Beyond
h(k), entry t is glued from the hydra entry b_(log t) and the (2^(log t) - t)-th
braid of S_t, the braids below Delta^k with complexity at most
(k + 1) * iroot(2^(log t), k + 1).
"""

from functools import lru_cache
import logging
from typing import List, Tuple

from pydantic import BaseModel, Field

from ..braid.expseq import ExpSeq, compare, delta3
from ..braid.garside import complexity
from ..divisors.counting import card_S
from ..divisors.s_sets import s_entry
from ..errors import BraidwoError, IndexRangeError
from ..ordinals.ackermann import f_omega
from ..ordinals.intmath import ilog2p1, iroot
from ..outcomes import OrderResult

logger = logging.getLogger(__name__)

DEFAULT_WINDOW = 16


def lhs(k: int, t: int) -> int:
    """5k + 11 + (log t)^2 + 3(k+1) * iroot(2^(log t), k+1)."""
    L = ilog2p1(t)
    return 5 * k + 11 + L * L + 3 * (k + 1) * iroot(1 << L, k + 1)


def rhs(k: int, t: int) -> int:
    return iroot(t, k)


def s_level(k: int, t: int) -> int:
    """Complexity bound of S_t."""
    return (k + 1) * iroot(1 << ilog2p1(t), k + 1)


def _band_failures(k: int, L: int) -> Tuple[int, int] | None:
    # lhs is constant on [2^(L-1), 2^L - 1] and rhs is nondecreasing there
    lo, hi = 1 << (L - 1), (1 << L) - 1
    need = lhs(k, lo)
    if rhs(k, hi) < need:
        return lo, hi
    if rhs(k, lo) >= need:
        return None
    # least t in the band with iroot(t, k) >= need is need^k
    return lo, min(hi, need**k - 1)


def monotonicity_audit(k: int, max_bits: int) -> List[str]:
    """Places where either side of the inequality decreases along t = 2^(L-1)."""
    issues = []
    prev_l = prev_r = None
    for L in range(1, max_bits + 1):
        t = 1 << (L - 1)
        cur_l, cur_r = lhs(k, t), rhs(k, t)
        if prev_l is not None and cur_l < prev_l:
            issues.append(f"lhs decreases at t={t}")
        if prev_r is not None and cur_r < prev_r:
            issues.append(f"rhs decreases at t={t}")
        prev_l, prev_r = cur_l, cur_r
    return issues


@lru_cache(maxsize=None)
def h_of(k: int, window: int = DEFAULT_WINDOW) -> int:
    """Least h >= 4k + 10 with lhs(k, t) <= rhs(k, t) for every t in [h, h * window]."""
    if k < 1:
        raise ValueError(f"h_of needs k >= 1: {k}")
    if window < 1:
        raise ValueError(f"window must be >= 1: {window}")

    h = 4 * k + 10
    while True:
        last_failure = None
        for L in range(ilog2p1(h), ilog2p1(h * window) + 1):
            failing = _band_failures(k, L)
            if failing is None:
                continue
            lo, hi = failing
            if hi >= h and lo <= h * window:
                last_failure = hi
        if last_failure is None:
            break
        h = last_failure + 1
        if h.bit_length() > 4096:
            raise BraidwoError(f"No h found for k={k} below 2^4096")

    issues = monotonicity_audit(k, ilog2p1(h * window))
    if issues:
        logger.info("h(%d) = %d; monotonicity audit: %s", k, h, "; ".join(issues))
    else:
        logger.info("h(%d) = %d; both sides nondecreasing up to t = %d", k, h, h * window)
    return h


@lru_cache(maxsize=None)
def _hydra_entry(k: int, L: int) -> ExpSeq:
    from ..hydra.dynamics import step

    b = delta3(k)
    for t in range(1, L + 1):
        if b.is_trivial:
            raise IndexRangeError(
                f"The hydra sequence from Delta^{k} ends before entry {L}"
            )
        b = step(b, t)
    return b


def dilate(k: int, t: int, h: int | None = None, window: int = DEFAULT_WINDOW) -> ExpSeq:
    if k < 1:
        raise ValueError(f"dilate needs k >= 1: {k}")
    if t < 0:
        raise ValueError(f"dilate needs t >= 0: {t}")
    if h is None:
        h = h_of(k, window)

    if t <= h:
        return ExpSeq((2,) * (2 * k + 4) + (h + 2 - t,))

    L = ilog2p1(t)
    head = list(_hydra_entry(k, L).exps)
    if len(head) >= 2:
        head[-2] += 1
    if head:
        head[-1] += 2

    ell = s_level(k, t)
    index = (1 << L) - t
    size = card_S(k, ell)
    if index > size:
        raise IndexRangeError(
            f"Entry {index} of S_t (k={k}, t={t}) requested but S_t has {size}; "
            f"k is not large enough"
        )
    tail = list(s_entry(k, ell, index).exps)
    q = len(tail)
    if q > k + 2:
        raise IndexRangeError(f"S_t entry of breadth {q} exceeds k + 2 = {k + 2}")
    if tail:
        tail[0] += 2

    result = ExpSeq(tuple(head) + (2,) * (k + 2 - q) + tuple(tail))
    if not result.is_normal:
        logger.warning("Dilated entry t=%d for k=%d is not normal: %s", t, k, result)
    return result


class DilationRow(BaseModel):
    t: int
    entry: str
    normal: bool
    complexity: int
    bound: int

    model_config = {"frozen": True}

    @property
    def within_bound(self) -> bool:
        return self.complexity <= self.bound


class DilationReport(BaseModel):
    k: int
    h: int
    window: int
    t_first: int
    t_last: int
    rows: List[DilationRow] = Field(default_factory=list)
    violations: List[str] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def dilation_window(
    k: int, t_first: int, t_last: int, window: int = DEFAULT_WINDOW
) -> DilationReport:
    """dilate(k, t) over [t_first, t_last], checking descent, normality and
    complexity <= 2 h(k) + f_omega(t). Failures are collected, not raised."""
    h = h_of(k, window)
    report = DilationReport(k=k, h=h, window=window, t_first=t_first, t_last=t_last)
    prev = None
    for t in range(t_first, t_last + 1):
        try:
            b = dilate(k, t, h=h)
        except IndexRangeError as exc:
            report.violations.append(f"t={t}: {exc}")
            logger.warning("Dilation for k=%d fails at t=%d: %s", k, t, exc)
            prev = None
            continue
        row = DilationRow(
            t=t,
            entry=str(b),
            normal=b.is_normal,
            complexity=complexity(b),
            bound=2 * h + f_omega(t),
        )
        report.rows.append(row)
        if not row.normal:
            report.violations.append(f"t={t}: {b} is not normal")
        if not row.within_bound:
            report.violations.append(
                f"t={t}: complexity {row.complexity} exceeds {row.bound}"
            )
        if prev is not None and compare(b, prev) is not OrderResult.LESS:
            report.violations.append(f"t={t}: not below the entry at t={t - 1}")
        prev = b
    return report
