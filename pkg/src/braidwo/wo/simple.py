"""(k, f)-simple descending sequences and their longest witnesses."""

from bisect import bisect_left
from dataclasses import dataclass
import logging
from typing import Dict, List, NamedTuple, Sequence, Tuple

from ..braid.expseq import ExpSeq, compare, delta3, shortlex_key
from ..braid.garside import complexity
from ..divisors.enumeration import enumerate_divisors
from ..outcomes import NONE, ExperimentOutcome, Inconclusive, OrderResult
from .growth import GrowthFunction, GrowthSpec, square

logger = logging.getLogger(__name__)


def _as_function(f: GrowthSpec | GrowthFunction) -> GrowthFunction:
    if isinstance(f, GrowthSpec):
        return f.build()
    return f


@dataclass(frozen=True)
class SimpleSeq:
    k: int
    growth: GrowthSpec
    entries: Tuple[ExpSeq, ...]

    def __len__(self):
        return len(self.entries)

    def check(self) -> "SimplicityCheck":
        return is_simple(self.entries, self.k, self.growth)


class SimplicityCheck(NamedTuple):
    ok: bool
    index: int | None = None
    reason: str = ""


def is_simple(
    seq: Sequence[ExpSeq], k: int, f: GrowthSpec | GrowthFunction
) -> SimplicityCheck:
    """Descent and the complexity bound complexity(b_t) <= k + f(t), first failure reported."""
    func = _as_function(f)
    for t, b in enumerate(seq):
        if t > 0 and compare(b, seq[t - 1]) is not OrderResult.LESS:
            return SimplicityCheck(False, t, f"entry {t} is not below entry {t - 1}")
        c = complexity(b)
        if c > k + func(t):
            return SimplicityCheck(
                False, t, f"complexity {c} exceeds {k} + f({t}) = {k + func(t)}"
            )
    return SimplicityCheck(True)


def max_below(b: ExpSeq, ell: int) -> ExpSeq | Inconclusive:
    """The largest braid strictly below b among the divisors of Delta^ell."""
    if b.is_trivial:
        return NONE
    table = enumerate_divisors(ell)
    idx = bisect_left(table.keys(), shortlex_key(b))
    return table[idx - 1]


@dataclass(frozen=True)
class LongestResult:
    length: int
    witness: SimpleSeq
    outcome: ExperimentOutcome
    note: str = ""


def longest_simple(
    k: int, f: GrowthSpec | GrowthFunction, budget: int | None = None
) -> LongestResult:
    """Greedy longest (k, f)-simple descending sequence.

    Starts from Delta^(k + f(0)) and repeatedly takes the largest braid below
    the current entry that meets the bound at the next index.
    """
    from ..config import get_config

    config = get_config()
    if budget is None:
        budget = config.stepwise_budget
    if k < 0:
        raise ValueError(f"k must be >= 0: {k}")

    spec = f if isinstance(f, GrowthSpec) else GrowthSpec(name=getattr(f, "__name__", "custom"))
    func = _as_function(f)
    cap = config.recursive_enum_cap

    def result(entries, outcome, note=""):
        if outcome is ExperimentOutcome.LOWER_BOUND:
            logger.info("Longest (%d, %s)-simple sequence: lower bound %d (%s)", k, spec.label(), len(entries), note)
        return LongestResult(len(entries), SimpleSeq(k, spec, tuple(entries)), outcome, note)

    entries: List[ExpSeq] = [delta3(k + func(0))]
    while True:
        t = len(entries)
        if t >= budget:
            return result(entries, ExperimentOutcome.LOWER_BOUND, f"step budget {budget} reached")
        ell = k + func(t)
        if ell > cap:
            return result(
                entries,
                ExperimentOutcome.LOWER_BOUND,
                f"bound {ell} at t={t} exceeds the enumeration cap {cap}",
            )
        nxt = max_below(entries[-1], ell)
        if nxt is NONE:
            return result(entries, ExperimentOutcome.TRUE_MAX)
        entries.append(nxt)


def exhaustive_longest(
    k: int, f: GrowthSpec | GrowthFunction, horizon: int = 64
) -> LongestResult:
    """Longest (k, f)-simple descending sequence by memoized tree search."""
    spec = f if isinstance(f, GrowthSpec) else GrowthSpec(name=getattr(f, "__name__", "custom"))
    func = _as_function(f)
    memo: Dict[Tuple[int, ExpSeq], Tuple[int, ExpSeq | None]] = {}
    truncated = [False]

    def candidates(t: int, below: ExpSeq | None) -> Sequence[ExpSeq]:
        table = enumerate_divisors(k + func(t))
        if below is None:
            return table.entries
        return table.entries[: bisect_left(table.keys(), shortlex_key(below))]

    def best(t: int, b: ExpSeq) -> int:
        key = (t, b)
        if key in memo:
            return memo[key][0]
        if t + 1 >= horizon:
            truncated[0] = True
            memo[key] = (1, None)
            return 1
        length, successor = 1, None
        for c in candidates(t + 1, b):
            n = 1 + best(t + 1, c)
            if n > length:
                length, successor = n, c
        memo[key] = (length, successor)
        return length

    start, length = None, 0
    for b in candidates(0, None):
        n = best(0, b)
        if n > length:
            start, length = b, n

    entries: List[ExpSeq] = []
    t, b = 0, start
    while b is not None:
        entries.append(b)
        b = memo[(t, b)][1]
        t += 1

    outcome = ExperimentOutcome.LOWER_BOUND if truncated[0] else ExperimentOutcome.TRUE_MAX
    return LongestResult(length, SimpleSeq(k, spec, tuple(entries)), outcome)


def hydra_simple_check(b: ExpSeq, horizon: int) -> SimplicityCheck:
    """The hydra sequence from b is (complexity(b) + 6, square)-simple over the horizon."""
    from ..hydra.dynamics import run

    trace = run(b, max_steps=horizon)
    entries = [s.braid for s in trace.states]
    return is_simple(entries, complexity(b) + 6, square)


def constant_bound(k: int, r: int) -> int:
    """2^(3(k+r)+1), above every (k, const(r))-simple length."""
    return 1 << (3 * (k + r) + 1)


def bad_sequence_count(k: int, ell: int) -> Tuple[int, int]:
    """(card S_(k,ell), (ell+3)^(k+2)): candidate entries below Delta^k against their bound."""
    from ..divisors.counting import card_S, card_S_bound

    return card_S(k, ell), card_S_bound(k, ell)
