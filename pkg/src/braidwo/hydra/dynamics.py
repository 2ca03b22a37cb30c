"""The 3-strand hydra sequences b{1}{2}...{t} and their lengths."""

from dataclasses import dataclass
import logging
from typing import Callable, List, Sequence, Tuple

from ..braid.expseq import ExpSeq, e_min
from ..errors import BudgetExhausted
from ..ordinals.cnf import Ordinal, nat, omega_power
from ..outcomes import FundamentalVariant

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HydraState:
    braid: ExpSeq
    t: int = 0

    def __post_init__(self):
        if not self.braid.is_normal:
            raise ValueError(f"Hydra states hold normal braids: {self.braid}")
        if self.t < 0:
            raise ValueError(f"Step index must be >= 0: {self.t}")

    def export_line(self) -> str:
        return f"{self.t}\t{self.braid}\t{ord3(self.braid)}"


@dataclass(frozen=True)
class HydraTrace:
    states: Tuple[HydraState, ...]
    terminated: bool

    @property
    def length(self) -> int:
        return self.states[-1].t

    def export_lines(self) -> List[str]:
        return [s.export_line() for s in self.states]


def permitted_positions(b: ExpSeq) -> List[int]:
    if b.is_trivial:
        raise ValueError("The trivial braid has no positions")
    p = b.breadth
    return [r for r in range(1, p) if b.e(r) > e_min(r)] + [p]


def critical_position(b: ExpSeq) -> int:
    return permitted_positions(b)[0]


def _rewrite(b: ExpSeq, r: int, added: int) -> ExpSeq:
    exps = list(b.exps)
    p = len(exps)
    i = p - r
    if r == 1:
        exps[i] -= 1
        if p == 1 and exps[i] == 0:
            return ExpSeq()
    elif r < p or exps[0] >= 2:
        exps[i] -= 1
        exps[i + 1] += added
    else:
        exps = [exps[1] + added] + exps[2:]
    return ExpSeq(tuple(exps))


def step(b: ExpSeq, t: int, increment: Callable[[int], int] | None = None) -> ExpSeq:
    """b{t}: one letter removed at the critical block, t letters added to the next."""
    if t < 1:
        raise ValueError(f"Step index must be >= 1: {t}")
    added = t if increment is None else increment(t)
    return _rewrite(b, critical_position(b), added)


def game_step(b: ExpSeq, t: int, position: int) -> ExpSeq:
    permitted = permitted_positions(b)
    if position not in permitted:
        raise ValueError(
            f"Position {position} is not permitted for {b}; permitted: {permitted}"
        )
    return _rewrite(b, position, t)


def run(b: ExpSeq, max_steps: int | None = None) -> HydraTrace:
    if max_steps is None:
        from ..config import get_config

        max_steps = get_config().stepwise_budget

    states = [HydraState(b, 0)]
    t = 0
    while not b.is_trivial:
        if t >= max_steps:
            return HydraTrace(tuple(states), terminated=False)
        t += 1
        b = step(b, t)
        states.append(HydraState(b, t))
    return HydraTrace(tuple(states), terminated=True)


def hydra_length(b: ExpSeq, max_steps: int | None = None) -> int:
    trace = run(b, max_steps)
    if not trace.terminated:
        raise BudgetExhausted(
            f"Hydra sequence from {b} exceeds {trace.length} steps", trace.length
        )
    return trace.length


T = hydra_length


def hydra_length_fast(b: ExpSeq, budget_bits: int | None = None) -> int:
    """Exact length of the sequence, skipping stripping runs and doubling phases.

    A state (.., e_2, 0) at time T with critical position 2 reaches
    (.., e_2 - m, 0) at time 2^m (T+2) - 2.
    """
    if budget_bits is None:
        from ..config import get_config

        budget_bits = get_config().hardy_budget_bits

    exps = list(b.exps)
    T = 0
    while exps:
        current = ExpSeq(tuple(exps))
        r = critical_position(current)
        p = len(exps)
        if r == 1:
            T += exps[-1]
            exps = [] if p == 1 else exps[:-1] + [0]
        elif r == 2:
            m = exps[-2] if p == 2 else exps[-2] - 1
            if m + (T + 2).bit_length() > budget_bits:
                raise BudgetExhausted(
                    f"Doubling phase of length {m} exceeds {budget_bits} bits",
                    budget_bits,
                    f"at {current}",
                )
            T = ((T + 2) << m) - 2
            exps = [] if p == 2 else exps[:-2] + [1, 0]
            logger.debug("Doubling phase m=%d, T now %d bits", m, T.bit_length())
        else:
            T += 1
            exps = list(_rewrite(current, r, T).exps)
    return T


def ord3(b: ExpSeq) -> Ordinal:
    """w^(p-1)*e_p + sum over k < p of w^(k-1)*(e_k - e_k_min)."""
    p = b.breadth
    terms = []
    for k in range(p, 0, -1):
        c = b.e(k) if k == p else b.e(k) - e_min(k)
        if c > 0:
            terms.append((nat(k - 1), c))
    return Ordinal(tuple(terms))


def append_sigma1(b: ExpSeq, k: int) -> ExpSeq:
    if k == 0:
        return b
    if b.is_trivial:
        return ExpSeq((k,))
    return ExpSeq(b.exps[:-1] + (b.exps[-1] + k,))


def hardy_length(b: ExpSeq, k: int, budget_bits: int | None = None) -> int:
    from ..ordinals.hardy import hardy

    return hardy(ord3(b), k + 1, FundamentalVariant.BRAID, budget_bits) - 1


def u_function(k: int, budget_bits: int | None = None) -> int:
    if k < 0:
        raise ValueError(f"U needs k >= 0: {k}")
    if k == 0:
        return 2
    if k == 1:
        return 5
    from ..braid.expseq import delta3

    return hydra_length_fast(append_sigma1(delta3(k - 1), 1), budget_bits) + 1


def u_function_hardy(k: int, budget_bits: int | None = None) -> int:
    """U(k) for k >= 2 as H'_(w^k)(k+1)."""
    from ..ordinals.hardy import hardy

    return hardy(omega_power(nat(k)), k + 1, FundamentalVariant.BRAID, budget_bits)
