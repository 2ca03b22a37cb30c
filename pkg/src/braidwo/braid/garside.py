"""Right greedy normal form of positive 3-braids and the Garside complexity."""

from dataclasses import dataclass
import logging
from typing import Dict, List, Sequence, Tuple

from .expseq import ExpSeq, block_decompose, delta3, shortlex_key, word_of
from .word import Word

logger = logging.getLogger(__name__)

DELTA_WORD: Word = (1, 2, 1)

SIMPLES: Tuple[Word, ...] = ((), (1,), (2,), (1, 2), (2, 1), (1, 2, 1))

FACTORS: Tuple[Word, ...] = ((1,), (2,), (1, 2), (2, 1))


@dataclass(frozen=True)
class GreedyNF:
    """b = w_r ... w_1 . Delta^d with factors listed leading-first."""

    d: int = 0
    factors: Tuple[Word, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(tuple(f) for f in self.factors))
        for f in self.factors:
            if f not in FACTORS:
                raise ValueError(f"Not a permitted greedy factor: {f}")
        for left, right in zip(self.factors, self.factors[1:]):
            if left[-1] != right[0]:
                raise ValueError(f"Chaining violated between {left} and {right}")

    @property
    def r(self) -> int:
        return len(self.factors)

    def word(self) -> Word:
        letters = [x for f in self.factors for x in f]
        return tuple(letters) + DELTA_WORD * self.d


class _GreedyBuilder:
    def __init__(self):
        self.d = 0
        self.factors: List[List[int]] = []

    def push(self, x: int):
        y = x if self.d % 2 == 0 else 3 - x
        if not self.factors:
            self.factors.append([y])
            return
        s = self.factors[-1]
        if s[-1] == y:
            self.factors.append([y])
        elif len(s) == 1:
            s.append(y)
        else:
            # s.y is the full twist
            self.factors.pop()
            self.d += 1

    def result(self) -> GreedyNF:
        return GreedyNF(self.d, tuple(tuple(f) for f in self.factors))


def greedy_from_word(w: Sequence[int]) -> GreedyNF:
    builder = _GreedyBuilder()
    for x in w:
        builder.push(x)
    return builder.result()


def greedy_nf(b: ExpSeq) -> GreedyNF:
    return greedy_from_word(word_of(b))


def simples() -> List[ExpSeq]:
    """The six divisors of Delta, in ShortLex order."""
    return sorted({block_decompose(s) for s in SIMPLES}, key=shortlex_key)


def grouped_form(g: GreedyNF) -> Tuple[int, ...]:
    """(d_q, ..., d_1): exponents of the alternating blocks of w_r...w_1, d_1 on sigma_1."""
    letters = [x for f in g.factors for x in f]
    if not letters:
        return ()
    return block_decompose(letters).exps


def greedy_to_expseq(g: GreedyNF) -> ExpSeq:
    groups = grouped_form(g)
    d = g.d
    if d == 0:
        return ExpSeq(groups)

    def dk(k: int) -> int:
        return groups[-k] if 1 <= k <= len(groups) else 0

    q = len(groups)
    twos = (2,) * (d - 1)
    if d % 2 == 0:
        head = tuple(dk(k) for k in range(q, 2, -1))
        tail = (dk(2) + 1,) + twos + (1, d + dk(1))
    elif dk(1) > 0:
        head = tuple(dk(k) for k in range(q, 1, -1))
        tail = (dk(1) + 1,) + twos + (1, d)
    else:
        head = tuple(dk(k) for k in range(q, 3, -1))
        tail = (dk(3) + 1,) + twos + (1, d + dk(2))
    return ExpSeq(head + tail)


def complexity(b: ExpSeq) -> int:
    g = greedy_nf(b)
    return g.r + g.d


def complexity_from_groups(g: GreedyNF) -> int:
    # one factor per letter, minus one per change of letter
    groups = [n for n in grouped_form(g) if n > 0]
    if not groups:
        return g.d
    return sum(groups) + g.d - len(groups) + 1


def d_of(b: ExpSeq) -> int:
    p = b.breadth
    d = 0
    while True:
        c = d + 1
        if p < c + 2 or b.e(1) < c or b.e(2) != 1 or b.e(c + 2) < 1:
            return d
        if any(b.e(k) != 2 for k in range(3, c + 2)):
            return d
        d = c


def bridge_constant(b: ExpSeq) -> int:
    if b.is_trivial:
        raise ValueError("bridge_constant needs a nontrivial braid")
    return complexity(b) - b.length + b.breadth + d_of(b)


def divides_delta_pow(b: ExpSeq, ell: int, mode: str = "auto") -> bool:
    """Whether b left-divides Delta^ell.

    mode "table" looks b up in the recursive divisor enumeration, "closure" in the
    set of products of ell simple braids, "search" scans the words of Delta^ell.
    "auto" uses the table within the configured cap and the closure beyond it.
    """
    if b.is_trivial:
        return True
    if b.length > 3 * ell:
        return False

    if mode == "auto":
        from ..config import get_config

        mode = "table" if ell <= get_config().recursive_enum_cap else "closure"

    match mode:
        case "table":
            from ..divisors.enumeration import divisor_set

            return b in divisor_set(ell)
        case "closure":
            return b in _closure_set(ell)
        case "search":
            return _divides_by_word_search(b, ell)
        case _:
            raise ValueError(f"Unknown divisibility mode: {mode}")


def _divides_by_word_search(b: ExpSeq, ell: int) -> bool:
    from .congruence import congruence_class
    from .normal_form import normalize

    n = b.length
    for w in congruence_class(DELTA_WORD * ell):
        if normalize(w[:n]) == b:
            return True
    return False


def divisor_closure(ell: int) -> List[ExpSeq]:
    """Left divisors of Delta^ell as products of ell simple braids."""
    from .normal_form import normalize

    current = {ExpSeq()}
    for _ in range(ell):
        current = {
            normalize(word_of(c) + s) for c in current for s in SIMPLES
        }
    logger.debug("Div(Delta^%d) by closure: %d braids", ell, len(current))
    return sorted(current, key=lambda e: (e.breadth, e.exps))


_CLOSURE_SETS: Dict[int, frozenset] = {}


def _closure_set(ell: int) -> frozenset:
    if ell not in _CLOSURE_SETS:
        _CLOSURE_SETS[ell] = frozenset(divisor_closure(ell))
    return _CLOSURE_SETS[ell]
