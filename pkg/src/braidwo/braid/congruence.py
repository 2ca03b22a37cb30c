"""Brute-force word oracles: congruence classes and sigma-positive witnesses."""

from collections import deque
import itertools
import logging
from typing import Sequence, Set, Tuple

from ..errors import CongruenceOverflow
from ..outcomes import EXHAUSTED, Inconclusive, OrderResult
from .expseq import ExpSeq, compare, word_of
from .garside import DELTA_WORD
from .normal_form import normalize
from .word import Word, flip3, free_reduce, inverse_word

logger = logging.getLogger(__name__)


def _rewrites(w: Word, strands: int):
    n = len(w)
    for i in range(n - 1):
        a, b = w[i], w[i + 1]
        if abs(a - b) >= 2:
            yield w[:i] + (b, a) + w[i + 2 :]
    for i in range(n - 2):
        a, b, c = w[i], w[i + 1], w[i + 2]
        if a == c and abs(a - b) == 1:
            yield w[:i] + (b, a, b) + w[i + 3 :]


def congruence_class(
    w: Sequence[int], budget: int | None = None, strands: int | None = None
) -> Set[Word]:
    """All positive words equivalent to w under the braid relations."""
    if budget is None:
        from ..config import get_config

        budget = get_config().congruence_budget
    w = tuple(w)
    if strands is None:
        strands = max(w, default=1) + 1

    seen = {w}
    queue = deque([w])
    while queue:
        u = queue.popleft()
        for v in _rewrites(u, strands):
            if v not in seen:
                seen.add(v)
                if len(seen) > budget:
                    raise CongruenceOverflow(
                        f"Congruence class of {w} exceeds {budget} words", budget
                    )
                queue.append(v)
    return seen


def group_element(signed: Sequence[int]) -> Tuple[int, ExpSeq]:
    """(m, P) with the B_3 element equal to P . Delta^-m, P positive."""
    letters = []
    m = 0
    for x in signed:
        if x > 0:
            letters.append(x if m % 2 == 0 else 3 - x)
        else:
            # sigma_i^-1 = u . Delta^-1 with u the complementary simple
            u = (2, 1) if x == -1 else (1, 2)
            if m % 2 == 1:
                u = flip3(u)
            letters.extend(u)
            m += 1
    return m, normalize(letters)


def group_equal(u: Sequence[int], v: Sequence[int]) -> bool:
    mu, pu = group_element(u)
    mv, pv = group_element(v)
    top = max(mu, mv)
    lhs = normalize(word_of(pu) + DELTA_WORD * (top - mu))
    rhs = normalize(word_of(pv) + DELTA_WORD * (top - mv))
    return lhs == rhs


def is_sigma_positive(signed: Sequence[int]) -> bool:
    """Highest-index generator present and occurring only positively."""
    if len(signed) == 0:
        return False
    top = max(abs(x) for x in signed)
    return all(x != -top for x in signed)


def _below_delta_expression(b: ExpSeq, p: int) -> Word:
    # b^-1 . delta_p for b of breadth <= p+1
    e = [b.e(k) for k in range(1, p + 2)]
    letters = []
    powers = [-e[0] + 1] + [-e[k] + 2 for k in range(1, p)] + [-e[p] + 1 - p]
    for i, power in enumerate(powers):
        if i > 0:
            letters.append(2)
        letters.extend([1 if power > 0 else -1] * abs(power))
    return tuple(letters)


def _above_delta_expression(b: ExpSeq, p: int) -> Word:
    # delta_p^-1 . b for b of breadth exactly p+2
    letters = [1] * p
    powers = [b.e(p + 2) - 1] + [b.e(k) - 2 for k in range(p + 1, 2, -1)] + [b.e(2) - 1]
    for i, power in enumerate(powers):
        if i > 0:
            letters.append(-1)
        letters.extend([2] * power)
    letters.extend([1] * b.e(1))
    return tuple(letters)


def lemma_witness(a: ExpSeq, b: ExpSeq) -> Word | None:
    """Explicit sigma-positive expression of a^-1 b for a < b, None otherwise."""
    if compare(a, b) is not OrderResult.LESS:
        return None

    if a.breadth == b.breadth:
        r = next(k for k in range(a.breadth, 0, -1) if a.e(k) != b.e(k))
        low = ExpSeq(a.exps[-(r - 1) :] if r > 1 else ())
        high = ExpSeq((b.e(r) - a.e(r),) + (b.exps[-(r - 1) :] if r > 1 else ()))
    else:
        low, high = a, b
        r = b.breadth

    if r <= 2:
        return free_reduce(inverse_word(word_of(low)) + word_of(high))

    p = r - 2
    witness = free_reduce(
        _below_delta_expression(low, p) + _above_delta_expression(high, p)
    )
    return witness


def sigma_positive_witness(
    a: ExpSeq, b: ExpSeq, budget: int | None = None
) -> Word | Inconclusive:
    if a == b:
        raise ValueError("sigma_positive_witness needs distinct braids")

    from ..config import get_config

    config = get_config()
    if budget is None:
        budget = config.witness_budget

    target = inverse_word(word_of(a)) + word_of(b)

    candidate = lemma_witness(a, b)
    if candidate is not None and is_sigma_positive(candidate):
        if group_equal(candidate, target):
            return candidate
        logger.warning("Constructed witness %s for %s < %s failed verification", candidate, a, b)

    explored = 0
    for length in range(1, config.max_witness_length + 1):
        for cand in itertools.product((1, -1, 2), repeat=length):
            if free_reduce(cand) != cand or not is_sigma_positive(cand):
                continue
            explored += 1
            if explored > budget:
                return EXHAUSTED
            if group_equal(cand, target):
                return cand
    return EXHAUSTED
