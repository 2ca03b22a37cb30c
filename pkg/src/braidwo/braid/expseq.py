from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

from ..errors import WordSyntaxError
from ..outcomes import OrderResult
from .word import Word


def block_letter(k: int) -> int:
    """Generator of the k-th block counted from the right: 1 for odd k, 2 for even k."""
    return 1 if k % 2 == 1 else 2


def e_min(k: int) -> int:
    if k == 1:
        return 0
    elif k == 2:
        return 1
    else:
        return 2


@dataclass(frozen=True)
class ExpSeq:
    """Exponent sequence (e_p, ..., e_1) stored leading-first."""

    exps: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "exps", tuple(int(e) for e in self.exps))
        if any(e < 0 for e in self.exps):
            raise ValueError(f"Exponents must be nonnegative: {self.exps}")

    @classmethod
    def of(cls, *exps: int) -> "ExpSeq":
        return cls(tuple(exps))

    @property
    def breadth(self) -> int:
        return len(self.exps)

    def e(self, k: int) -> int:
        """e_k with k counted from the right, 0 beyond the breadth."""
        if 1 <= k <= len(self.exps):
            return self.exps[-k]
        return 0

    @property
    def length(self) -> int:
        return sum(self.exps)

    @property
    def is_trivial(self) -> bool:
        return len(self.exps) == 0

    @property
    def is_normal(self) -> bool:
        p = len(self.exps)
        if p == 0:
            return True
        if self.exps[0] < 1:
            return False
        return all(self.e(k) >= e_min(k) for k in range(1, p))

    def __str__(self):
        return "(" + ",".join(str(e) for e in self.exps) + ")"


def parse_expseq(text: str) -> ExpSeq:
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    if body.strip() == "":
        return ExpSeq()
    try:
        return ExpSeq(tuple(int(tok) for tok in body.replace(",", " ").split()))
    except ValueError as exc:
        raise WordSyntaxError(f"Cannot parse exponent sequence: {text!r}") from exc


def block_decompose(w: Sequence[int]) -> ExpSeq:
    """Raw block exponents of a word over {1, 2}; e_1 may be 0."""
    if len(w) == 0:
        return ExpSeq()
    for x in w:
        if x not in (1, 2):
            raise ValueError(f"Block decomposition needs letters 1 and 2 only: {x}")

    runs = []
    for x in w:
        if runs and runs[-1][0] == x:
            runs[-1][1] += 1
        else:
            runs.append([x, 1])

    exps = [n for _, n in runs]
    if runs[-1][0] == 2:
        exps.append(0)
    return ExpSeq(tuple(exps))


def word_of(e: ExpSeq) -> Word:
    p = e.breadth
    letters = []
    for k in range(p, 0, -1):
        letters.extend([block_letter(k)] * e.e(k))
    return tuple(letters)


def shortlex_key(e: ExpSeq) -> Tuple[int, Tuple[int, ...]]:
    return (len(e.exps), e.exps)


def compare(a: ExpSeq, b: ExpSeq) -> OrderResult:
    if not a.is_normal:
        a = _normalize(word_of(a))
    if not b.is_normal:
        b = _normalize(word_of(b))
    return OrderResult.from_keys(shortlex_key(a), shortlex_key(b))


def _normalize(w: Word) -> ExpSeq:
    from .normal_form import normalize

    return normalize(w)


def delta3(k: int) -> ExpSeq:
    if k < 0:
        raise ValueError(f"Delta power must be >= 0: {k}")
    if k == 0:
        return ExpSeq()
    return ExpSeq((1,) + (2,) * (k - 1) + (1, k))


def delta_p(p: int) -> ExpSeq:
    if p < 0:
        raise ValueError(f"delta_p needs p >= 0: {p}")
    if p == 0:
        return ExpSeq()
    return ExpSeq((1,) + (2,) * (p - 1) + (1, 0))


def normal_sequences(weight: int) -> Iterator[ExpSeq]:
    """All normal exponent sequences with the given total exponent, ShortLex order."""
    if weight == 0:
        yield ExpSeq()
        return
    for p in range(1, weight + 2):
        for exps in _fill(p, weight):
            yield ExpSeq(exps)


def _fill(p: int, weight: int) -> Iterator[Tuple[int, ...]]:
    # entries from e_p down to e_1; e_p >= 1, e_k >= e_min(k) below
    def rec(k: int, remaining: int) -> Iterator[Tuple[int, ...]]:
        lo = 1 if k == p else e_min(k)
        floor_below = sum(e_min(j) for j in range(1, k))
        if k == 1:
            if remaining >= lo:
                yield (remaining,)
            return
        for v in range(lo, remaining - floor_below + 1):
            for rest in rec(k - 1, remaining - v):
                yield (v,) + rest

    yield from rec(p, weight)


def all_braids(max_len: int) -> Iterator[ExpSeq]:
    """Distinct braids with word length <= max_len, increasing ShortLex order."""
    population = []
    for n in range(max_len + 1):
        population.extend(normal_sequences(n))
    population.sort(key=shortlex_key)
    yield from population
