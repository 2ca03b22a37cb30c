"""The increasing enumeration of the left divisors of Delta^ell."""

from collections import deque
from functools import lru_cache
import logging
from typing import Dict, List, Tuple

from ..braid.expseq import ExpSeq, compare, shortlex_key, word_of
from ..braid.garside import DELTA_WORD, greedy_to_expseq, _GreedyBuilder
from ..braid.normal_form import normalize
from ..braid.word import Word
from ..errors import CapExceededError, IndexRangeError
from ..outcomes import OrderResult

logger = logging.getLogger(__name__)

_PREFIXES = {0: (1,), 1: (2, 1), 2: (2,), 3: (1, 2)}


def theta_word(m: int) -> Word:
    """Length-m suffix of the left-infinite word ...s1 s1 s2 s2 s1 s1 s2."""
    if m < 0:
        raise ValueError(f"theta needs m >= 0: {m}")
    # position j counted from the right: j = 1 is s2, then pairs alternate s1, s2
    letters = [2 if j == 1 or ((j - 2) // 2) % 2 == 1 else 1 for j in range(1, m + 1)]
    return tuple(reversed(letters))


def theta(m: int) -> ExpSeq:
    return normalize(theta_word(m))


def theta_block(m: int, ell: int) -> List[Word]:
    """theta_m, theta_m s1, ..., theta_m s1^ell."""
    base = theta_word(m)
    return [base + (1,) * j for j in range(ell + 1)]


@lru_cache(maxsize=None)
def sigma_block_words(ell: int, m: int) -> Tuple[Word, ...]:
    """The block Sigma_{ell,m} of the recursion, as words."""
    if ell < 1 or not (1 <= m <= 2 * ell):
        raise ValueError(f"Sigma_(ell,m) needs ell >= 1 and 1 <= m <= 2 ell: {ell}, {m}")
    if m == 1 or m == 2 * ell:
        return ()
    prefix = _PREFIXES[m % 4]
    a = m - 1 if m % 2 == 0 else m - 2
    inner = (
        list(sigma_block_words(ell - 1, a))
        + theta_block(a, ell - 1)
        + list(sigma_block_words(ell - 1, a + 1))
    )
    return tuple(prefix + w for w in inner)


def sigma_tilde_words(ell: int, m: int) -> Tuple[Word, ...]:
    return (
        sigma_block_words(ell, 2 * m - 1)
        + tuple(theta_block(2 * m - 1, ell))
        + sigma_block_words(ell, 2 * m)
    )


def divisor_words(ell: int) -> List[Word]:
    words = []
    for m in range(2 * ell + 1):
        if m >= 1:
            words.extend(sigma_block_words(ell, m))
        words.extend(theta_block(m, ell))
    return words


class EnumTable:
    def __init__(self, ell: int, entries: List[ExpSeq]):
        self.ell = ell
        self.entries: Tuple[ExpSeq, ...] = tuple(entries)
        self._ranks: Dict[ExpSeq, int] = {b: i + 1 for i, b in enumerate(self.entries)}
        self._keys = [shortlex_key(b) for b in self.entries]

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __contains__(self, b: ExpSeq):
        return b in self._ranks

    def rank(self, b: ExpSeq) -> int:
        """Position of b counting from 1."""
        if b not in self._ranks:
            raise KeyError(f"{b} does not divide Delta^{self.ell}")
        return self._ranks[b]

    def braid_at(self, rank: int) -> ExpSeq:
        if not (1 <= rank <= len(self.entries)):
            raise IndexRangeError(f"Rank {rank} outside 1..{len(self.entries)}")
        return self.entries[rank - 1]

    def is_increasing(self) -> bool:
        return all(
            compare(a, b) is OrderResult.LESS
            for a, b in zip(self.entries, self.entries[1:])
        )

    def keys(self) -> List[Tuple[int, Tuple[int, ...]]]:
        return self._keys


def delta_prefix_set(ell: int) -> frozenset:
    """Normal forms of all prefixes of all words of Delta^ell."""
    from ..braid.congruence import congruence_class

    found = set()
    for w in congruence_class(DELTA_WORD * ell):
        builder = _GreedyBuilder()
        found.add(ExpSeq())
        for x in w:
            builder.push(x)
            found.add(greedy_to_expseq(builder.result()))
    return frozenset(found)


def _brute_entries(ell: int) -> List[ExpSeq]:
    allowed = delta_prefix_set(ell)
    seen = {ExpSeq()}
    queue = deque([ExpSeq()])
    while queue:
        b = queue.popleft()
        for x in (1, 2):
            c = normalize(word_of(b) + (x,))
            if c in allowed and c not in seen:
                seen.add(c)
                queue.append(c)
    return sorted(seen, key=shortlex_key)


_TABLES: Dict[Tuple[int, str], EnumTable] = {}


def enumerate_divisors(ell: int, mode: str = "recursive", use_cache: bool = True) -> EnumTable:
    from ..config import get_config

    config = get_config()
    if ell < 0:
        raise ValueError(f"ell must be >= 0: {ell}")

    key = (ell, mode)
    if key in _TABLES:
        return _TABLES[key]

    match mode:
        case "recursive":
            if ell > config.recursive_enum_cap:
                raise CapExceededError("recursive divisor enumeration", ell, config.recursive_enum_cap)
            table = None
            if use_cache:
                from .cache import load_table

                table = load_table(ell)
            if table is None:
                table = EnumTable(ell, [normalize(w) for w in divisor_words(ell)])
                if use_cache:
                    from .cache import save_table

                    save_table(table)
        case "brute":
            if ell > config.brute_enum_cap:
                raise CapExceededError("brute-force divisor enumeration", ell, config.brute_enum_cap)
            table = EnumTable(ell, _brute_entries(ell))
        case _:
            raise ValueError(f"Unknown enumeration mode: {mode}")

    _TABLES[key] = table
    return table


def divisor_set(ell: int) -> frozenset:
    return frozenset(enumerate_divisors(ell).entries)


class BlockLengths:
    """Lengths of the Sigma_{ell,m} blocks for m <= m_cap, built bottom-up."""

    def __init__(self, m_cap: int):
        self.m_cap = m_cap
        self._rows: List[Dict[int, int]] = [{}]

    def _extend_to(self, ell: int):
        while len(self._rows) <= ell:
            e = len(self._rows)
            prev = self._rows[e - 1]
            row = {}
            for m in range(1, min(2 * e, self.m_cap) + 1):
                if m == 1 or m == 2 * e:
                    row[m] = 0
                    continue
                a = m - 1 if m % 2 == 0 else m - 2
                row[m] = prev[a] + e + prev[a + 1]
            self._rows.append(row)

    def length(self, ell: int, m: int) -> int:
        if m > self.m_cap:
            raise CapExceededError("block index of the unranking table", m, self.m_cap)
        self._extend_to(ell)
        return self._rows[ell][m]


@lru_cache(maxsize=8)
def _block_lengths(m_cap: int) -> BlockLengths:
    return BlockLengths(m_cap)


def sigma_block_length(ell: int, m: int, m_cap: int | None = None) -> int:
    if m_cap is None:
        from ..config import get_config

        m_cap = get_config().unrank_block_cap
    return _block_lengths(m_cap).length(ell, m)


def unrank_divisor(ell: int, index: int, m_cap: int | None = None) -> ExpSeq:
    """Entry number index (from 0) of the Div(Delta^ell) enumeration."""
    if m_cap is None:
        from ..config import get_config

        m_cap = get_config().unrank_block_cap
    lengths = _block_lengths(m_cap)
    if index < 0:
        raise IndexRangeError(f"Negative index {index}")

    i = index
    for m in range(2 * ell + 1):
        if m >= 1:
            if m > m_cap:
                raise CapExceededError("block index of the unranking table", m, m_cap)
            size = lengths.length(ell, m)
            if i < size:
                return normalize(_descend(lengths, ell, m, i))
            i -= size
        if i < ell + 1:
            return normalize(theta_word(m) + (1,) * i)
        i -= ell + 1
    raise IndexRangeError(f"Index {index} outside Div(Delta^{ell})")


def _descend(lengths: BlockLengths, ell: int, m: int, i: int) -> Word:
    letters: List[int] = []
    while True:
        letters.extend(_PREFIXES[m % 4])
        a = m - 1 if m % 2 == 0 else m - 2
        first = lengths.length(ell - 1, a)
        if i < first:
            ell, m = ell - 1, a
            continue
        i -= first
        if i < ell:
            letters.extend(theta_word(a))
            letters.extend([1] * i)
            return tuple(letters)
        i -= ell
        ell, m = ell - 1, a + 1
