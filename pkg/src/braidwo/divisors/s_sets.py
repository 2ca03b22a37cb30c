from typing import List

from ..braid.expseq import ExpSeq
from ..errors import IndexRangeError
from .counting import card_S
from .enumeration import enumerate_divisors, unrank_divisor


def enumerate_S(k: int, ell: int) -> List[ExpSeq]:
    """Increasing enumeration of {b <= Delta^k : complexity(b) <= ell}."""
    count = card_S(k, ell)
    table = enumerate_divisors(ell)
    return list(table.entries[:count])


def s_entry(k: int, ell: int, i: int) -> ExpSeq:
    """i-th entry of S_{k,ell}, counting from 1, without materializing the set."""
    count = card_S(k, ell)
    if not (1 <= i <= count):
        raise IndexRangeError(f"Index {i} outside S_(k={k}, ell={ell}) of size {count}")
    return unrank_divisor(ell, i - 1)
