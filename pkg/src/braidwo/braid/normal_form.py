from typing import Sequence

from .expseq import ExpSeq
from .garside import greedy_from_word, greedy_to_expseq


def normalize(w: Sequence[int]) -> ExpSeq:
    """phi-normal exponent sequence of the positive 3-braid represented by w."""
    for i, x in enumerate(w):
        if x not in (1, 2):
            raise ValueError(f"Letter {x} at index {i} is not a positive B_3 generator")
    return greedy_to_expseq(greedy_from_word(w))


def is_phi_normal_word(w: Sequence[int]) -> bool:
    from .expseq import block_decompose, word_of

    e = block_decompose(w)
    return e.is_normal and tuple(word_of(e)) == tuple(w)
