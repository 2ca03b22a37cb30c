"""Words of special braids: skew products, their parsing and splittings."""

from itertools import groupby
from typing import List, Sequence, Tuple

from ..braid.word import Word, flip
from ..errors import NotSpecialError
from .tree import Leaf, Node, SkewTree, skew_tree


def flip_prefix(n: int) -> Word:
    """sigma_1 sigma_2^2 ... sigma_(n-2)^2 sigma_(n-1)."""
    middle = tuple(x for i in range(2, n - 1) for x in (i, i))
    return (1,) + middle + (n - 1,)


def flip_suffix(n: int) -> Word:
    return tuple(reversed(flip_prefix(n)))


def tau(n: int) -> Word:
    """sigma_(n-2)^2 ... sigma_2^2 sigma_1."""
    return tuple(x for i in range(n - 2, 1, -1) for x in (i, i)) + (1,)


def decorated_flip(n: int, w: Sequence[int]) -> Word:
    return flip_prefix(n) + flip(n, w) + flip_suffix(n)


def special_word(tree: SkewTree) -> Word:
    """The unique word representative of a special braid."""
    if isinstance(tree, Leaf):
        return (1,) * tree.e
    n, p = tree.n, tree.p
    letters: List[int] = []
    for idx, child in enumerate(tree.children):
        w = special_word(child)
        if (p - idx) % 2 == 0:
            letters.extend(decorated_flip(n, w))
        else:
            letters.extend(w)
    return tuple(letters)


def skew_product(n: int, children: Sequence[SkewTree]) -> Word:
    """Word of <b_p, ..., b_1>_(n,p); a single child is returned unchanged."""
    return special_word(skew_tree(n, children))


def is_repetitive(w: Sequence[int]) -> bool:
    """Adjacent letters differ by at most one and every inner run has length >= 2."""
    if any(abs(a - b) > 1 for a, b in zip(w, w[1:])):
        return False
    runs = [len(list(g)) for _, g in groupby(w)]
    return all(r >= 2 for r in runs[1:-1])


def parse_special(n: int, w: Sequence[int], offset: int = 0) -> SkewTree:
    """The skew tree of the special n-braid written w.

    Letters sigma_(n-1) mark decorated flips; a flipped factor runs from the
    nearest sigma_1 before its sigma_(n-1) letters to the nearest one after.
    """
    w = tuple(w)
    for i, x in enumerate(w):
        if not (1 <= x < n):
            raise NotSpecialError(f"Letter {x} is not a generator of B_{n}", offset + i)
    if n == 2:
        return Leaf(len(w))
    top = n - 1
    if top not in w:
        return parse_special(n - 1, w, offset)

    segments: List[Tuple[int, int]] = []
    i = 0
    while i < len(w):
        if w[i] != top:
            i += 1
            continue
        left = next((j for j in range(i - 1, -1, -1) if w[j] == 1), None)
        if left is None or (segments and left < segments[-1][1]):
            raise NotSpecialError(f"sigma_{top} not opened by a sigma_1", offset + i)
        right = next((j for j in range(i + 1, len(w)) if w[j] == 1), None)
        if right is None:
            raise NotSpecialError(f"sigma_{top} not closed by a sigma_1", offset + i)
        segments.append((left, right + 1))
        i = right + 1

    pre, suf = flip_prefix(n), flip_suffix(n)
    flipped = []
    for start, end in segments:
        seg = w[start:end]
        if len(seg) < len(pre) + len(suf) or seg[: len(pre)] != pre:
            raise NotSpecialError("Flipped factor does not open with the flip prefix", offset + start)
        if seg[len(seg) - len(suf) :] != suf:
            raise NotSpecialError("Flipped factor does not close with the flip suffix", offset + end - 1)
        inner = flip(n, seg[len(pre) : len(seg) - len(suf)])
        flipped.append(parse_special(n - 1, inner, offset + start + len(pre)))

    gaps = []
    prev = 0
    for start, end in segments:
        gaps.append((prev, start))
        prev = end
    gaps.append((prev, len(w)))
    plain = [parse_special(n - 1, w[a:b], offset + a) for a, b in gaps]

    children: List[SkewTree] = [] if gaps[0][0] == gaps[0][1] else [plain[0]]
    for f, g in zip(flipped, plain[1:]):
        children.extend((f, g))

    try:
        tree = skew_tree(n, children)
    except ValueError as exc:
        raise NotSpecialError(str(exc), offset + segments[0][0]) from exc

    rebuilt = special_word(tree)
    if rebuilt != w:
        pos = next((j for j, (a, b) in enumerate(zip(rebuilt, w)) if a != b), min(len(rebuilt), len(w)))
        raise NotSpecialError("Word differs from the skew product it parses to", offset + pos)
    return tree


def splitting(tree: SkewTree) -> List[Word]:
    """Factors (f_P, ..., f_1) with b = phi^(P-1) f_P ... phi f_2 . f_1."""
    if isinstance(tree, Leaf):
        return [special_word(tree)]
    n, p = tree.n, tree.p
    t = tau(n)
    words = [special_word(c) for c in tree.children]
    if p % 2 == 0:
        factors = [(1,)]
        middle = words[:-1]
    else:
        factors = [words[0] + (1,)]
        middle = words[1:-1]
    factors.extend(t + w + (1,) for w in middle)
    factors.append(t + words[-1])
    return factors


def _partial_product(n: int, factors: Sequence[Word], k: int) -> Word:
    # phi^(P-k) f_P ... phi f_(k+1) . f_k
    P = len(factors)
    letters: List[int] = []
    for idx in range(P - k + 1):
        j = P - idx
        f = factors[idx]
        letters.extend(flip(n, f) if (j - k) % 2 == 1 else f)
    return tuple(letters)


def reconstruct(n: int, factors: Sequence[Word]) -> Word:
    return _partial_product(n, factors, 1)


def splitting_is_valid(n: int, factors: Sequence[Word]) -> bool:
    """Every partial product is a repetitive word ending with sigma_1."""
    for k in range(1, len(factors) + 1):
        w = _partial_product(n, factors, k)
        if w and (w[-1] != 1 or not is_repetitive(w)):
            return False
    return True
