"""Skew trees: special braids as nested skew products.

A special braid is either a power of sigma_1 (a leaf at level 2) or a skew
product of special braids one level down. Trees are kept canonical: a node
has at least two children, a nontrivial leading child, and sits at the least
level that holds it.
"""

from dataclasses import dataclass
import re
from typing import Iterator, List, Tuple

from ..errors import TreeSyntaxError


@dataclass(frozen=True)
class Leaf:
    e: int = 0

    def __post_init__(self):
        if self.e < 0:
            raise ValueError(f"Leaf exponent must be >= 0: {self.e}")

    @property
    def level(self) -> int:
        return 2

    @property
    def is_trivial(self) -> bool:
        return self.e == 0

    @property
    def weight(self) -> int:
        return self.e

    def __str__(self):
        return format_tree(self)


@dataclass(frozen=True)
class Node:
    """<b_p, ..., b_1>_(n,p), children stored leading-first."""

    n: int
    children: Tuple["SkewTree", ...]

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if self.n < 3:
            raise ValueError(f"Skew products need n >= 3: {self.n}")
        if len(self.children) < 2:
            raise ValueError("Canonical nodes have at least two children")
        if self.children[0].is_trivial:
            raise ValueError("The leading child of a skew product must be nontrivial")
        for c in self.children:
            if c.level > self.n - 1:
                raise ValueError(
                    f"Child of level {c.level} does not fit in a level-{self.n} node"
                )

    @property
    def level(self) -> int:
        return self.n

    @property
    def is_trivial(self) -> bool:
        return False

    @property
    def p(self) -> int:
        return len(self.children)

    @property
    def weight(self) -> int:
        return sum(c.weight for c in self.children)

    def child(self, j: int) -> "SkewTree":
        """b_j, counted from the right starting at 1."""
        return self.children[-j]

    def __str__(self):
        return format_tree(self)


SkewTree = Leaf | Node

TRIVIAL = Leaf(0)


def skew_tree(n: int, children) -> SkewTree:
    """<b_p, ..., b_1>_(n,p) in canonical form."""
    children = tuple(children)
    if n == 2:
        raise ValueError("Level-2 special braids are leaves")
    if not children:
        return TRIVIAL
    if children[0].is_trivial:
        raise ValueError("The leading child of a skew product must be nontrivial")
    for c in children:
        if c.level > n - 1:
            raise ValueError(f"Child {format_tree(c)} does not fit in level {n}")
    if len(children) == 1:
        return children[0]
    return Node(n, children)


def children_at(tree: SkewTree, n: int) -> Tuple[SkewTree, ...]:
    """The sequence (b_p, ..., b_1) of tree seen as an n-special braid."""
    if tree.level > n:
        raise ValueError(f"Level-{tree.level} tree is not {n}-special")
    if tree.level == n and isinstance(tree, Node):
        return tree.children
    if tree.is_trivial:
        return ()
    return (tree,)


def format_tree(tree: SkewTree) -> str:
    if isinstance(tree, Leaf):
        return f"<{tree.e}>"
    return f"[{tree.n}: " + ", ".join(format_tree(c) for c in tree.children) + "]"


_TOKEN = re.compile(r"\s*(<\s*\d+\s*>|\[\s*\d+\s*:|,|\])")


def parse_tree_text(text: str) -> SkewTree:
    """Inverse of format_tree; nodes with a single child are folded."""
    tokens = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        m = _TOKEN.match(stripped, pos)
        if m is None:
            raise TreeSyntaxError(f"Unexpected text at offset {pos} in {text!r}")
        tokens.append(m.group(1).replace(" ", ""))
        pos = m.end()

    tree, i = _parse_tree(tokens, 0, text)
    if i != len(tokens):
        raise TreeSyntaxError(f"Trailing tokens in {text!r}")
    return tree


def _parse_tree(tokens: List[str], i: int, text: str) -> Tuple[SkewTree, int]:
    if i >= len(tokens):
        raise TreeSyntaxError(f"Unexpected end of {text!r}")
    tok = tokens[i]
    if tok.startswith("<"):
        return Leaf(int(tok[1:-1])), i + 1
    if not tok.startswith("["):
        raise TreeSyntaxError(f"Unexpected token {tok!r} in {text!r}")

    n = int(tok[1:-1])
    children = []
    i += 1
    while True:
        child, i = _parse_tree(tokens, i, text)
        children.append(child)
        if i >= len(tokens):
            raise TreeSyntaxError(f"Unclosed node in {text!r}")
        if tokens[i] == "]":
            i += 1
            break
        if tokens[i] != ",":
            raise TreeSyntaxError(f"Expected ',' or ']' in {text!r}")
        i += 1
    try:
        return skew_tree(n, children), i
    except ValueError as exc:
        raise TreeSyntaxError(f"Invalid node in {text!r}: {exc}") from exc


def theta_sp(n: int, t: int) -> SkewTree:
    """theta_(n,t) = <sigma_1, 1, ..., 1>_(n,t); theta_(2,t) = sigma_1^t."""
    if n < 2 or t < 1:
        raise ValueError(f"theta_sp needs n >= 2 and t >= 1: n={n}, t={t}")
    if n == 2:
        return Leaf(t)
    return skew_tree(n, (Leaf(1),) + (TRIVIAL,) * (t - 1))


def b_k(k: int) -> SkewTree:
    """<sigma_1, 1>_(k+3,2), the least special (k+3)-braid outside B_(k+2)."""
    if k < 0:
        raise ValueError(f"b_k needs k >= 0: {k}")
    return Node(k + 3, (Leaf(1), TRIVIAL))


def append_sigma1(tree: SkewTree, k: int) -> SkewTree:
    """The tree of b * sigma_1^k."""
    if k < 0:
        raise ValueError(f"append_sigma1 needs k >= 0: {k}")
    if k == 0:
        return tree
    if isinstance(tree, Leaf):
        return Leaf(tree.e + k)
    *head, last = tree.children
    return Node(tree.n, tuple(head) + (append_sigma1(last, k),))


def special_population(
    max_weight: int, max_level: int, max_breadth: int
) -> List[SkewTree]:
    """Canonical trees of leaf weight <= max_weight, level <= max_level, breadth <= max_breadth."""
    if max_level < 2:
        raise ValueError(f"max_level must be >= 2: {max_level}")
    return list(_trees_up_to(max_level, max_weight, max_breadth))


def _trees_up_to(level: int, max_weight: int, max_breadth: int) -> Iterator[SkewTree]:
    if level == 2:
        for e in range(max_weight + 1):
            yield Leaf(e)
        return

    lower = list(_trees_up_to(level - 1, max_weight, max_breadth))
    yield from lower
    by_weight: dict = {}
    for c in lower:
        by_weight.setdefault(c.weight, []).append(c)

    def sequences(count: int, budget: int) -> Iterator[Tuple[SkewTree, ...]]:
        if count == 0:
            yield ()
            return
        for w in range(budget + 1):
            for c in by_weight.get(w, []):
                for rest in sequences(count - 1, budget - w):
                    yield (c,) + rest

    for p in range(2, max_breadth + 1):
        for w in range(1, max_weight + 1):
            for lead in by_weight.get(w, []):
                if lead.is_trivial:
                    continue
                for rest in sequences(p - 1, max_weight - w):
                    yield Node(level, (lead,) + rest)
