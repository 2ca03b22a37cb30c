"""Ordinals below epsilon_0 in Cantor normal form."""

from dataclasses import dataclass
from functools import total_ordering
import re
from typing import Tuple

from ..errors import OrdinalSyntaxError
from ..outcomes import OrderResult


@total_ordering
@dataclass(frozen=True)
class Ordinal:
    """Sum of terms omega^exponent * coefficient, exponents strictly decreasing."""

    terms: Tuple[Tuple["Ordinal", int], ...] = ()

    def __post_init__(self):
        terms = tuple((e, int(c)) for e, c in self.terms)
        object.__setattr__(self, "terms", terms)
        for i, (e, c) in enumerate(terms):
            if c < 1:
                raise ValueError(f"CNF coefficients must be >= 1: {c}")
            if i > 0 and not (e < terms[i - 1][0]):
                raise ValueError("CNF exponents must be strictly decreasing")

    def __lt__(self, other: "Ordinal") -> bool:
        return ord_cmp(self, other) is OrderResult.LESS

    def __add__(self, other: "Ordinal") -> "Ordinal":
        return ord_add(self, other)

    @property
    def is_zero(self) -> bool:
        return len(self.terms) == 0

    @property
    def is_finite(self) -> bool:
        return self.is_zero or (len(self.terms) == 1 and self.terms[0][0].is_zero)

    @property
    def is_successor(self) -> bool:
        return not self.is_zero and self.terms[-1][0].is_zero

    @property
    def is_limit(self) -> bool:
        return not self.is_zero and not self.terms[-1][0].is_zero

    @property
    def finite_part(self) -> int:
        if self.terms and self.terms[-1][0].is_zero:
            return self.terms[-1][1]
        return 0

    def without_finite_part(self) -> "Ordinal":
        if self.terms and self.terms[-1][0].is_zero:
            return Ordinal(self.terms[:-1])
        return self

    def __int__(self) -> int:
        if not self.is_finite:
            raise ValueError(f"{self} is not finite")
        return self.finite_part

    def __str__(self):
        return format_ordinal(self)


ZERO = Ordinal()


def nat(n: int) -> Ordinal:
    if n < 0:
        raise ValueError(f"Natural numbers only: {n}")
    if n == 0:
        return ZERO
    return Ordinal(((ZERO, n),))


ONE = nat(1)


def omega_power(alpha: Ordinal, coeff: int = 1) -> Ordinal:
    if coeff == 0:
        return ZERO
    return Ordinal(((alpha, coeff),))


OMEGA = omega_power(ONE)


def ord_cmp(a: Ordinal, b: Ordinal) -> OrderResult:
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = ord_cmp(ea, eb)
        if c is not OrderResult.EQUAL:
            return c
        if ca != cb:
            return OrderResult.from_keys(ca, cb)
    return OrderResult.from_keys(len(a.terms), len(b.terms))


def ord_add(a: Ordinal, b: Ordinal) -> Ordinal:
    if b.is_zero:
        return a
    lead = b.terms[0][0]
    kept = []
    for e, c in a.terms:
        match ord_cmp(e, lead):
            case OrderResult.GREATER:
                kept.append((e, c))
            case OrderResult.EQUAL:
                kept.append((e, c + b.terms[0][1]))
                return Ordinal(tuple(kept) + b.terms[1:])
            case OrderResult.LESS:
                break
    return Ordinal(tuple(kept) + b.terms)


def ord_sum(*ordinals: Ordinal) -> Ordinal:
    total = ZERO
    for o in ordinals:
        total = ord_add(total, o)
    return total


def omega_mul(alpha: Ordinal, beta: Ordinal) -> Ordinal:
    """omega^alpha * beta, distributing over the terms of beta."""
    return Ordinal(tuple((ord_add(alpha, e), c) for e, c in beta.terms))


def format_ordinal(a: Ordinal) -> str:
    if a.is_zero:
        return "0"
    parts = []
    for e, c in a.terms:
        if e.is_zero:
            parts.append(str(c))
            continue
        base = "w" if e == ONE else f"w^({format_ordinal(e)})"
        parts.append(base if c == 1 else f"{base}*{c}")
    return "+".join(parts)


_TOKEN = re.compile(r"\s*(w\^\(|w|\d+|\*|\+|\))")


def parse_ordinal(text: str) -> Ordinal:
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise OrdinalSyntaxError(f"Unexpected character at {pos} in {text!r}")
        tokens.append(m.group(1))
        pos = m.end()

    result, i = _parse_sum(tokens, 0, text)
    if i != len(tokens):
        raise OrdinalSyntaxError(f"Trailing input in {text!r}")
    return result


def _parse_sum(tokens, i, text) -> Tuple[Ordinal, int]:
    terms = []
    while True:
        term, i = _parse_term(tokens, i, text)
        terms.append(term)
        if i < len(tokens) and tokens[i] == "+":
            i += 1
            continue
        return _assemble(terms, text), i


def _parse_term(tokens, i, text) -> Tuple[Tuple[Ordinal, int], int]:
    if i >= len(tokens):
        raise OrdinalSyntaxError(f"Unexpected end of {text!r}")
    tok = tokens[i]
    if tok.isdigit():
        return (ZERO, int(tok)), i + 1
    if tok == "w^(":
        exponent, i = _parse_sum(tokens, i + 1, text)
        if i >= len(tokens) or tokens[i] != ")":
            raise OrdinalSyntaxError(f"Missing ')' in {text!r}")
        i += 1
    elif tok == "w":
        exponent, i = ONE, i + 1
    else:
        raise OrdinalSyntaxError(f"Unexpected token {tok!r} in {text!r}")
    coeff = 1
    if i < len(tokens) and tokens[i] == "*":
        if i + 1 >= len(tokens) or not tokens[i + 1].isdigit():
            raise OrdinalSyntaxError(f"Coefficient expected after '*' in {text!r}")
        coeff = int(tokens[i + 1])
        i += 2
    return (exponent, coeff), i


def _assemble(terms, text) -> Ordinal:
    if len(terms) == 1 and terms[0][0].is_zero and terms[0][1] == 0:
        return ZERO
    try:
        return Ordinal(tuple(terms))
    except ValueError as exc:
        raise OrdinalSyntaxError(f"Not in Cantor normal form: {text!r}") from exc


def predecessor(a: Ordinal) -> Ordinal:
    if not a.is_successor:
        raise ValueError(f"{a} has no predecessor")
    c = a.finite_part
    if c > 1:
        return Ordinal(a.terms[:-1] + ((ZERO, c - 1),))
    return Ordinal(a.terms[:-1])
