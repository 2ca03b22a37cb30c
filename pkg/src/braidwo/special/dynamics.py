"""Special hydra sequences b{1}{2}...{t}, their ordinals and lengths."""

from dataclasses import dataclass
import logging
from typing import Dict, List, Tuple

from pydantic import BaseModel, Field

from ..errors import BudgetExhausted
from ..ordinals.cnf import (
    Ordinal,
    format_ordinal,
    nat,
    omega_mul,
    omega_power,
    ord_cmp,
    ord_sum,
)
from ..ordinals.fundamental import fund_seq
from ..outcomes import ExponentConvention, FundamentalVariant, OrderResult, ThetaConvention
from .skew import special_word
from .tree import (
    TRIVIAL,
    Leaf,
    SkewTree,
    append_sigma1,
    b_k,
    children_at,
    format_tree,
    skew_tree,
    theta_sp,
)

logger = logging.getLogger(__name__)

MIRROR_EXACT = ThetaConvention.MIRROR_EXACT
LITERAL = ThetaConvention.LITERAL

# theta_(3,t) as listed in print; t = 2 disagrees with the skew product
PRINTED_THETA_3 = {
    1: (1,),
    2: (1, 2, 2, 1),
    3: (1, 1, 2, 2, 1),
    4: (1, 2, 2, 2, 1, 1, 2, 2, 1),
}


def theta_listing_discrepancies() -> List[int]:
    """Values of t where the printed theta_(3,t) differs from the computed word."""
    bad = []
    for t, printed in PRINTED_THETA_3.items():
        computed = special_word(theta_sp(3, t))
        if computed != printed:
            logger.warning(
                "theta_(3,%d): printed %s, skew product gives %s; using the computed word",
                t,
                "".join(map(str, printed)),
                "".join(map(str, computed)),
            )
            bad.append(t)
    return bad


def _inserted_theta(n: int, t: int, convention: ThetaConvention) -> SkewTree:
    match convention:
        case ThetaConvention.MIRROR_EXACT:
            return theta_sp(2, t) if n == 3 else theta_sp(n - 1, t + 1)
        case ThetaConvention.LITERAL:
            return theta_sp(n - 1, t)
        case _:
            raise NotImplementedError(convention)


def _step(tree: SkewTree, t: int, convention: ThetaConvention) -> Tuple[SkewTree, bool, str]:
    # (b{t}, whether b = b{t} sigma_1, case name)
    if isinstance(tree, Leaf):
        return Leaf(tree.e - 1), True, "leaf"

    n, p = tree.n, tree.p
    r = next(j for j in range(1, p + 1) if not tree.child(j).is_trivial)
    new_child, removed, _ = _step(tree.child(r), t, convention)
    children = list(tree.children)
    i = p - r

    if r == 1 or not removed:
        children[i] = new_child
        return skew_tree(n, children), r == 1 and removed, "replace"

    theta = _inserted_theta(n, t, convention)
    if not new_child.is_trivial or p > r:
        children[i] = new_child
        children[i + 1] = theta
        return skew_tree(n, children), False, "insert"

    return skew_tree(n, [theta] + [TRIVIAL] * (p - 2)), False, "collapse"


def step_sp(
    tree: SkewTree, t: int, convention: ThetaConvention = MIRROR_EXACT
) -> SkewTree:
    if tree.is_trivial:
        raise ValueError("The trivial braid has no successor in a special sequence")
    if t < 1:
        raise ValueError(f"Step index must be >= 1: {t}")
    return _step(tree, t, convention)[0]


def step_case(tree: SkewTree, t: int, convention: ThetaConvention = MIRROR_EXACT) -> str:
    return _step(tree, t, convention)[2]


@dataclass(frozen=True)
class SpTrace:
    states: Tuple[SkewTree, ...]
    terminated: bool

    @property
    def length(self) -> int:
        return len(self.states) - 1

    def words(self) -> List[str]:
        return ["".join(map(str, special_word(s))) or "1" for s in self.states]

    def export_lines(self) -> List[str]:
        return [
            f"{t}\t{format_tree(s)}\t{w}"
            for t, (s, w) in enumerate(zip(self.states, self.words()))
        ]


def run_sp(
    tree: SkewTree,
    max_steps: int | None = None,
    convention: ThetaConvention = MIRROR_EXACT,
) -> SpTrace:
    if max_steps is None:
        from ..config import get_config

        max_steps = get_config().stepwise_budget

    states = [tree]
    t = 0
    while not tree.is_trivial:
        if t >= max_steps:
            return SpTrace(tuple(states), terminated=False)
        t += 1
        tree = step_sp(tree, t, convention)
        states.append(tree)
    return SpTrace(tuple(states), terminated=True)


def t_sp(
    tree: SkewTree,
    max_steps: int | None = None,
    convention: ThetaConvention = MIRROR_EXACT,
) -> int:
    trace = run_sp(tree, max_steps, convention)
    if not trace.terminated:
        raise BudgetExhausted(
            f"Special sequence from {format_tree(tree)} exceeds {trace.length} steps",
            trace.length,
        )
    return trace.length


def _exponent(n: int, convention: ExponentConvention) -> int:
    match convention:
        case ExponentConvention.N_MINUS_3:
            return n - 3
        case ExponentConvention.N_MINUS_2:
            return n - 2
        case _:
            raise NotImplementedError(convention)


def ord_sp(
    tree: SkewTree, exponent: ExponentConvention = ExponentConvention.N_MINUS_3
) -> Ordinal:
    """sum over j of w^(w^E * (j-1)) * ord_sp(b_j), leading child first."""
    if isinstance(tree, Leaf):
        return nat(tree.e)
    E = nat(_exponent(tree.n, exponent))
    p = tree.p
    terms = [
        omega_mul(omega_power(E, p - idx - 1), ord_sp(child, exponent))
        for idx, child in enumerate(tree.children)
    ]
    return ord_sum(*terms)


def compare_special(a: SkewTree, b: SkewTree) -> OrderResult:
    n = max(a.level, b.level)
    if n == 2:
        return OrderResult.from_keys(a.e, b.e)
    ca, cb = children_at(a, n), children_at(b, n)
    if len(ca) != len(cb):
        return OrderResult.from_keys(len(ca), len(cb))
    for x, y in zip(ca, cb):
        c = compare_special(x, y)
        if c is not OrderResult.EQUAL:
            return c
    return OrderResult.EQUAL


class SpMirrorRecord(BaseModel):
    t: int
    case: str
    before: str
    after: str
    ord_before: str
    ord_after: str
    prediction: str
    matches: bool

    model_config = {"frozen": True}


class SpMirrorReport(BaseModel):
    start: str
    theta: ThetaConvention
    exponent: ExponentConvention
    records: List[SpMirrorRecord] = Field(default_factory=list)

    @property
    def mismatches(self) -> int:
        return sum(not rec.matches for rec in self.records)

    @property
    def first_mismatch(self) -> SpMirrorRecord | None:
        return next((rec for rec in self.records if not rec.matches), None)


def mirror_check_sp(
    tree: SkewTree,
    horizon: int,
    theta: ThetaConvention = MIRROR_EXACT,
    exponent: ExponentConvention = ExponentConvention.N_MINUS_3,
) -> SpMirrorReport:
    """Compare ord_sp(b{t}) with ord_sp(b)[t] along the sequence from tree."""
    report = SpMirrorReport(start=format_tree(tree), theta=theta, exponent=exponent)
    t = 0
    while not tree.is_trivial and t < horizon:
        t += 1
        after, _, case = _step(tree, t, theta)
        before_ord = ord_sp(tree, exponent)
        after_ord = ord_sp(after, exponent)
        predicted = fund_seq(before_ord, t)
        report.records.append(
            SpMirrorRecord(
                t=t,
                case=case,
                before=format_tree(tree),
                after=format_tree(after),
                ord_before=format_ordinal(before_ord),
                ord_after=format_ordinal(after_ord),
                prediction=format_ordinal(predicted),
                matches=after_ord == predicted,
            )
        )
        tree = after

    if report.mismatches and theta is LITERAL:
        first = report.first_mismatch
        logger.warning(
            "Literal theta insertion breaks the ordinal mirror from %s at t=%d: %s vs %s",
            report.start,
            first.t,
            first.ord_after,
            first.prediction,
        )
    return report


def mirror_sweep_sp(tree: SkewTree, horizon: int) -> Dict[str, SpMirrorReport]:
    """mirror_check_sp under every combination of the two conventions."""
    return {
        f"{theta.value}/{exponent.value}": mirror_check_sp(tree, horizon, theta, exponent)
        for theta in ThetaConvention
        for exponent in ExponentConvention
    }


def t_sp_hardy(tree: SkewTree, k: int, budget_bits: int | None = None) -> int:
    """Length of the special sequence from tree * sigma_1^k as H_(ord_sp(tree))(k+1) - 1."""
    from ..ordinals.hardy import hardy

    return hardy(ord_sp(tree), k + 1, FundamentalVariant.STANDARD, budget_bits) - 1


def u_sp(k: int, budget_bits: int | None = None) -> int:
    """T^sp(b_k sigma_1^k) + 1 = H_(w^(w^k))(k+1)."""
    return t_sp_hardy(b_k(k), k, budget_bits) + 1


def u_sp_run(k: int, max_steps: int | None = None) -> int:
    return t_sp(append_sigma1(b_k(k), k), max_steps) + 1


def ord_order_agrees(a: SkewTree, b: SkewTree) -> bool:
    return compare_special(a, b) is ord_cmp(ord_sp(a), ord_sp(b))
