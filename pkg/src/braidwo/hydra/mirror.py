from typing import List

from pydantic import BaseModel, Field

from ..braid.expseq import ExpSeq, e_min
from ..ordinals.cnf import format_ordinal
from ..ordinals.fundamental import fund_seq
from .dynamics import critical_position, ord3, step


def case_tag(b: ExpSeq) -> str:
    r = critical_position(b)
    p = b.breadth
    if r == 1:
        return "r=1"
    elif r < p:
        return "interior"
    elif b.e(p) >= 2:
        return "leading-decrement"
    else:
        return "breadth-drop"


def mirror_offset(b: ExpSeq) -> int:
    """e_(p-1)_min on breadth drops with p >= 3, 0 otherwise."""
    p = b.breadth
    if p >= 3 and case_tag(b) == "breadth-drop":
        return e_min(p - 1)
    return 0


class MirrorRecord(BaseModel):
    t: int
    case: str
    before: str
    after: str
    ord_before: str
    ord_after: str
    standard_prediction: str
    adapted_prediction: str
    matches_standard: bool
    matches_adapted: bool

    model_config = {"frozen": True}


class MirrorReport(BaseModel):
    start: str
    records: List[MirrorRecord] = Field(default_factory=list)

    @property
    def standard_mismatches(self) -> int:
        return sum(not rec.matches_standard for rec in self.records)

    @property
    def unexplained_mismatches(self) -> int:
        return sum(not rec.matches_adapted for rec in self.records)


def mirror_record(b: ExpSeq, t: int) -> MirrorRecord:
    before = ord3(b)
    after_braid = step(b, t)
    after = ord3(after_braid)
    standard = fund_seq(before, t)
    adapted = fund_seq(before, t + mirror_offset(b))
    return MirrorRecord(
        t=t,
        case=case_tag(b),
        before=str(b),
        after=str(after_braid),
        ord_before=format_ordinal(before),
        ord_after=format_ordinal(after),
        standard_prediction=format_ordinal(standard),
        adapted_prediction=format_ordinal(adapted),
        matches_standard=after == standard,
        matches_adapted=after == adapted,
    )


def mirror_check(b: ExpSeq, horizon: int) -> MirrorReport:
    report = MirrorReport(start=str(b))
    t = 0
    while not b.is_trivial and t < horizon:
        t += 1
        rec = mirror_record(b, t)
        report.records.append(rec)
        b = step(b, t)
    return report
