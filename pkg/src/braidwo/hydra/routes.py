import logging

from pydantic import BaseModel

from ..braid.expseq import ExpSeq
from ..braid.normal_form import normalize
from ..ordinals.hardy import hardy
from ..outcomes import FundamentalVariant
from .dynamics import hydra_length_fast, ord3

logger = logging.getLogger(__name__)

PRINTED_FIGURE = 90_159_953_477_630


class RouteReport(BaseModel):
    word: str
    dynamics: int
    braid_hardy: int
    standard_hardy: int
    printed_figure: int
    routes_agree: bool
    printed_matches: bool

    model_config = {"frozen": True}


def route_report(word=(1, 1, 2, 2, 1, 1)) -> RouteReport:
    """Length of the sequence from a braid b.sigma_1^k by dynamics and by both Hardy variants."""
    b = normalize(word)
    k = b.e(1)
    base = ExpSeq(b.exps[:-1] + (0,)) if b.breadth > 1 else ExpSeq()
    beta = ord3(base)

    dynamics = hydra_length_fast(b)
    braid_value = hardy(beta, k + 1, FundamentalVariant.BRAID) - 1
    standard_value = hardy(beta, k + 1, FundamentalVariant.STANDARD) - 1

    report = RouteReport(
        word="".join(str(x) for x in word),
        dynamics=dynamics,
        braid_hardy=braid_value,
        standard_hardy=standard_value,
        printed_figure=PRINTED_FIGURE,
        routes_agree=dynamics == braid_value,
        printed_matches=dynamics == PRINTED_FIGURE,
    )
    if not report.printed_matches:
        logger.warning(
            "Printed length %d differs from the computed %d-bit value",
            PRINTED_FIGURE,
            dynamics.bit_length(),
        )
    return report
