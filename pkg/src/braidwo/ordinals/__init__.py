from .ackermann import (
    ack_inv,
    ack_r_inv,
    ackermann,
    ackermann_diag,
    ackermann_recursive,
    const,
    f_omega,
    f_r,
    square,
)
from .cnf import (
    OMEGA,
    ONE,
    ZERO,
    Ordinal,
    format_ordinal,
    nat,
    omega_mul,
    omega_power,
    ord_add,
    ord_cmp,
    ord_sum,
    parse_ordinal,
    predecessor,
)
from .fundamental import braid_offset, fund_seq, fund_seq_braid, fundamental
from .hardy import hardy
from .intmath import ilog2p1, iroot, isqrt, sci_digest
