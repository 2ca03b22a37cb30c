from .growth import (
    FUNC_MAP,
    GrowthSpec,
    get_registered_functions,
    parse_growth,
    register,
)
from .simple import (
    LongestResult,
    SimplicityCheck,
    SimpleSeq,
    bad_sequence_count,
    constant_bound,
    exhaustive_longest,
    hydra_simple_check,
    is_simple,
    longest_simple,
    max_below,
)
from .dilation import (
    DilationReport,
    DilationRow,
    dilate,
    dilation_window,
    h_of,
    lhs,
    monotonicity_audit,
    rhs,
    s_level,
)
from .experiment import ExperimentReport, wo_experiment
