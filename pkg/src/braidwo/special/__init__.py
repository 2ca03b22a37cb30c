from .tree import (
    TRIVIAL,
    Leaf,
    Node,
    SkewTree,
    append_sigma1,
    b_k,
    children_at,
    format_tree,
    parse_tree_text,
    skew_tree,
    special_population,
    theta_sp,
)
from .skew import (
    decorated_flip,
    flip_prefix,
    flip_suffix,
    is_repetitive,
    parse_special,
    reconstruct,
    skew_product,
    special_word,
    splitting,
    splitting_is_valid,
    tau,
)
from .dynamics import (
    LITERAL,
    MIRROR_EXACT,
    PRINTED_THETA_3,
    SpMirrorRecord,
    SpMirrorReport,
    SpTrace,
    compare_special,
    mirror_check_sp,
    mirror_sweep_sp,
    ord_order_agrees,
    ord_sp,
    run_sp,
    step_case,
    step_sp,
    t_sp,
    t_sp_hardy,
    theta_listing_discrepancies,
    u_sp,
    u_sp_run,
)
