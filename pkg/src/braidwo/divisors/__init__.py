from .counting import (
    card_S,
    card_S_bound,
    count_sigma,
    growth_fit,
    leading_coefficient,
    total_count,
)
from .enumeration import (
    EnumTable,
    delta_prefix_set,
    divisor_set,
    divisor_words,
    enumerate_divisors,
    sigma_block_length,
    sigma_block_words,
    sigma_tilde_words,
    theta,
    theta_block,
    theta_word,
    unrank_divisor,
)
from .s_sets import enumerate_S, s_entry

# isort: off
from .cache import load_table, save_table

# isort: on
