from .expseq import (
    ExpSeq,
    all_braids,
    block_decompose,
    block_letter,
    compare,
    delta3,
    delta_p,
    e_min,
    normal_sequences,
    parse_expseq,
    shortlex_key,
    word_of,
)
from .garside import (
    SIMPLES,
    GreedyNF,
    bridge_constant,
    complexity,
    complexity_from_groups,
    d_of,
    divides_delta_pow,
    divisor_closure,
    greedy_from_word,
    greedy_nf,
    greedy_to_expseq,
    simples,
    grouped_form,
)
from .normal_form import is_phi_normal_word, normalize
from .word import BraidWord, Word, all_words, flip, flip3, format_word, parse_word

# isort: off
from .congruence import (
    congruence_class,
    group_element,
    group_equal,
    is_sigma_positive,
    lemma_witness,
    sigma_positive_witness,
)

# isort: on
