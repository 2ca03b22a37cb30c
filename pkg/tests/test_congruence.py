import pytest

from braidwo.braid import (
    ExpSeq,
    all_braids,
    congruence_class,
    delta3,
    group_element,
    group_equal,
    is_sigma_positive,
    lemma_witness,
    sigma_positive_witness,
    word_of,
)
from braidwo.braid.word import inverse_word
from braidwo.errors import CongruenceOverflow
from braidwo.outcomes import EXHAUSTED


def _is_valid_witness(a: ExpSeq, b: ExpSeq, w) -> bool:
    return is_sigma_positive(w) and group_equal(w, inverse_word(word_of(a)) + word_of(b))


def test_congruence_classes() -> None:
    assert congruence_class((1, 2, 1)) == {(1, 2, 1), (2, 1, 2)}
    assert congruence_class((1, 1)) == {(1, 1)}
    assert congruence_class((1, 1, 2, 1, 1, 2)) == congruence_class((1, 2, 1, 1, 2, 1))
    # far commutation on 4 strands
    assert (3, 1) in congruence_class((1, 3))

    with pytest.raises(CongruenceOverflow):
        congruence_class((1, 2, 1, 1, 2, 1), budget=3)


def test_group_elements() -> None:
    assert group_element((1, -1)) == (1, delta3(1))
    assert group_equal((1, -1), ())
    assert group_equal((1, 2, 1), (2, 1, 2))
    assert group_equal((-1, -2, -1), (-2, -1, -2))
    assert not group_equal((1,), (2,))
    assert not group_equal((1, 2), (2, 1))


def test_sigma_positivity() -> None:
    assert is_sigma_positive((2, -1, 2))
    assert is_sigma_positive((1,))
    assert not is_sigma_positive((1, -1))
    assert not is_sigma_positive((-2, 1))
    assert not is_sigma_positive(())


def test_witness_for_generators() -> None:
    w = sigma_positive_witness(ExpSeq.of(1), ExpSeq.of(1, 0))
    assert w == (-1, 2)
    assert sigma_positive_witness(ExpSeq.of(1, 0), ExpSeq.of(1), budget=500) is EXHAUSTED

    with pytest.raises(ValueError):
        sigma_positive_witness(ExpSeq.of(1), ExpSeq.of(1))


def test_lemma_witness_on_increasing_pairs() -> None:
    population = list(all_braids(3))
    for i, a in enumerate(population):
        for b in population[i + 1 :]:
            w = lemma_witness(a, b)
            assert w is not None
            assert _is_valid_witness(a, b, w), (a, b, w)
        assert lemma_witness(a, a) is None
