import pytest

from braidwo.braid import (
    BraidWord,
    ExpSeq,
    all_braids,
    all_words,
    compare,
    delta3,
    delta_p,
    flip3,
    format_word,
    is_phi_normal_word,
    normal_sequences,
    normalize,
    parse_expseq,
    parse_word,
    word_of,
)
from braidwo.braid.word import free_reduce, inverse_word
from braidwo.errors import WordSyntaxError
from braidwo.outcomes import OrderResult


def test_parse_and_format_words() -> None:
    assert parse_word("2211") == (2, 2, 1, 1)
    assert parse_word("1 -2 1", signed=True) == (1, -2, 1)
    assert parse_word("") == ()
    assert format_word(()) == "1"
    assert format_word((1, 12)) == "1 12"

    with pytest.raises(WordSyntaxError):
        parse_word("13", strands=3)
    with pytest.raises(WordSyntaxError):
        parse_word("1 -2")
    with pytest.raises(WordSyntaxError):
        parse_word("abc")
    with pytest.raises(WordSyntaxError):
        BraidWord((1, 3), strands=3)


def test_word_operations() -> None:
    assert flip3((1, 2, -1)) == (2, 1, -2)
    assert inverse_word((1, 2)) == (-2, -1)
    assert free_reduce((1, 2, -2, -1, 2)) == (2,)
    assert len(list(all_words(3))) == 1 + 2 + 4 + 8


def test_expseq_parsing_and_words() -> None:
    b = parse_expseq("(2,2)")
    assert b == ExpSeq.of(2, 2)
    assert word_of(b) == (2, 2, 1, 1)
    assert word_of(ExpSeq.of(1, 1, 0)) == (1, 2)
    assert str(ExpSeq()) == "()"
    assert parse_expseq("()").is_trivial

    with pytest.raises(WordSyntaxError):
        parse_expseq("(a,1)")
    with pytest.raises(ValueError):
        ExpSeq.of(1, -1)


def test_normal_form_examples() -> None:
    assert normalize((2, 1, 2)) == ExpSeq.of(1, 1, 1)
    assert normalize((1, 2, 1)) == delta3(1)
    assert normalize((2, 2, 1, 1)) == ExpSeq.of(2, 2)
    assert normalize((1, 2)) == ExpSeq.of(1, 1, 0)
    assert normalize((1, 2, 1) * 2) == delta3(2) == ExpSeq.of(1, 2, 1, 2)
    assert normalize(()) == ExpSeq()

    with pytest.raises(ValueError):
        normalize((1, 3))


def test_normalize_returns_phi_normal_words() -> None:
    for w in all_words(7):
        b = normalize(w)
        assert b.is_normal
        assert b.length == len(w)
        assert is_phi_normal_word(word_of(b))
        assert normalize(word_of(b)) == b


def test_normal_sequences_count_the_monoid() -> None:
    # B_3^+ has 1, 2, 4, 7, 12 elements of length 0..4
    assert [len(list(normal_sequences(n))) for n in range(5)] == [1, 2, 4, 7, 12]
    assert list(normal_sequences(1)) == [ExpSeq.of(1), ExpSeq.of(1, 0)]
    assert all(b.is_normal for n in range(7) for b in normal_sequences(n))


def test_order_is_shortlex_on_normal_forms() -> None:
    assert compare(ExpSeq.of(5), ExpSeq.of(1, 0)) is OrderResult.LESS
    assert compare(delta3(1), ExpSeq.of(1, 1, 0)) is OrderResult.GREATER
    assert compare(ExpSeq.of(2, 2), ExpSeq.of(2, 2)) is OrderResult.EQUAL
    # non-normal input is normalized first
    assert compare(ExpSeq.of(0, 1), ExpSeq.of(1)) is OrderResult.EQUAL

    population = list(all_braids(5))
    assert population[:3] == [ExpSeq(), ExpSeq.of(1), ExpSeq.of(2)]
    assert all(compare(a, b) is OrderResult.LESS for a, b in zip(population, population[1:]))


def test_delta_p_bounds_each_breadth() -> None:
    for p in range(1, 5):
        d = delta_p(p)
        assert d.breadth == p + 2
        for b in all_braids(6):
            expected = OrderResult.LESS if b.breadth <= p + 1 else None
            if expected is not None:
                assert compare(b, d) is expected
            else:
                assert compare(d, b) is not OrderResult.GREATER
