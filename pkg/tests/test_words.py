import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from freeband import (
    WordFormatError,
    ast,
    circ,
    content,
    f_eval,
    format_word,
    parse_word,
    subword,
)

W = parse_word


# the eight reduction-path values of "abac"
F_ABAC = {
    "000": "cba",
    "001": "cba",
    "010": "cba",
    "011": "cba",
    "100": "bca",
    "101": "bca",
    "110": "bac",
    "111": "bac",
}


@pytest.mark.parametrize("bits,expected", sorted(F_ABAC.items()))
def test_f_abac_table(bits, expected):
    assert f_eval(W("abac"), bits) == W(expected)


def test_f_eval_domain():
    assert f_eval(W(""), "") == ()
    assert f_eval(W("abac"), "01") is None
    assert f_eval(W("abac"), "0100") is None
    assert f_eval(W(""), "0") is None


def test_circ_examples():
    assert circ(W("abac"), "0") == W("aba")
    assert circ(W("abac"), "1") == W("bac")
    assert circ(W("abac"), "") == W("abac")
    assert circ(W(""), "0") is None
    assert circ(W(""), "") == ()
    # undefined once the bitstring is longer than the content
    assert circ(W("abac"), "0000") is None


def test_circ_ast_long_word():
    w = W("ababdbddcccb")
    assert circ(w, "0") == W("ababdbdd")
    assert ast(w, "0") == W("c")[0]
    assert ast(w, "1") == W("a")[0]
    assert circ(w, "1") == W("bdbddcccb")


def test_ast_examples():
    assert ast(W("abac"), "0") == W("c")[0]
    assert ast(W("abac"), "") is None
    assert ast(W(""), "1") is None
    assert ast(W("a"), "11") is None


def test_content():
    assert content(W("abac")) == frozenset(W("abc"))
    assert content(W("")) == frozenset()
    assert content(W("ababdbddcccb")) == frozenset(W("abcd"))


def test_subword_is_one_based_and_empty_when_reversed():
    w = W("abcde")
    assert subword(w, 1, 3) == W("abc")
    assert subword(w, 3, 3) == W("c")
    assert subword(w, 4, 2) == ()
    assert subword(w, 0, 0) == ()


def test_parse_and_format_roundtrip():
    assert parse_word("azAZ09") == (0, 25, 26, 51, 52, 61)
    assert format_word((0, 25, 26, 51, 52, 61)) == "azAZ09"
    assert parse_word("") == ()
    assert parse_word("3,1,4,1", ints=True) == (3, 1, 4, 1)
    assert format_word((3, 1, 4, 1), ints=True) == "3,1,4,1"
    assert parse_word("", ints=True) == ()
    # letters past the character range fall back to integer tokens
    assert format_word((100, 2)) == "100,2"


def test_parse_errors():
    with pytest.raises(WordFormatError):
        parse_word("ab!c")
    with pytest.raises(WordFormatError):
        parse_word("1,x", ints=True)
    with pytest.raises(WordFormatError):
        parse_word("-3", ints=True)
    with pytest.raises(WordFormatError):
        parse_word("99999999999", ints=True)


words_st = st.lists(st.integers(min_value=0, max_value=5), max_size=24).map(tuple)


@given(words_st, st.data())
@settings(max_examples=200, deadline=None)
def test_full_reduction_path_is_permutation_of_content(w, data):
    k = len(content(w))
    bits = tuple(data.draw(st.integers(0, 1)) for _ in range(k))
    out = f_eval(w, bits)
    assert out is not None
    assert sorted(out) == sorted(content(w))


@given(words_st, st.data())
@settings(max_examples=200, deadline=None)
def test_reduction_nesting_and_content_drop(w, data):
    k = len(content(w))
    depth = data.draw(st.integers(0, k))
    bits = tuple(data.draw(st.integers(0, 1)) for _ in range(depth))
    reduced = circ(w, bits)
    assert reduced is not None
    assert len(content(reduced)) == len(content(w)) - len(bits)
    if depth < k:
        longer0 = circ(w, bits + (0,))
        longer1 = circ(w, bits + (1,))
        # one more 0 shortens the prefix, one more 1 shortens the suffix
        assert longer0 == reduced[: len(longer0)]
        assert longer1 == reduced[len(reduced) - len(longer1) :]
        boundary0 = ast(w, bits + (0,))
        boundary1 = ast(w, bits + (1,))
        assert boundary0 not in content(longer0)
        assert boundary1 not in content(longer1)
