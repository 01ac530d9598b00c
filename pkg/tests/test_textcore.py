import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lexis.errors import LengthError, ParseError
from lexis.textcore import (
    Lexicon,
    damerau,
    hamming,
    levenshtein,
    levenshtein_matrix,
    min_prefix_distance,
    oracle_complete,
    oracle_search,
    parse_entry,
    prefix_sum,
)

words_st = st.text(alphabet="abcd", max_size=8)


def test_levenshtein_worked_example():
    # one substitution, one deletion, one insertion
    assert levenshtein("ABCjEF", "xBCEFy") == 3


def test_levenshtein_identity_and_base_rows():
    for x in ["", "a", "abc", "zzz"]:
        assert levenshtein(x, x) == 0
    assert levenshtein("", "abc") == 3
    assert levenshtein("abc", "") == 3


def test_levenshtein_matrix_agrees_with_rolling_rows():
    mat = levenshtein_matrix("ABCjEF", "xBCEFy")
    assert mat[-1][-1] == 3
    assert [row[0] for row in mat] == list(range(7))
    assert mat[0] == list(range(7))


@given(words_st, words_st)
def test_levenshtein_symmetric_and_bounded(a, b):
    d = levenshtein(a, b)
    assert d == levenshtein(b, a)
    assert abs(len(a) - len(b)) <= d <= max(len(a), len(b), 0)
    assert (d == 0) == (a == b)


@given(words_st, words_st, words_st)
@settings(max_examples=200)
def test_levenshtein_triangle_inequality(a, b, c):
    assert levenshtein(a, c) <= levenshtein(a, b) + levenshtein(b, c)


def test_hamming():
    assert hamming("cat", "cut") == 1
    assert hamming("abc", "abc") == 0
    with pytest.raises(LengthError):
        hamming("ab", "abc")


def test_damerau():
    assert damerau("ABCxyEF", "ABCyxEF") == 1
    assert damerau("ab", "ba") == 1
    assert damerau("ab", "ab") == 0


@given(words_st, words_st)
def test_damerau_never_exceeds_levenshtein(a, b):
    assert damerau(a, b) <= levenshtein(a, b)


def test_min_prefix_distance_examples():
    assert min_prefix_distance("abc", "abcdef") == 0
    # frozen from the full DP table: lev("abx", "ab") = 1 is the row minimum
    assert min_prefix_distance("abx", "abcdef") == 1
    # row minimum is min(lev("zzz",""), lev("zzz","a")) = min(3, 3)
    assert min_prefix_distance("zzz", "a") == 3
    assert min_prefix_distance("", "anything") == 0


@given(words_st, words_st)
def test_min_prefix_distance_properties(q, w):
    mp = min_prefix_distance(q, w)
    assert mp <= levenshtein(q, w)
    # independent oracle: minimize plain levenshtein over all prefixes
    assert mp == min(levenshtein(q, w[:j]) for j in range(len(w) + 1))


def test_oracle_search_examples():
    lex = Lexicon.from_words(["cat", "cut", "car", "scat"])
    assert oracle_search(lex, "cat", 1) == {"cat", "cut", "car", "scat"}
    assert oracle_search(Lexicon.from_words([]), "x", 1) == set()
    assert oracle_search(Lexicon.from_words(["cat", "cut"]), "ct", 1) == {"cat", "cut"}


def test_oracle_complete_examples():
    lex = Lexicon.from_words(["abcd", "abce", "xyz"])
    assert oracle_complete(lex, "abc", 0) == {"abcd", "abce"}
    assert oracle_complete(lex, "abx", 1) == {"abcd", "abce"}
    assert oracle_complete(Lexicon.from_words([]), "a", 1) == set()


def test_prefix_sum_worked_example():
    assert prefix_sum([1, 1, 1, 2, 5, 5, 5]) == [1, 2, 3, 5, 10, 15, 20]
    assert prefix_sum([]) == []


def test_lexicon_invariants():
    lex = Lexicon.from_words(["cat", "dog", "cat", "a"])
    assert lex.words == ["cat", "dog"]  # duplicate and short word skipped
    assert lex.d == 2
    assert lex.n == 6
    assert lex.sigma == len(set("catdog"))


def test_parse_entry():
    assert parse_entry("word#12") == ("word", 12)
    assert parse_entry("word") == ("word", 0)
    assert parse_entry("we#ird#7") == ("we#ird", 7)
    assert parse_entry("word#x7") == ("word#x7", 0)
    with pytest.raises(ParseError):
        parse_entry("word#")
