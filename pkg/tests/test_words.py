import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from privwords.oracle import naive_borders, naive_occurrences
from privwords.words import (
    Alphabet,
    FactorSet,
    border_lengths,
    conjugates,
    distinct_windows,
    factors_of_length,
    is_complete_first_return,
    is_palindrome,
    occurrences,
    parse_word,
    prefix_function,
    render,
    reverse,
)

from .conftest import words


@pytest.mark.parametrize("pattern, text, expected", [
    ("00", "000", [1, 2]),
    ("0", "0110", [1, 4]),
    ("110", "110110", [1, 4]),
    ("2", "0120", [3]),
    ("11", "0101", []),
])
def test_occurrences(pattern, text, expected):
    assert occurrences(pattern, text) == expected


def test_occurrences_rejects_empty_pattern():
    with pytest.raises(ValueError):
        occurrences("", "01")


@given(words("01", 14), words("01", 4, min_size=1))
def test_occurrences_match_scan(text, pattern):
    assert occurrences(pattern, text) == naive_occurrences(pattern, text)


@given(words("012", 14), words("012", 3, min_size=1))
def test_occurrences_match_scan_ternary(text, pattern):
    assert occurrences(pattern, text) == naive_occurrences(pattern, text)


@pytest.mark.parametrize("w, expected", [("000", [0, 1, 2]), ("0110", [0, 1]), ("01", [0]), ("", [0])])
def test_border_lengths(w, expected):
    assert border_lengths(w) == expected


@given(words("01", 30))
def test_borders_are_the_failure_chain(w):
    assume(w)
    assert border_lengths(w) == naive_borders(w)
    pi = prefix_function(w)
    chain, k = {0}, pi[len(w)]
    while k:
        chain.add(k)
        k = pi[k]
    assert set(border_lengths(w)) == chain


@pytest.mark.parametrize("x, u, expected", [
    ("000", "00", True),
    ("0110", "0", True),
    ("010", "1", False),
    ("0000", "00", False),
    ("00101100", "00", True),
    ("00101100", "0", False),
])
def test_complete_first_return(x, u, expected):
    assert is_complete_first_return(x, u) is expected


def test_complete_first_return_rejects_empty():
    with pytest.raises(ValueError):
        is_complete_first_return("01", "")


@given(words("01", 12), words("01", 3, min_size=1))
def test_complete_first_return_implies_border(x, u):
    if len(u) <= len(x) and is_complete_first_return(x, u):
        assert len(u) in border_lengths(x) or len(u) == len(x)


@pytest.mark.parametrize("w, expected", [("010", True), ("00101100", False), ("", True), ("0120", False)])
def test_is_palindrome(w, expected):
    assert is_palindrome(w) is expected
    assert is_palindrome(w) == (reverse(w) == w)


@pytest.mark.parametrize("w, expected", [
    ("01", {"01", "10"}),
    ("00", {"00"}),
    ("0011", {"0011", "0110", "1100", "1001"}),
    ("", {""}),
])
def test_conjugates(w, expected):
    assert conjugates(w) == expected


def test_factors_of_length():
    assert factors_of_length("0110", 2) == {"01", "11", "10"}
    assert factors_of_length("0110", 0) == {""}
    assert factors_of_length("000", 3) == {"000"}
    assert factors_of_length("000", 4) == set()


@given(words("012", 20), st.integers(0, 20))
def test_factor_count_bound(w, n):
    if n <= len(w):
        assert len(factors_of_length(w, n)) <= min(len(w) - n + 1, 3 ** n)


@given(words("01", 30, min_size=1), st.integers(1, 10))
def test_windows_cover_all_short_factors(w, length):
    wins = distinct_windows(w, length)
    for n in range(length + 1):
        if n <= len(w):
            assert {x[:n] for x in wins if len(x) >= n} == set(factors_of_length(w, n))


def test_factor_set_order_and_equality():
    fs = FactorSet(["10", "0", "", "01", "1"], Alphabet(("1", "0")))
    assert list(fs) == ["", "1", "0", "10", "01"]
    assert fs == FactorSet(["", "0", "1", "01", "10"])
    assert fs == {"", "0", "1", "01", "10"}
    assert fs.of_length(2) == {"01", "10"}
    assert fs.count_by_length(2) == [1, 2, 2]


def test_alphabet():
    with pytest.raises(ValueError):
        Alphabet(("0", "0"))
    with pytest.raises(ValueError):
        Alphabet(())
    assert Alphabet.infer("0120") == Alphabet(("0", "1", "2"))
    assert Alphabet(("0", "1")).exchange("0010") == "1101"
    with pytest.raises(ValueError):
        Alphabet(("0", "1")).validate("012")


def test_eps_rendering():
    assert render("") == "EPS"
    assert render("", eps="") == ""
    assert parse_word("EPS") == ""
    assert parse_word(" 0120\n") == "0120"
