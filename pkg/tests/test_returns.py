import pytest
from hypothesis import given

from privwords.generators import Directive, standard_sturmian_prefix
from privwords.oracle import exhaustive_words, naive_closed, naive_factor_filter
from privwords.palindromes import is_rich, pri_equals_pal
from privwords.privileged import privileged_factors
from privwords.qcomplexity import right_special_factors
from privwords.returns import (
    all_returns_privileged,
    binary_c_poor_via_conjugate,
    c_poor_via_xy,
    complete_return_factors,
    is_c_poor,
    is_closed,
)
from privwords.words import occurrences, prefix_function

from .conftest import words


def test_closed_factor_examples():
    assert complete_return_factors("").closed_factors == {""}
    rep = complete_return_factors("000")
    assert rep.closed_factors == {"", "0", "00", "000"} and rep.count == 4


@pytest.mark.parametrize("k", range(1, 8))
def test_nonempty_closed_count_of_power_example(k):
    # 1^k 0 1^k 0: the last position introduces k+1 closed factors, the
    # others one each; with the empty word the total is 3k+3
    w = "1" * k + "0" + "1" * k + "0"
    assert complete_return_factors(w).count - 1 == 3 * k + 2


@given(words("012", 20))
def test_closed_factors_match_filter(w):
    rep = complete_return_factors(w)
    assert rep.closed_factors == naive_factor_filter(w, naive_closed)
    assert rep.count >= len(w) + 1
    assert rep.is_c_poor == (rep.count == len(w) + 1)


@given(words("01", 20))
def test_longest_border_is_the_only_candidate(x):
    if len(x) >= 2:
        b = prefix_function(x)[-1]
        single = b > 0 and len(occurrences(x[:b], x)) == 2
        assert single == naive_closed(x) == is_closed(x)


@pytest.mark.parametrize("w, expected", [("0120", True), ("110110", False), ("1", True)])
def test_is_c_poor(w, expected):
    assert is_c_poor(w) is expected


def test_c_poor_via_xy_examples():
    assert c_poor_via_xy("0101") == (False, "0101")
    assert c_poor_via_xy("0011") == (True, None)
    assert c_poor_via_xy("2") == (True, None)


def test_conjugate_test_examples():
    assert binary_c_poor_via_conjugate("1100")
    assert not binary_c_poor_via_conjugate("0101")
    assert binary_c_poor_via_conjugate("0110")
    with pytest.raises(ValueError):
        binary_c_poor_via_conjugate("012")


def test_all_returns_privileged_examples():
    assert all_returns_privileged("0120")
    assert not all_returns_privileged("0101")
    assert all_returns_privileged("")


def test_c_poor_equivalences_small():
    for w in exhaustive_words("01", 10):
        poor = is_c_poor(w)
        assert poor == c_poor_via_xy(w)[0] == binary_c_poor_via_conjugate(w) == all_returns_privileged(w)
        if poor:
            assert pri_equals_pal(w) and is_rich(w)
    for w in exhaustive_words("012", 6):
        assert is_c_poor(w) == c_poor_via_xy(w)[0] == all_returns_privileged(w)
    assert is_c_poor("0120") and not is_rich("0120")


@given(words("0123", 40))
def test_privileged_factors_are_closed(w):
    assert set(privileged_factors(w)) <= set(complete_return_factors(w).closed_factors)


@pytest.mark.parametrize("directive", [(1,), (2, 1), (1, 2), (3, 1)])
def test_at_most_two_returns_to_right_special_factors(directive):
    w = standard_sturmian_prefix(Directive.periodic(directive), 4000)
    for m in range(12):
        for u in right_special_factors(w, m):
            occ = occurrences(u, w) if u else []
            returns = {w[a - 1:b - 1 + len(u)] for a, b in zip(occ, occ[1:])}
            assert len(returns) <= 2, (u, returns)
