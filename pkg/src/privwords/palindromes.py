"""Palindromic factors, palindromic complexity and richness.

A word ``w`` is rich when it has ``|w| + 1`` distinct palindromic factors
(the empty word counts).  Three independent tests are provided: the count
itself, the complete-first-return criterion, and equality of the privileged
and palindromic factor sets.
"""

from __future__ import annotations

from dataclasses import dataclass

from .privileged import ComplexityProfile, privileged_factors
from .words import FactorSet, distinct_windows, occurrences, prefix_function


def palindromic_factors(w: str, n_max: int | None = None) -> FactorSet:
    """Distinct palindromic factors of ``w`` (length at most ``n_max``)."""
    n = len(w)
    if n_max is None:
        n_max = n
    found = {""}
    # 2n - 1 centres: odd ones at letters, even ones between letters
    for c in range(2 * n - 1):
        lo, hi = c // 2, (c + 1) // 2
        while lo >= 0 and hi < n and w[lo] == w[hi] and hi - lo < n_max:
            found.add(w[lo:hi + 1])
            lo -= 1
            hi += 1
    return FactorSet(found)


def _palindromic_prefix_lengths(x: str) -> list[int]:
    # palindromic prefixes of x are the borders of x + sep + reversed(x)
    pi = prefix_function(x + "\x00" + x[::-1])
    out = []
    k = pi[-1]
    while k:
        out.append(k)
        k = pi[k]
    return out


def palindromic_complexity(w: str, n_max: int) -> ComplexityProfile:
    if n_max > len(w):
        raise ValueError(f"n_max={n_max} exceeds word length {len(w)}")
    found = {""}
    for win in distinct_windows(w, n_max):
        found.update(win[:k] for k in _palindromic_prefix_lengths(win))
    counts = [0] * (n_max + 1)
    for u in found:
        counts[len(u)] += 1
    return ComplexityProfile(tuple(counts), "palindromic")


def is_rich(w: str) -> bool:
    return len(palindromic_factors(w)) == len(w) + 1


def rich_via_returns(w: str) -> tuple[bool, str | None]:
    """Check that every complete first return to a palindrome is a palindrome.

    Returns ``(True, None)`` or ``(False, witness)`` where the witness is a
    non-palindromic factor that is a complete first return to a palindrome.
    """
    for p in palindromic_factors(w):
        if not p:
            continue
        occ = occurrences(p, w)
        for a, b in zip(occ, occ[1:]):
            x = w[a - 1:b - 1 + len(p)]
            if x != x[::-1]:
                return False, x
    return True, None


def pri_equals_pal(w: str) -> bool:
    return privileged_factors(w) == palindromic_factors(w)


@dataclass(frozen=True)
class RichnessReport:
    word: str
    palindrome_count: int
    is_rich: bool
    pri_equals_pal: bool
    witness: str | None = None


def richness_report(w: str) -> RichnessReport:
    pal = palindromic_factors(w)
    pri = privileged_factors(w)
    rich, witness = rich_via_returns(w)
    if witness is None and pri != pal:
        # set difference in either direction, shortest first
        witness = next(iter((pri - pal) | (pal - pri)))
    return RichnessReport(
        word=w,
        palindrome_count=len(pal),
        is_rich=len(pal) == len(w) + 1,
        pri_equals_pal=pri == pal,
        witness=witness,
    )
