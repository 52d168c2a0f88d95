"""Slow reference implementations used as ground truth by the test suite.

Nothing here touches the fast deciders.  Each function is a direct
transcription of the definition it checks, favouring obviousness over speed.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Callable, Iterator

import numpy as np

from .words import Alphabet, FactorSet

DEFAULT_BUDGET = 5_000_000


def naive_occurrences(pattern: str, text: str) -> list[int]:
    """Quadratic scan; 1-based positions."""
    m = len(pattern)
    return [i + 1 for i in range(len(text) - m + 1) if text[i:i + m] == pattern]


def naive_complete_first_return(x: str, u: str) -> bool:
    return (
        len(u) <= len(x)
        and x[:len(u)] == u
        and x[len(x) - len(u):] == u
        and len(naive_occurrences(u, x)) == 2
    )


def naive_is_privileged_unmemoized(w: str) -> bool:
    if len(w) <= 1:
        return True
    return any(
        naive_complete_first_return(w, w[:k]) and naive_is_privileged_unmemoized(w[:k])
        for k in range(1, len(w))
    )


@lru_cache(maxsize=1 << 20)
def naive_is_privileged(w: str) -> bool:
    """Recursive definition: a complete first return to a shorter privileged word."""
    if len(w) <= 1:
        return True
    for k in range(1, len(w)):
        u = w[:k]
        if naive_complete_first_return(w, u) and naive_is_privileged(u):
            return True
    return False


def naive_closed(w: str) -> bool:
    """Empty word, a letter, or a complete first return to some nonempty word."""
    if len(w) <= 1:
        return True
    return any(naive_complete_first_return(w, w[:k]) for k in range(1, len(w)))


def naive_factors(w: str) -> set[str]:
    return {w[i:j] for i in range(len(w) + 1) for j in range(i, len(w) + 1)}


def naive_factor_filter(w: str, predicate: Callable[[str], bool]) -> FactorSet:
    return FactorSet(u for u in naive_factors(w) if predicate(u))


def naive_is_palindrome(w: str) -> bool:
    return all(w[i] == w[-1 - i] for i in range(len(w) // 2))


def naive_borders(w: str) -> list[int]:
    return [k for k in range(len(w)) if w[:k] == w[len(w) - k:]]


def naive_introduced(w: str, i: int, predicate: Callable[[str], bool]) -> list[str]:
    """Factors ending at 1-based position ``i`` that satisfy ``predicate`` and
    are unioccurrent in ``w[1, i]``."""
    prefix = w[:i]
    return [
        prefix[i - k:]
        for k in range(1, i + 1)
        if predicate(prefix[i - k:]) and len(naive_occurrences(prefix[i - k:], prefix)) == 1
    ]


def is_overlap_free(w: str) -> bool:
    """No factor of the form axaxa (a a letter)."""
    a = np.frombuffer(w.encode("utf-32-le"), dtype=np.uint32)
    n = len(a)
    for p in range(1, n // 2 + 1):
        # an overlap of period p is a run of p+1 positions j with w[j] == w[j+p]
        miss = np.flatnonzero(a[:-p] != a[p:])
        edges = np.concatenate(([-1], miss, [n - p]))
        if np.diff(edges).max() - 1 >= p + 1:
            return False
    return True


class Corpus:
    """Every word over ``alphabet`` of length at most ``max_len``.

    Order is by length, then lexicographic in alphabet order.
    """

    def __init__(self, alphabet: Alphabet | str, max_len: int, budget: int = DEFAULT_BUDGET):
        if isinstance(alphabet, str):
            alphabet = Alphabet.of(alphabet)
        self.alphabet = alphabet
        self.max_len = max_len
        total = self.count
        if total > budget:
            raise ValueError(
                f"corpus of {total} words over {len(alphabet)} letters up to length "
                f"{max_len} exceeds the budget of {budget} words"
            )

    @property
    def count(self) -> int:
        k = len(self.alphabet)
        return sum(k ** n for n in range(self.max_len + 1))

    def __len__(self) -> int:
        return self.count

    def __iter__(self) -> Iterator[str]:
        for n in range(self.max_len + 1):
            for letters in itertools.product(self.alphabet.symbols, repeat=n):
                yield "".join(letters)


def exhaustive_words(alphabet: Alphabet | str, max_len: int, budget: int = DEFAULT_BUDGET) -> Corpus:
    return Corpus(alphabet, max_len, budget)
