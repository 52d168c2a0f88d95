"""Privileged words: deciding, enumerating and counting them.

A word is privileged if it is empty, a letter, or a complete first return to
a shorter privileged word.  The fast decider rests on two facts: the longest
proper privileged prefix of a privileged word is also its longest proper
privileged border, and every border of a privileged word is privileged.  So
for a prefix ``x[:l]`` it is enough to find the longest border in the
failure-function chain that is itself a privileged prefix, and check that this
border does not reoccur before position ``l``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import FactorSet, distinct_windows, prefix_function


KINDS = ("factor", "palindromic", "privileged", "generic-Q")


@dataclass(frozen=True)
class ComplexityProfile:
    """Per-length counts, ``counts[n]`` for ``0 <= n <= valid_to``.

    ``exact`` flags rows known to equal the value for the underlying
    (possibly infinite) word; finite-word profiles are exact throughout.
    """

    counts: tuple[int, ...]
    kind: str = "generic-Q"
    valid_to: int | None = None
    exact: tuple[bool, ...] | None = None
    name: str = ""

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown profile kind {self.kind!r}")
        if self.valid_to is None:
            object.__setattr__(self, "valid_to", len(self.counts) - 1)
        if self.exact is None:
            object.__setattr__(self, "exact", tuple([True] * len(self.counts)))
        if len(self.exact) != len(self.counts):
            raise ValueError("exact flags and counts differ in length")

    def __getitem__(self, n: int) -> int:
        return self.counts[n]

    def __len__(self) -> int:
        return len(self.counts)

    @property
    def n_max(self) -> int:
        return len(self.counts) - 1

    def total(self) -> int:
        return sum(self.counts)

    def zeros(self) -> list[int]:
        return [n for n, c in enumerate(self.counts) if c == 0]


@dataclass(frozen=True)
class PrivilegedPrefixTable:
    """Privileged flags for every prefix of ``word``.

    ``longest_priv_border[l]`` is the length of the longest proper privileged
    border of ``word[:l]`` (0 when only the empty word qualifies).
    """

    word: str
    is_priv: tuple[bool, ...]
    longest_priv_border: tuple[int, ...]

    def privileged_prefixes(self) -> list[str]:
        return [self.word[:k] for k, flag in enumerate(self.is_priv) if flag]


def _scan(x: str) -> tuple[list[bool], list[int]]:
    n = len(x)
    pi = prefix_function(x)
    is_priv = [True] * (n + 1)
    lpb = [0] * (n + 1)
    # first_end[b]: smallest l > b such that x[:b] is a suffix of x[:l]
    first_end = [0] * (n + 1)
    for l in range(2, n + 1):
        b = pi[l]
        while b and not first_end[b]:
            first_end[b] = l
            b = pi[b]
        b = pi[l]
        if b:
            lpb[l] = b if is_priv[b] else lpb[b]
        is_priv[l] = lpb[l] > 0 and first_end[lpb[l]] == l
    return is_priv, lpb


def privileged_prefix_table(w: str) -> PrivilegedPrefixTable:
    is_priv, lpb = _scan(w)
    return PrivilegedPrefixTable(w, tuple(is_priv), tuple(lpb))


def is_privileged(w: str) -> bool:
    if len(w) <= 1:
        return True
    is_priv, _ = _scan(w)
    return is_priv[-1]


def _privileged_upto(w: str, n_max: int) -> set[str]:
    found = {""}
    for win in distinct_windows(w, n_max):
        is_priv, _ = _scan(win)
        found.update(win[:k] for k in range(1, len(win) + 1) if is_priv[k])
    return found


def privileged_factors(w: str) -> FactorSet:
    """All distinct privileged factors of ``w``, the empty word included."""
    return FactorSet(_privileged_upto(w, len(w)))


def introduced_privileged_factor(w: str, i: int) -> str:
    """The privileged factor introduced at 1-based position ``i``.

    Privileged suffixes of ``w[1, i]`` form a chain: each one is the complete
    first return to the previous one, starting at the latest earlier
    occurrence of it.  The chain ends at the first member that is
    unioccurrent in ``w[1, i]``, which is the longest privileged suffix and
    the introduced factor.
    """
    if not 1 <= i <= len(w):
        raise ValueError(f"position {i} out of range 1..{len(w)}")
    start = i - 1
    while True:
        v = w[start:i]
        # latest occurrence of v ending strictly before position i
        prev = w.rfind(v, 0, i - 1)
        if prev < 0:
            return v
        start = prev


def privileged_complexity(w: str, n_max: int) -> ComplexityProfile:
    """Counts of distinct privileged factors of each length 0..n_max."""
    if n_max > len(w):
        raise ValueError(f"n_max={n_max} exceeds word length {len(w)}")
    counts = [0] * (n_max + 1)
    for u in _privileged_upto(w, n_max):
        counts[len(u)] += 1
    return ComplexityProfile(tuple(counts), "privileged")


def privileged_complexity_by_positions(w: str, n_max: int) -> ComplexityProfile:
    """Same profile, derived from the factor introduced at each position."""
    counts = [0] * (n_max + 1)
    counts[0] = 1
    for i in range(1, len(w) + 1):
        k = len(introduced_privileged_factor(w, i))
        if k <= n_max:
            counts[k] += 1
    return ComplexityProfile(tuple(counts), "privileged")
