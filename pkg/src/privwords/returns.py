"""Complete return (closed) factors and C-poor words.

A factor is closed if it is empty, a letter, or a complete first return to
some nonempty word.  If ``x`` is a complete first return to anything, it is a
complete first return to its longest proper border: a longer border would
carry a third copy of the shorter one.  So one candidate per factor suffices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .privileged import is_privileged
from .words import FactorSet, conjugates, distinct_windows, prefix_function


@dataclass(frozen=True)
class ClosedFactorReport:
    word: str
    closed_factors: FactorSet
    count: int
    is_c_poor: bool


def _closed_prefix_flags(x: str) -> list[bool]:
    n = len(x)
    pi = prefix_function(x)
    closed = [True] * (n + 1)
    first_end = [0] * (n + 1)
    for l in range(2, n + 1):
        b = pi[l]
        while b and not first_end[b]:
            first_end[b] = l
            b = pi[b]
        closed[l] = pi[l] > 0 and first_end[pi[l]] == l
    return closed


def is_closed(x: str) -> bool:
    return len(x) <= 1 or _closed_prefix_flags(x)[-1]


def complete_return_factors(w: str) -> ClosedFactorReport:
    found = {""}
    for win in distinct_windows(w, len(w)):
        flags = _closed_prefix_flags(win)
        found.update(win[:k] for k in range(1, len(win) + 1) if flags[k])
    return ClosedFactorReport(
        word=w,
        closed_factors=FactorSet(found),
        count=len(found),
        is_c_poor=len(found) == len(w) + 1,
    )


def is_c_poor(w: str) -> bool:
    return complete_return_factors(w).is_c_poor


def c_poor_via_xy(w: str) -> tuple[bool, str | None]:
    """C-poor iff no factor is a complete first return to ``xy``, ``x != y``.

    Two occurrences of ``xy`` with distinct letters never overlap, so any
    two consecutive occurrences bound such a return.
    """
    last_seen: dict[str, int] = {}
    for i in range(len(w) - 1):
        xy = w[i:i + 2]
        if xy[0] == xy[1]:
            continue
        if xy in last_seen:
            return False, w[last_seen[xy]:i + 2]
        last_seen[xy] = i
    return True, None


def binary_c_poor_via_conjugate(w: str) -> bool:
    """True iff some conjugate of the binary word ``w`` has the form a^i b^j."""
    if len(set(w)) > 2:
        raise ValueError(f"binary word expected, got letters {sorted(set(w))}")
    for c in conjugates(w):
        # a^i b^j means at most one letter change along the word
        if sum(c[k] != c[k + 1] for k in range(len(c) - 1)) <= 1:
            return True
    return False


def all_returns_privileged(w: str) -> bool:
    return all(is_privileged(x) for x in complete_return_factors(w).closed_factors)
