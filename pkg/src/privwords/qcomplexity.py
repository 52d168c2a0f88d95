"""Q-properties, Q-complexity and the Sturmian property battery.

A Q-property holds for the empty word and every letter, and each position of
any word introduces at most one new factor with the property.  Palindromes,
privileged words and letter powers are the built-in examples.

Infinite words are studied through finite prefixes.  :func:`profile_source`
sizes the prefix automatically and marks which rows are trustworthy.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from .palindromes import palindromic_complexity, palindromic_factors
from .privileged import ComplexityProfile, is_privileged, privileged_complexity, privileged_factors
from .words import distinct_windows, factors_of_length, is_palindrome

log = logging.getLogger(__name__)

DEFAULT_CUSHION = 64
DEFAULT_CAP = 1 << 22


@dataclass(frozen=True)
class QProperty:
    name: str
    holds: Callable[[str], bool]
    # optional fast path producing the same counts as the generic filter
    counter: Callable[[str, int], ComplexityProfile] | None = None
    kind: str = "generic-Q"

    def __call__(self, w: str) -> bool:
        return self.holds(w)


def is_letter_power(w: str) -> bool:
    return len(set(w)) <= 1


PALINDROME = QProperty("palindrome", is_palindrome, palindromic_complexity, "palindromic")
PRIVILEGED = QProperty("privileged", is_privileged, privileged_complexity, "privileged")
LETTER_POWER = QProperty("letter-power", is_letter_power)

BUILTIN = {q.name: q for q in (PALINDROME, PRIVILEGED, LETTER_POWER)}


def get_property(name: str) -> QProperty:
    try:
        return BUILTIN[name]
    except KeyError:
        raise ValueError(f"unknown property {name!r}; choose from {sorted(BUILTIN)}") from None


def q_complexity(w: str, q: QProperty, n_max: int) -> ComplexityProfile:
    if n_max > len(w):
        raise ValueError(f"n_max={n_max} exceeds word length {len(w)}")
    if q.counter is not None:
        return q.counter(w, n_max)
    found = {""}
    for win in distinct_windows(w, n_max):
        found.update(win[:k] for k in range(1, len(win) + 1) if q.holds(win[:k]))
    counts = [0] * (n_max + 1)
    for u in found:
        counts[len(u)] += 1
    return ComplexityProfile(tuple(counts), q.kind)


def q_factors(w: str, q: QProperty) -> set[str]:
    """All distinct factors of ``w`` with property ``q``."""
    if q is PRIVILEGED:
        return set(privileged_factors(w))
    if q is PALINDROME:
        return set(palindromic_factors(w))
    n = len(w)
    return {""} | {w[i:j] for i in range(n) for j in range(i + 1, n + 1) if q.holds(w[i:j])}


@dataclass(frozen=True)
class AxiomViolation:
    word: str
    position: int | None
    reason: str


def validate_q_axioms(q: QProperty, corpus: Iterable[str]) -> tuple[bool, AxiomViolation | None]:
    """Check the three Q-property axioms position by position on ``corpus``."""
    if not q.holds(""):
        return False, AxiomViolation("", None, "does not hold for the empty word")
    letters_checked = set()
    for w in corpus:
        for a in set(w) - letters_checked:
            if not q.holds(a):
                return False, AxiomViolation(a, None, f"does not hold for letter {a!r}")
            letters_checked.add(a)
        for i in range(1, len(w) + 1):
            prefix = w[:i]
            ending = [prefix[i - k:] for k in range(1, i + 1) if q.holds(prefix[i - k:])]
            if not ending:
                return False, AxiomViolation(w, i, "no Q-factor ends here")
            # u is new at i iff it does not occur in w[1, i-1]
            new = [u for u in ending if prefix.find(u, 0, i - 1) < 0]
            if len(new) > 1:
                return False, AxiomViolation(w, i, f"introduces {len(new)} Q-factors: {new}")
    return True, None


def vanishing_indices(w: str, q: QProperty, n_max: int) -> list[int]:
    return q_complexity(w, q, n_max).zeros()


def factor_complexity(w: str, n_max: int) -> ComplexityProfile:
    if n_max > len(w):
        raise ValueError(f"n_max={n_max} exceeds word length {len(w)}")
    wins = distinct_windows(w, n_max)
    counts = [1] + [len({win[:n] for win in wins if len(win) >= n}) for n in range(1, n_max + 1)]
    return ComplexityProfile(tuple(counts), "factor")


def alternating_check(profile: ComplexityProfile, odd_value: int) -> bool:
    """Counts are 1 at even n and ``odd_value`` at odd n over the valid range."""
    if profile.valid_to < 1:
        raise ValueError("profile must be valid up to at least n=1")
    return all(
        profile.counts[n] == (odd_value if n % 2 else 1) for n in range(profile.valid_to + 1)
    )


def jsp_check(profile: ComplexityProfile) -> bool:
    return alternating_check(profile, 2)


def ppal_check(profile: ComplexityProfile) -> bool:
    return alternating_check(profile, 2)


# -- property battery ---------------------------------------------------------


@dataclass(frozen=True)
class PropertyFlags:
    n: int
    rch: bool
    spe: bool
    bal: bool | None
    rev: bool


def right_special_factors(w: str, m: int) -> list[str]:
    """Factors of length ``m`` followed, somewhere in ``w``, by two distinct letters."""
    followers: dict[str, set[str]] = {}
    for i in range(len(w) - m):
        followers.setdefault(w[i:i + m], set()).add(w[i + m])
    return sorted(u for u, s in followers.items() if len(s) >= 2)


def _require_binary(w: str) -> tuple[str, ...]:
    letters = tuple(sorted(set(w)))
    if len(letters) > 2:
        raise ValueError(f"binary word expected, got letters {list(letters)}")
    return letters


def is_balanced_at(w: str, n: int) -> bool:
    """All length-n factors differ by at most one in their count of a letter."""
    letters = _require_binary(w)
    if len(letters) < 2 or n > len(w) or n == 0:
        return True
    ones = np.frombuffer(w.encode(), dtype=np.uint8) == ord(letters[1])
    s = np.concatenate(([0], np.cumsum(ones)))
    window = s[n:] - s[:-n]
    return int(window.max() - window.min()) <= 1


def property_flags(w: str, n: int, require_bal: bool = False) -> PropertyFlags:
    """The four battery flags at length ``n`` over the factor set of ``w``.

    ``bal`` is ``None`` for non-binary words unless ``require_bal`` is set,
    in which case a non-binary word is an error.
    """
    if not 1 <= n <= len(w):
        raise ValueError(f"n must lie in 1..{len(w)}")
    f_n = set(factors_of_length(w, n))
    pri = {u for u in f_n if is_privileged(u)}
    pal = {u for u in f_n if is_palindrome(u)}
    rev = all(u[::-1] in f_n for u in f_n)
    spe = len(right_special_factors(w, n - 1)) == 1
    if require_bal or len(set(w)) <= 2:
        bal = is_balanced_at(w, n)
    else:
        bal = None
    return PropertyFlags(n=n, rch=pri == pal, spe=spe, bal=bal, rev=rev)


@dataclass(frozen=True)
class UnbalancedPair:
    x: str
    pair: tuple[str, str]


def find_minimal_unbalanced_pair(w: str) -> UnbalancedPair | None:
    """The minimal pair ``(axa, bxb)`` of factors of ``w``, if unbalanced."""
    letters = _require_binary(w)
    if len(letters) < 2:
        return None
    a, b = letters
    for n in range(2, len(w) + 1):
        if is_balanced_at(w, n):
            continue
        f_n = set(factors_of_length(w, n))
        for u in f_n:
            if u[0] == a and u[-1] == a and b + u[1:-1] + b in f_n:
                return UnbalancedPair(u[1:-1], (u, b + u[1:-1] + b))
        raise AssertionError(f"unbalanced at length {n} but no pair (axa, bxb) found")
    return None


# -- periodic tails -----------------------------------------------------------

EVENTUALLY_ONE = "eventually-one"
INFINITELY_MANY_ZEROS = "infinitely-many-zeros"
UNDECIDED = "undecided"


def classify_periodic_tail(u: str, v: str, q: QProperty, horizon: int = 32, confirm: int = 3) -> str:
    """Classify the Q-complexity of ``u v^omega``.

    Either the word has infinitely many vanishing indices, or the counts are
    eventually all 1.  We grow ``u v^m`` one block at a time and track two
    things per block: the vanishing indices falling in the last ``v``-block
    of ``u v^m`` (these may still be filled by later blocks) and the exact
    counts of the infinite word on the previous block, since every factor of
    length ``n <= (m - 1)|v| + 1`` already appears in ``u v^m``.  Once both
    the last-block vanishing pattern and the exact block have repeated for
    ``confirm`` consecutive blocks, the exact block decides.  The stopping
    rule is heuristic: no bound on when stabilisation happens is known.
    """
    if not v:
        raise ValueError("periodic part must be nonempty")
    r = len(v)
    history: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    for m in range(2, horizon + 1):
        w = u + v * m
        prof = q_complexity(w, q, len(w)).counts
        end = len(w)
        last_block = tuple(k - (end - r) for k in range(end - r + 1, end + 1) if prof[k] == 0)
        # factors start within the first |u| + r letters, so lengths up to
        # (m-1)r + 1 are complete in u v^m
        exact_hi = (m - 1) * r + 1
        exact_block = tuple(prof[exact_hi - r + 1:exact_hi + 1])
        history.append((last_block, exact_block))
        if len(history) >= confirm and len(set(history[-confirm:])) == 1:
            if 0 in exact_block:
                return INFINITELY_MANY_ZEROS
            if all(c == 1 for c in exact_block):
                return EVENTUALLY_ONE
    return UNDECIDED


# -- prefixes of infinite words ------------------------------------------------


def _profile(w: str, kind: str, n_max: int, q: QProperty | None) -> tuple[int, ...]:
    if kind == "factor":
        return factor_complexity(w, n_max).counts
    return q_complexity(w, q, n_max).counts


def profile_source(
    source,
    n_max: int,
    prop: QProperty | str | None = "privileged",
    cushion: int = DEFAULT_CUSHION,
    cap: int = DEFAULT_CAP,
) -> ComplexityProfile:
    """Auto-sized profile of an infinite word given by ``source``.

    ``prop=None`` gives factor complexity.  The prefix starts at
    ``cushion * n_max`` and doubles until every row is unchanged over two
    consecutive doublings, or ``cap`` is reached.  A row is marked exact
    when it agrees across the last three sizes and the final prefix covers
    it by the cushion factor.  Finite sources are profiled as they are.
    """
    if cushion < 1:
        raise ValueError("cushion must be at least 1")
    if isinstance(prop, str):
        prop = get_property(prop)
    kind = "factor" if prop is None else prop.kind
    name = getattr(source, "name", "word")

    if isinstance(source, str):
        counts = _profile(source, kind, n_max, prop)
        return ComplexityProfile(counts, kind, name=name)

    size = max(cushion * n_max, 2 * n_max, 16)
    if size > cap:
        size = cap
    rows = [_profile(source.prefix(size), kind, n_max, prop)]
    while True:
        stable = len(rows) >= 3 and rows[-1] == rows[-2] == rows[-3]
        if stable or size >= cap:
            break
        size = min(2 * size, cap)
        rows.append(_profile(source.prefix(size), kind, n_max, prop))

    last = rows[-1]
    exact = []
    for n in range(n_max + 1):
        agree = len(rows) >= 3 and rows[-1][n] == rows[-2][n] == rows[-3][n]
        exact.append(agree and size >= cushion * n)
    if not all(exact):
        log.warning(
            "%s: %d of %d rows not exact at prefix length %d",
            name, exact.count(False), n_max + 1, size,
        )
    valid_to = exact.index(False) - 1 if False in exact else n_max
    return ComplexityProfile(last, kind, valid_to=valid_to, exact=tuple(exact), name=name)
