"""Finite words and the basic operations on them.

Words are plain Python strings, one character per letter.  Everything in
this package takes and returns ``str``; :class:`Alphabet` only fixes an
ordering (for canonical output) and is consulted where the letter set
matters, e.g. for the binary exchange operation.

Positions exposed to callers are 1-based, as in ``w[i, j]`` notation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

Word = str

EPS = "EPS"


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[str, ...]

    def __post_init__(self):
        if not self.symbols:
            raise ValueError("alphabet must be non-empty")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError(f"duplicate symbols in alphabet {self.symbols!r}")
        if any(len(s) != 1 for s in self.symbols):
            raise ValueError("alphabet symbols must be single characters")

    @classmethod
    def of(cls, symbols: Iterable[str]) -> Alphabet:
        return cls(tuple(symbols))

    @classmethod
    def infer(cls, *words: str) -> Alphabet:
        """Smallest alphabet containing every letter of ``words``, sorted."""
        letters = sorted(set().union(*words))
        return cls(tuple(letters or "0"))

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __contains__(self, letter: object) -> bool:
        return letter in self.symbols

    def index(self, letter: str) -> int:
        return self.symbols.index(letter)

    def sort_key(self, word: str) -> tuple:
        order = {s: i for i, s in enumerate(self.symbols)}
        return (len(word), [order[c] for c in word])

    def validate(self, word: str) -> str:
        bad = set(word) - set(self.symbols)
        if bad:
            raise ValueError(f"letters {sorted(bad)} not in alphabet {self.symbols}")
        return word

    def exchange(self, word: str) -> str:
        """Swap the two letters of a binary alphabet (0 <-> 1)."""
        if len(self.symbols) != 2:
            raise ValueError("exchange is defined for binary alphabets only")
        a, b = self.symbols
        return word.translate(str.maketrans(a + b, b + a))


BINARY = Alphabet(("0", "1"))
TERNARY = Alphabet(("0", "1", "2"))


class FactorSet:
    """Deduplicated, immutable collection of factors.

    Iteration is by length, then by alphabet order.  Compares equal to any
    other FactorSet or plain set holding the same words.
    """

    __slots__ = ("_words", "_alphabet")

    def __init__(self, words: Iterable[str] = (), alphabet: Alphabet | None = None):
        self._words = frozenset(words)
        self._alphabet = alphabet

    def _key(self, word: str):
        if self._alphabet is not None:
            return self._alphabet.sort_key(word)
        return (len(word), word)

    def __iter__(self) -> Iterator[str]:
        return iter(sorted(self._words, key=self._key))

    def __len__(self) -> int:
        return len(self._words)

    def __contains__(self, word: object) -> bool:
        return word in self._words

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FactorSet):
            return self._words == other._words
        if isinstance(other, (set, frozenset)):
            return self._words == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._words)

    def __repr__(self) -> str:
        return "FactorSet({%s})" % ", ".join(render(w) for w in self)

    def __or__(self, other: FactorSet) -> FactorSet:
        return FactorSet(self._words | set(other), self._alphabet)

    def __sub__(self, other: FactorSet) -> FactorSet:
        return FactorSet(self._words - set(other), self._alphabet)

    def of_length(self, n: int) -> FactorSet:
        return FactorSet((w for w in self._words if len(w) == n), self._alphabet)

    def count_by_length(self, n_max: int) -> list[int]:
        counts = [0] * (n_max + 1)
        for w in self._words:
            if len(w) <= n_max:
                counts[len(w)] += 1
        return counts

    def as_frozenset(self) -> frozenset[str]:
        return self._words


def render(word: str, eps: str = EPS) -> str:
    return word if word else eps


def parse_word(text: str, eps: str = EPS) -> str:
    text = text.strip()
    return "" if text == eps else text


def prefix_function(w: str) -> list[int]:
    """``pi[l]`` is the length of the longest proper border of ``w[:l]``.

    The list has ``len(w) + 1`` entries; ``pi[0]`` is 0 by convention.
    """
    n = len(w)
    pi = [0] * (n + 1)
    k = 0
    for i in range(1, n):
        c = w[i]
        while k and w[k] != c:
            k = pi[k]
        if w[k] == c:
            k += 1
        pi[i + 1] = k
    return pi


def border_lengths(w: str) -> list[int]:
    """All proper border lengths of ``w`` in ascending order, 0 included."""
    if not w:
        return [0]
    pi = prefix_function(w)
    out = []
    k = pi[len(w)]
    while k:
        out.append(k)
        k = pi[k]
    out.append(0)
    return out[::-1]


def occurrences(pattern: str, text: str) -> list[int]:
    """1-based start positions of ``pattern`` in ``text``, overlaps included."""
    if not pattern:
        raise ValueError("occurrences of the empty word are not defined")
    m = len(pattern)
    pi = prefix_function(pattern)
    out = []
    k = 0
    for i, c in enumerate(text):
        while k and (k == m or pattern[k] != c):
            k = pi[k]
        if pattern[k] == c:
            k += 1
        if k == m:
            out.append(i - m + 2)
    return out


def is_complete_first_return(x: str, u: str) -> bool:
    """True iff ``x`` starts and ends with ``u`` and contains it exactly twice."""
    if not u:
        raise ValueError("complete first return to the empty word is not defined")
    if len(u) > len(x) or not (x.startswith(u) and x.endswith(u)):
        return False
    return len(occurrences(u, x)) == 2


def reverse(w: str) -> str:
    return w[::-1]


def is_palindrome(w: str) -> bool:
    return w == w[::-1]


def conjugates(w: str) -> set[str]:
    if not w:
        return {""}
    return {w[i:] + w[:i] for i in range(len(w))}


def factors_of_length(w: str, n: int) -> FactorSet:
    if n < 0:
        raise ValueError("factor length must be non-negative")
    if n > len(w):
        return FactorSet()
    return FactorSet(w[i:i + n] for i in range(len(w) - n + 1))


def factors(w: str) -> FactorSet:
    """Every distinct factor of ``w``, the empty word included."""
    n = len(w)
    return FactorSet({""} | {w[i:j] for i in range(n) for j in range(i + 1, n + 1)})


def letter_count(w: str, letter: str) -> int:
    return w.count(letter)


def is_binary(w: str) -> bool:
    return len(set(w)) <= 2


def distinct_windows(w: str, length: int) -> list[str]:
    """Distinct windows ``w[s:s+length]``, in order of first occurrence.

    Windows starting near the end are shorter.  Every factor of ``w`` of
    length at most ``length`` is a prefix of some returned window, so
    profile computations need only look at these.
    """
    seen = set()
    out = []
    for s in range(len(w)):
        win = w[s:s + length]
        if win not in seen:
            seen.add(win)
            out.append(win)
    return out
