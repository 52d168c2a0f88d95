"""Prefixes of infinite words: morphic fixed points, standard Sturmian words,
episturmian words from directive sequences, and ultimately periodic words.

All constructions are exact integer/string recursions.  Every source obeys
prefix coherence: ``prefix(n)`` is a prefix of ``prefix(m)`` for ``n <= m``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .words import prefix_function


@dataclass(frozen=True)
class Directive:
    """Eventually periodic sequence ``preperiod + period^omega``.

    An empty ``period`` makes the sequence finite.
    """

    preperiod: tuple = ()
    period: tuple = ()

    @classmethod
    def periodic(cls, items: Sequence) -> Directive:
        return cls((), tuple(items))

    @classmethod
    def finite(cls, items: Sequence) -> Directive:
        return cls(tuple(items), ())

    @classmethod
    def parse(cls, text: str, *, integers: bool = False) -> Directive:
        """Parse ``"2(1)"`` / ``"(1,2)"`` / ``"abc"`` style descriptions.

        Parentheses mark the repeating part; without them the whole list
        repeats.  Integer lists are comma separated, letters need no commas.
        """
        m = re.fullmatch(r"\s*([^()]*?)\s*(?:\(([^()]*)\))?\s*", text)
        if m is None:
            raise ValueError(f"cannot parse directive {text!r}")
        head, tail = m.group(1), m.group(2)

        def items(s: str) -> tuple:
            if integers:
                return tuple(int(x) for x in s.replace(" ", "").split(",") if x)
            return tuple(s.replace(",", "").replace(" ", ""))

        if tail is None:
            return cls.periodic(items(head))
        return cls(items(head), items(tail))

    def __iter__(self) -> Iterator:
        yield from self.preperiod
        if self.period:
            yield from itertools.cycle(self.period)

    @property
    def is_finite(self) -> bool:
        return not self.period

    def __str__(self) -> str:
        def fmt(t):
            return ",".join(map(str, t))
        return f"{fmt(self.preperiod)}({fmt(self.period)})"


def _as_directive(d) -> Directive:
    if isinstance(d, Directive):
        return d
    return Directive.finite(tuple(d))


@dataclass(frozen=True)
class MorphismSpec:
    images: dict[str, str]

    def __post_init__(self):
        for a, img in self.images.items():
            if len(a) != 1:
                raise ValueError(f"letter expected, got {a!r}")
            if not img:
                raise ValueError(f"morphism erases {a!r}")
            if set(img) - set(self.images):
                raise ValueError(f"image of {a!r} uses letters outside the alphabet")

    def __hash__(self):
        return hash(tuple(sorted(self.images.items())))

    def apply(self, w: str) -> str:
        return w.translate(str.maketrans(self.images))

    def is_prolongable(self, seed: str) -> bool:
        img = self.images.get(seed, "")
        return len(img) > 1 and img[0] == seed


THUE_MORSE = MorphismSpec({"0": "01", "1": "10"})
FIBONACCI = MorphismSpec({"0": "01", "1": "0"})
# codes a 3-interval exchange; fixed point from seed c
ALPHA = MorphismSpec({"a": "c", "b": "ca", "c": "caba"})


def morphic_prefix(spec: MorphismSpec, seed: str, n: int) -> str:
    """Length-``n`` prefix of the fixed point ``f^omega(seed)``."""
    if not spec.is_prolongable(seed):
        raise ValueError(f"morphism is not prolongable on {seed!r}")
    w = seed
    while len(w) < n:
        w = spec.apply(w)
    return w[:n]


def thue_morse_prefix(n: int) -> str:
    return morphic_prefix(THUE_MORSE, "0", n)


def fibonacci_prefix(n: int) -> str:
    return morphic_prefix(FIBONACCI, "0", n)


def alpha_fixed_point_prefix(n: int) -> str:
    return morphic_prefix(ALPHA, "c", n)


def standard_sturmian_prefix(directive, n: int) -> str:
    """Prefix of the characteristic Sturmian word with the given directive.

    ``s_{-1} = 1``, ``s_0 = 0``, ``s_k = s_{k-1}^{d_k} s_{k-2}``.  A plain
    sequence is used as given and must reach length ``n``; pass a
    :class:`Directive` to repeat it.
    """
    d = _as_directive(directive)
    if d.is_finite and not d.preperiod:
        raise ValueError("directive must be nonempty")
    prev, cur = "1", "0"
    it = iter(d)
    while len(cur) < n:
        try:
            dk = next(it)
        except StopIteration:
            raise ValueError(
                f"directive {d} only reaches length {len(cur)}, {n} requested"
            ) from None
        if dk < 1:
            raise ValueError(f"directive entries must be positive, got {dk}")
        prev, cur = cur, cur * dk + prev
    return cur[:n]


def longest_palindromic_suffix(w: str) -> int:
    if not w:
        return 0
    # longest prefix of reversed(w) that is a suffix of w
    return prefix_function(w[::-1] + "\x00" + w)[-1]


def palindromic_closure(w: str) -> str:
    """Shortest palindrome having ``w`` as a prefix."""
    k = longest_palindromic_suffix(w)
    head = w[:len(w) - k]
    return w + head[::-1]


def episturmian_prefix(directive, n: int, *, strict: bool = False) -> str:
    """Prefix of the standard episturmian word directed by ``directive``.

    Built by iterated palindromic closure ``u_{k+1} = (u_k a_{k+1})^(+)``.
    With ``strict`` a periodic directive must repeat every letter it uses,
    so that the word is A-strict (Arnoux-Rauzy) over its alphabet.
    """
    d = _as_directive(directive)
    if strict and d.period and not set(d.preperiod) <= set(d.period):
        raise ValueError(f"directive {d} is not A-strict: some letters never recur")
    u = ""
    for a in d:
        if len(u) >= n:
            break
        u = palindromic_closure(u + a)
    if len(u) < n:
        raise ValueError(f"directive {d} only reaches length {len(u)}, {n} requested")
    return u[:n]


def periodic_prefix(u: str, v: str, n: int) -> str:
    """Length-``n`` prefix of ``u v^omega``."""
    if not v:
        raise ValueError("periodic part must be nonempty")
    if n <= len(u):
        return u[:n]
    reps = -(-(n - len(u)) // len(v))
    return (u + v * reps)[:n]


# -- named sources --------------------------------------------------------------


@dataclass
class WordSource:
    """A named infinite word that can produce arbitrarily long prefixes."""

    kind: str
    name: str
    params: dict = field(default_factory=dict)
    _cache: str = field(default="", repr=False, compare=False)

    def _build(self, n: int) -> str:
        p = self.params
        if self.kind == "morphic":
            return morphic_prefix(p["spec"], p["seed"], n)
        if self.kind == "standard":
            return standard_sturmian_prefix(p["directive"], n)
        if self.kind == "episturmian-directive":
            return episturmian_prefix(p["directive"], n)
        if self.kind == "literal-periodic":
            return periodic_prefix(p["u"], p["v"], n)
        raise ValueError(f"unknown source kind {self.kind!r}")

    def prefix(self, n: int) -> str:
        if n < 0:
            raise ValueError("prefix length must be non-negative")
        if n > len(self._cache):
            self._cache = self._build(n)
        return self._cache[:n]

    @property
    def alphabet_size(self) -> int:
        return len(set(self.prefix(256)))


def parse_source(text: str) -> WordSource:
    """Build a source from its CLI name.

    ``tm``, ``fibonacci``, ``alpha``, ``tribonacci``,
    ``standard:<d1,d2,...>``, ``episturmian:<letters>``, ``periodic:<u>,<v>``.
    Directives accept parentheses for the repeating part, e.g.
    ``standard:2,(1)``; otherwise the whole list repeats.
    """
    head, _, arg = text.partition(":")
    head = head.strip().lower()
    if head in ("tm", "thue-morse"):
        return WordSource("morphic", "tm", {"spec": THUE_MORSE, "seed": "0"})
    if head in ("fibonacci", "fib"):
        return WordSource("morphic", "fibonacci", {"spec": FIBONACCI, "seed": "0"})
    if head == "alpha":
        return WordSource("morphic", "alpha", {"spec": ALPHA, "seed": "c"})
    if head == "tribonacci":
        return WordSource("episturmian-directive", "tribonacci", {"directive": Directive.periodic("abc")})
    if head == "standard":
        d = Directive.parse(arg, integers=True)
        if not list(itertools.islice(d, 1)):
            raise ValueError("standard source needs a nonempty directive")
        return WordSource("standard", text, {"directive": d})
    if head == "episturmian":
        d = Directive.parse(arg)
        if not list(itertools.islice(d, 1)):
            raise ValueError("episturmian source needs a nonempty directive")
        return WordSource("episturmian-directive", text, {"directive": d})
    if head == "periodic":
        u, sep, v = arg.partition(",")
        if not sep:
            u, v = "", u
        if not v:
            raise ValueError("periodic source needs a nonempty period: periodic:<u>,<v>")
        return WordSource("literal-periodic", text, {"u": u, "v": v})
    raise ValueError(f"unknown source {text!r}")
