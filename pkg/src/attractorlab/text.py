"""Text representation, substring queries and substring complexity.

Texts are plain ``str`` objects whose characters are single bytes
(code points below 256). All positions exchanged with callers are 1-based.
"""
from __future__ import annotations

import string
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Union

TextLike = Union[str, bytes]


@dataclass(frozen=True)
class Alphabet:
    """An ordered set of distinct single-byte symbols."""

    symbols: str

    def __post_init__(self):
        if not self.symbols:
            raise ValueError("alphabet must contain at least one symbol")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError(f"alphabet symbols are not distinct: {self.symbols!r}")
        if any(ord(c) > 255 for c in self.symbols):
            raise ValueError("alphabet symbols must be single bytes")

    @classmethod
    def first(cls, sigma: int) -> "Alphabet":
        """The first ``sigma`` lowercase letters."""
        if not 1 <= sigma <= 26:
            raise ValueError(f"sigma must be in [1, 26], got {sigma}")
        return cls(string.ascii_lowercase[:sigma])

    @classmethod
    def of(cls, text: str) -> "Alphabet":
        """Symbols occurring in ``text``, sorted."""
        return cls("".join(sorted(set(text))))

    @property
    def size(self) -> int:
        return len(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __contains__(self, c):
        return c in self.symbols

    def rank(self, c: str) -> int:
        return self.symbols.index(c)


def as_alphabet(alphabet: Union[Alphabet, str, int]) -> Alphabet:
    if isinstance(alphabet, Alphabet):
        return alphabet
    if isinstance(alphabet, int):
        return Alphabet.first(alphabet)
    return Alphabet(alphabet)


def as_text(t: TextLike) -> str:
    """Normalise ``t`` to a ``str`` of single-byte symbols."""
    if isinstance(t, (bytes, bytearray)):
        return bytes(t).decode("latin-1")
    if not isinstance(t, str):
        raise TypeError(f"expected str or bytes, got {type(t).__name__}")
    if any(ord(c) > 255 for c in t):
        raise ValueError("text symbols must be single bytes")
    return t


def occurrences(t: str, w: str) -> list[int]:
    """All 1-based start positions of ``w`` in ``t``, overlaps included."""
    if not w:
        raise ValueError("empty pattern")
    out = []
    i = t.find(w)
    while i != -1:
        out.append(i + 1)
        i = t.find(w, i + 1)
    return out


def first_occurrence_end(t: str, w: str) -> Optional[int]:
    """End position of the leftmost occurrence of ``w``, or None."""
    if not w:
        raise ValueError("empty pattern")
    i = t.find(w)
    return None if i == -1 else i + len(w)


def is_palindrome(t: str) -> bool:
    return t == t[::-1]


class SuffixAutomaton:
    """Online suffix automaton over a growing text.

    State 0 is the root. ``length[v]`` is the longest string of state ``v``,
    ``link[v]`` its suffix link and ``firstpos[v]`` the 1-based end of the
    first occurrence of the strings of ``v``. ``on_clone(q, clone)`` is called
    whenever state ``q`` is split, so callers holding a reference into the
    automaton can follow strings that moved to the clone.
    """

    def __init__(self, text: str = "", on_clone: Optional[Callable[[int, int], None]] = None):
        self.length = [0]
        self.link = [-1]
        self.trans: list[dict[str, int]] = [{}]
        self.firstpos = [0]
        self.is_clone = [False]
        self.last = 0
        self.n = 0
        self.on_clone = on_clone
        for c in text:
            self.extend(c)

    def __len__(self):
        return len(self.length)

    def extend(self, c: str) -> None:
        length, link, trans = self.length, self.link, self.trans
        self.n += 1
        cur = len(length)
        length.append(length[self.last] + 1)
        link.append(0)
        trans.append({})
        self.firstpos.append(self.n)
        self.is_clone.append(False)
        p = self.last
        while p != -1 and c not in trans[p]:
            trans[p][c] = cur
            p = link[p]
        if p != -1:
            q = trans[p][c]
            if length[p] + 1 == length[q]:
                link[cur] = q
            else:
                clone = len(length)
                length.append(length[p] + 1)
                link.append(link[q])
                trans.append(dict(trans[q]))
                self.firstpos.append(self.firstpos[q])
                self.is_clone.append(True)
                while p != -1 and trans[p].get(c) == q:
                    trans[p][c] = clone
                    p = link[p]
                link[q] = clone
                link[cur] = clone
                if self.on_clone is not None:
                    self.on_clone(q, clone)
        self.last = cur

    def contains(self, w: str) -> bool:
        v = 0
        for c in w:
            v = self.trans[v].get(c)
            if v is None:
                return False
        return True


@dataclass(frozen=True)
class ComplexityProfile:
    """Distinct-substring counts ``counts[l-1] = d_l`` for ``l`` in ``[1, L]``."""

    counts: tuple[int, ...]
    delta: Fraction

    def d(self, l: int) -> int:
        return self.counts[l - 1]


def distinct_counts(t: str, max_len: Optional[int] = None) -> list[int]:
    """``d_l`` for l = 1..max_len, from the suffix automaton of ``t``.

    Every state contributes one distinct substring for each length in
    ``(length[link], length]``; a difference array accumulates these ranges.
    """
    n = len(t)
    L = n if max_len is None else min(max_len, n)
    if L <= 0:
        return []
    sam = SuffixAutomaton(t)
    diff = [0] * (n + 2)
    for v in range(1, len(sam)):
        lo = sam.length[sam.link[v]] + 1
        hi = sam.length[v]
        diff[lo] += 1
        diff[hi + 1] -= 1
    out, run = [], 0
    for l in range(1, L + 1):
        run += diff[l]
        out.append(run)
    return out


def complexity_profile(t: str, max_len: Optional[int] = None) -> ComplexityProfile:
    """Counts of distinct substrings per length and ``delta = max d_l / l``."""
    n = len(t)
    if n == 0:
        return ComplexityProfile((), Fraction(0))
    if max_len is not None and not 1 <= max_len <= n:
        raise ValueError(f"length bound must be in [1, {n}], got {max_len}")
    counts = distinct_counts(t, max_len)
    delta = max(Fraction(d, l) for l, d in enumerate(counts, start=1))
    return ComplexityProfile(tuple(counts), delta)


def substrings_of_length(t: str, l: int) -> set[str]:
    return {t[i:i + l] for i in range(len(t) - l + 1)}

