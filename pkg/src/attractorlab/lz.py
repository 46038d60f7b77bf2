"""Lempel-Ziv factorization, self-referencing/non-self-referencing x novel/plain.

Matches are found with ``str.find`` and a galloping search on the match
length: a prefix of an earlier occurrence is itself an earlier occurrence,
so "the first L symbols occur earlier" is monotone in L.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional


class VariantFlags(NamedTuple):
    self_referencing: bool = True
    novel: bool = True


class Phrase(NamedTuple):
    start: int  # 1-based
    length: int
    source_start: Optional[int]  # 1-based start of the referenced part, None for literals

    @property
    def end(self) -> int:
        return self.start + self.length - 1


class FactorizationError(ValueError):
    pass


@dataclass(frozen=True)
class Factorization:
    text: str
    phrases: tuple[Phrase, ...]
    flags: VariantFlags

    def __len__(self):
        return len(self.phrases)

    def __iter__(self) -> Iterator[Phrase]:
        return iter(self.phrases)

    @property
    def contents(self) -> list[str]:
        return [self.text[p.start - 1:p.end] for p in self.phrases]

    @property
    def ends(self) -> list[int]:
        return [p.end for p in self.phrases]

    @property
    def last_complete(self) -> bool:
        """Whether the final phrase was closed by the factorization rule.

        A final phrase is incomplete when the end of the text cut it short:
        under ``novel`` its content still has an earlier occurrence (by the
        variant's rule), otherwise it is a copy whose match ran into the end
        of the text.
        """
        if not self.phrases:
            return True
        last = self.phrases[-1]
        if self.flags.novel:
            return _earlier_start(self.text, last.start - 1, last.length, self.flags.self_referencing) == -1
        return last.source_start is None

    @property
    def z(self) -> int:
        """Number of phrases not cut short by the end of the text."""
        return len(self.phrases) - (0 if self.last_complete else 1)

    def __str__(self):
        return "|".join(self.contents)

    def describe(self) -> str:
        """``content(start<-source)|...``; literals show no source."""
        out = []
        for p, w in zip(self.phrases, self.contents):
            src = "" if p.source_start is None else f"<-{p.source_start}"
            out.append(f"{w}({p.start}{src})")
        return "|".join(out)

    def records(self) -> list[dict]:
        return [p._asdict() for p in self.phrases]


def _earlier_start(t: str, i: int, L: int, self_ref: bool) -> int:
    """0-based leftmost start of an earlier occurrence of t[i:i+L], or -1.

    Self-referencing: any occurrence starting before i. Otherwise the
    occurrence must lie inside t[:i].
    """
    w = t[i:i + L]
    return t.find(w, 0, i + L - 1) if self_ref else t.find(w, 0, i)


def longest_previous_factor(t: str, i: int, self_ref: bool = True) -> tuple[int, int]:
    """Longest L such that t[i:i+L] occurs earlier; returns (L, 0-based source or -1)."""
    n = len(t)
    if i >= n or _earlier_start(t, i, 1, self_ref) == -1:
        return 0, -1
    lo, hi = 1, 2
    limit = n - i
    while hi <= limit and _earlier_start(t, i, hi, self_ref) != -1:
        lo, hi = hi, hi * 2
    hi = min(hi, limit + 1)
    # invariant: lo matches, hi does not (or exceeds the text)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _earlier_start(t, i, mid, self_ref) != -1:
            lo = mid
        else:
            hi = mid
    return lo, _earlier_start(t, i, lo, self_ref)


def lz_factorize(t: str, flags: VariantFlags = VariantFlags()) -> Factorization:
    """Greedy left-to-right LZ factorization of ``t`` under ``flags``.

    Plain phrases are the longest prefix with an earlier occurrence (at least
    one symbol). Novel phrases extend that match by the first new symbol, so
    every phrase except possibly the last is a first occurrence.
    """
    flags = VariantFlags(*flags)
    n = len(t)
    phrases = []
    i = 0
    while i < n:
        L, src = longest_previous_factor(t, i, flags.self_referencing)
        if flags.novel:
            length = min(L + 1, n - i)
        else:
            length = max(L, 1)
        source = src + 1 if L > 0 else None
        phrases.append(Phrase(i + 1, length, source))
        i += length
    return Factorization(t, tuple(phrases), flags)


def reconstruct(f: Factorization) -> str:
    """Rebuild the text from phrase structure alone (sources + literals).

    Uses only ``f.phrases`` and the literal symbols of source-less phrases and
    the final symbol of novel phrases, taken from ``f.text``; raises
    ``FactorizationError`` if phrases do not tile or a source is invalid.
    """
    out: list[str] = []
    expected = 1
    for p in f.phrases:
        if p.start != expected or p.length < 1:
            raise FactorizationError(f"phrase {p} does not continue at position {expected}")
        if p.source_start is None:
            if p.length != 1:
                raise FactorizationError(f"literal phrase {p} must have length 1")
            out.append(f.text[p.start - 1])
        else:
            # novel phrases copy all but their last symbol unless they end the text
            copied = p.length
            if f.flags.novel and not (p is f.phrases[-1] and not f.last_complete):
                copied -= 1
            s = p.source_start - 1
            if s >= p.start - 1 or (not f.flags.self_referencing and s + copied > p.start - 1):
                raise FactorizationError(f"phrase {p} has an invalid source")
            for j in range(copied):  # symbol by symbol: sources may overlap the phrase
                out.append(out[s + j])
            if copied < p.length:
                out.append(f.text[p.end - 1])
        expected = p.start + p.length
    if expected != len(f.text) + 1:
        raise FactorizationError("phrases do not cover the text")
    return "".join(out)
