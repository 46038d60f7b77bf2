"""The Lazy online algorithm for (sharp) k-attractors and string attractors.

Lazy reads the text left to right and marks position i exactly when the
window since the last marking, capped to the last k symbols, has not been
seen before. Scope ``k=None`` is the unbounded string attractor problem.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional

from .lz import VariantFlags, lz_factorize
from .text import SuffixAutomaton


class Step(NamedTuple):
    position: int
    window_start: int
    window_end: int
    novel: bool
    marked: bool


class Trigger(NamedTuple):
    start: int
    end: int


@dataclass(frozen=True)
class MarkingTrace:
    text: str
    k: Optional[int]
    sharp: bool
    markings: tuple[int, ...]
    triggers: tuple[Trigger, ...]
    steps: tuple[Step, ...] = ()

    @property
    def cost(self) -> int:
        return len(self.markings)

    def trigger_contents(self) -> list[str]:
        return [self.text[s - 1:e] for s, e in self.triggers]

    def summary(self) -> dict:
        return {
            "k": 0 if self.k is None else self.k,
            "sharp": self.sharp,
            "cost": self.cost,
            "markings": list(self.markings),
        }


def _check_scope(k: Optional[int], sharp: bool) -> None:
    if k is not None and k < 1:
        raise ValueError(f"scope k must be >= 1 or None, got {k}")
    if sharp and k is None:
        raise ValueError("the sharp variant needs a finite scope k")


class LazyStream:
    """Incremental Lazy: feed symbols one at a time with ``push``.

    Novelty is decided against a suffix automaton of the text read so far,
    tracking the automaton state of the current window.
    """

    def __init__(self, k: Optional[int] = None, sharp: bool = False):
        _check_scope(k, sharp)
        self.k = k
        self.sharp = sharp
        self.sam = SuffixAutomaton(on_clone=self._on_clone)
        self.i = 0
        self.last_mark = 0
        self.markings: list[int] = []
        self.triggers: list[Trigger] = []
        # automaton state and length of the tracked window suffix
        self._state = 0
        self._len = 0

    def _on_clone(self, q: int, clone: int) -> None:
        if self._state == q and self._len <= self.sam.length[clone]:
            self._state = clone

    def _shrink(self, new_len: int) -> None:
        sam = self.sam
        v = self._state
        while v != 0 and new_len <= sam.length[sam.link[v]]:
            v = sam.link[v]
        self._state, self._len = v, new_len

    def push(self, c: str) -> Step:
        self.i += 1
        i, k = self.i, self.k
        sam = self.sam
        # the tracked window t[i - len .. i - 1] is a substring of t[1..i-1]
        if self.sharp:
            cap = k - 1
        elif k is None:
            cap = i - 1 - self.last_mark
        else:
            cap = min(i - 1 - self.last_mark, k - 1)
        if self._len > cap:
            self._shrink(cap)
        nxt = sam.trans[self._state].get(c)
        new_len = self._len + 1
        wstart = i - new_len + 1
        if self.sharp:
            novel = new_len == k and nxt is None
            mark = novel and wstart > self.last_mark
        else:
            novel = mark = nxt is None
        if mark:
            self.markings.append(i)
            self.triggers.append(Trigger(wstart, i))
            self.last_mark = i
        if nxt is not None:
            self._state, self._len = nxt, new_len
            sam.extend(c)
        elif self.sharp:
            sam.extend(c)
            # the window is a suffix of the whole text now
            v = sam.last
            while new_len <= sam.length[sam.link[v]]:
                v = sam.link[v]
            self._state, self._len = v, new_len
        else:
            sam.extend(c)
            self._state, self._len = 0, 0
        return Step(i, wstart, i, novel, mark)


def lazy_run(t: str, k: Optional[int] = None, sharp: bool = False, record_steps: bool = False) -> MarkingTrace:
    """Run Lazy over ``t`` with scope ``k`` (None = unbounded)."""
    stream = LazyStream(k, sharp)
    steps = []
    for c in t:
        s = stream.push(c)
        if record_steps:
            steps.append(s)
    return MarkingTrace(t, k, sharp, tuple(stream.markings), tuple(stream.triggers), tuple(steps))


def lazy_run_naive(t: str, k: Optional[int] = None, sharp: bool = False) -> MarkingTrace:
    """Reference Lazy that rescans the prefix for every window."""
    _check_scope(k, sharp)
    j = 0
    markings, triggers = [], []
    for i in range(1, len(t) + 1):
        if sharp:
            s = i - k + 1
            if s < 1 or s <= j:
                continue
        else:
            s = j + 1 if k is None else max(j + 1, i - k + 1)
        w = t[s - 1:i]
        if t.find(w, 0, i - 1) == -1:
            markings.append(i)
            triggers.append(Trigger(s, i))
            j = i
    return MarkingTrace(t, k, sharp, tuple(markings), tuple(triggers))


@dataclass(frozen=True)
class EquivalenceResult:
    equal: bool
    lazy_markings: tuple[int, ...]
    phrase_ends: tuple[int, ...]
    trailing_incomplete: bool

    def __bool__(self):
        return self.equal

    def diagnostic(self) -> str:
        if self.equal:
            return "lazy markings equal novel LZ phrase ends"
        a, b = set(self.lazy_markings), set(self.phrase_ends)
        return f"only lazy: {sorted(a - b)[:10]}, only LZ: {sorted(b - a)[:10]}"


def lazy_lz_equivalence(t: str) -> EquivalenceResult:
    """Compare unbounded Lazy with the self-referencing novel LZ factorization."""
    trace = lazy_run(t)
    f = lz_factorize(t, VariantFlags(self_referencing=True, novel=True))
    ends = f.ends
    incomplete = not f.last_complete
    if incomplete:
        ends = ends[:-1]
    return EquivalenceResult(tuple(ends) == trace.markings, trace.markings, tuple(ends), incomplete)


def online_cost_curve(family: str, m_values: Iterable[int], directive=None) -> Iterator[tuple[int, MarkingTrace]]:
    from .words import family_word

    for m in m_values:
        yield m, lazy_run(family_word(family, m, directive))
