"""Verification, bounds and exact computation of (sharp) k-attractors."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .lazy import MarkingTrace
from .text import SuffixAutomaton, distinct_counts, occurrences


@dataclass(frozen=True)
class AttractorSet:
    positions: tuple[int, ...]
    k: Optional[int] = None  # None: every length (string attractor)
    sharp: bool = False

    def __post_init__(self):
        pos = tuple(sorted(set(self.positions)))
        object.__setattr__(self, "positions", pos)
        if self.k is not None and self.k < 1:
            raise ValueError(f"scope k must be >= 1 or None, got {self.k}")
        if self.sharp and self.k is None:
            raise ValueError("a sharp attractor needs a finite scope k")

    def __len__(self):
        return len(self.positions)

    def __iter__(self):
        return iter(self.positions)

    def __str__(self):
        return ",".join(map(str, self.positions))

    @classmethod
    def parse(cls, s: str, k: Optional[int] = None, sharp: bool = False) -> "AttractorSet":
        s = s.strip()
        positions = [int(x) for x in s.split(",")] if s else []
        return cls(tuple(positions), k, sharp)

    def with_positions(self, positions: Iterable[int]) -> "AttractorSet":
        return AttractorSet(tuple(positions), self.k, self.sharp)


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    witness: Optional[str] = None
    witness_occurrences: tuple[int, ...] = ()

    def __bool__(self):
        return self.valid

    def record(self) -> dict:
        return {
            "valid": self.valid,
            "witness": self.witness,
            "witness_occurrences": list(self.witness_occurrences),
        }


def _scope_lengths(n: int, k: Optional[int], sharp: bool) -> tuple[int, int]:
    if k is None:
        return 1, n
    return (k if sharp else 1), min(k, n)


def verify(t: str, a: AttractorSet) -> VerificationReport:
    """Check that every distinct substring in scope has an occurrence hitting ``a``.

    Each suffix automaton state groups substrings sharing their end
    positions. A length-l string ending at e is hit iff the nearest marking
    at or before e lies within l - 1 of e, so per state only the smallest
    such distance over its end positions matters. On failure the witness is
    the shortest, then lexicographically least, uncovered substring.
    """
    n = len(t)
    marks = a.positions
    if marks and (marks[0] < 1 or marks[-1] > n):
        raise ValueError(f"attractor positions must lie in [1, {n}]")
    lo, hi = _scope_lengths(n, a.k, a.sharp)
    if n == 0 or lo > hi:
        return VerificationReport(True)

    # gap[e]: distance from e back to the nearest marking <= e
    inf = n + 1
    gap = [inf] * (n + 1)
    is_mark = [False] * (n + 1)
    for p in marks:
        is_mark[p] = True
    last = None
    for e in range(1, n + 1):
        if is_mark[e]:
            last = e
        if last is not None:
            gap[e] = e - last

    sam = SuffixAutomaton(t)
    size = len(sam)
    best = [inf] * size
    for v in range(1, size):
        if not sam.is_clone[v]:
            best[v] = gap[sam.firstpos[v]]
    for v in sorted(range(1, size), key=sam.length.__getitem__, reverse=True):
        u = sam.link[v]
        if u > 0 and best[v] < best[u]:
            best[u] = best[v]

    wlen, candidates = None, []
    for v in range(1, size):
        first = max(sam.length[sam.link[v]] + 1, lo)
        last_uncovered = min(sam.length[v], best[v], hi)
        if first > last_uncovered:
            continue
        if wlen is None or first < wlen:
            wlen, candidates = first, [v]
        elif first == wlen:
            candidates.append(v)
    if wlen is None:
        return VerificationReport(True)
    w = min(t[sam.firstpos[v] - wlen:sam.firstpos[v]] for v in candidates)
    return VerificationReport(False, w, tuple(occurrences(t, w)))


def is_attractor(t: str, positions: Iterable[int], k: Optional[int] = None, sharp: bool = False) -> bool:
    return verify(t, AttractorSet(tuple(positions), k, sharp)).valid


def complexity_lower_bound(t: str, l: int) -> int:
    """ceil(d_l / l): no l'-attractor with l' >= l can be smaller."""
    if not 1 <= l <= len(t):
        raise ValueError(f"length must be in [1, {len(t)}], got {l}")
    return -(-distinct_counts(t, l)[l - 1] // l)


# --- exact solver -----------------------------------------------------------


class BudgetExceeded(RuntimeError):
    """The exact solver hit its size or node limit; no answer is returned."""


@dataclass
class SolverStats:
    nodes: int = 0
    elements: int = 0
    candidates: int = 0
    lower_bound: int = 0
    greedy_bound: int = 0


@dataclass(frozen=True)
class ExactResult:
    size: int
    attractor: AttractorSet
    stats: SolverStats = field(compare=False, default_factory=SolverStats)


def coverage_masks(t: str, k: Optional[int] = None, sharp: bool = False) -> dict[str, int]:
    """For every distinct substring in scope, the bitmask of positions hitting it.

    Bit ``p - 1`` stands for position ``p``.
    """
    n = len(t)
    lo, hi = _scope_lengths(n, k, sharp)
    masks: dict[str, int] = {}
    for l in range(lo, hi + 1):
        span = (1 << l) - 1
        for s in range(n - l + 1):
            w = t[s:s + l]
            masks[w] = masks.get(w, 0) | (span << s)
    return masks


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _greedy_cover(elements: list[int], candidates: list[int]) -> list[int]:
    chosen = []
    remaining = elements
    while remaining:
        p = max(candidates, key=lambda q: (sum(1 for m in remaining if m >> q & 1), -q))
        chosen.append(p)
        remaining = [m for m in remaining if not m >> p & 1]
    return chosen


def _packing_bound(elements: list[int]) -> int:
    # pairwise disjoint elements each need their own position
    used, count = 0, 0
    for m in sorted(elements, key=_popcount):
        if not m & used:
            used |= m
            count += 1
    return count


def min_attractor_exact(
    t: str,
    k: Optional[int] = None,
    sharp: bool = False,
    max_n: int = 64,
    max_nodes: int = 2_000_000,
) -> ExactResult:
    """Minimum (sharp) k-attractor by branch and bound over a hitting-set model.

    Elements are distinct substrings (as position masks); an element whose
    mask contains another element's mask is implied and dropped, as are
    positions whose hit set is contained in another position's. Branching
    picks the element with fewest candidate positions. Raises
    ``BudgetExceeded`` rather than returning a non-optimal answer.
    """
    n = len(t)
    if n > max_n:
        raise BudgetExceeded(f"text length {n} exceeds the solver limit {max_n}")
    stats = SolverStats()
    if n == 0:
        return ExactResult(0, AttractorSet((), k, sharp), stats)

    raw = sorted(set(coverage_masks(t, k, sharp).values()), key=lambda m: (_popcount(m), m))
    elements: list[int] = []
    for m in raw:
        if not any(e & m == e for e in elements):
            elements.append(m)

    # position domination: p is dropped if some q hits a superset of p's elements
    hits = {p: frozenset(i for i, m in enumerate(elements) if m >> p & 1) for p in range(n)}
    candidates = []
    for p in range(n):
        if not hits[p]:
            continue
        dominated = any(
            q != p and hits[p] <= hits[q] and (hits[p] != hits[q] or q < p) for q in range(n)
        )
        if not dominated:
            candidates.append(p)
    keep = sum(1 << p for p in candidates)
    elements = [m & keep for m in elements]

    stats.elements = len(elements)
    stats.candidates = len(candidates)
    best = _greedy_cover(elements, candidates)
    stats.greedy_bound = len(best)
    lo, hi = _scope_lengths(n, k, sharp)
    counts = distinct_counts(t, hi)
    root_lb = max([_packing_bound(elements)] + [-(-counts[l - 1] // l) for l in range(lo, hi + 1)])
    stats.lower_bound = root_lb

    def search(remaining: list[int], chosen: list[int]) -> None:
        nonlocal best
        stats.nodes += 1
        if stats.nodes > max_nodes:
            raise BudgetExceeded(f"exceeded {max_nodes} search nodes")
        if not remaining:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        if len(chosen) + max(1, _packing_bound(remaining)) >= len(best):
            return
        pivot = min(remaining, key=lambda m: (_popcount(m), m))
        options = [p for p in candidates if pivot >> p & 1]
        options.sort(key=lambda p: (-sum(1 for m in remaining if m >> p & 1), p))
        for p in options:
            chosen.append(p)
            search([m for m in remaining if not m >> p & 1], chosen)
            chosen.pop()
            if len(best) <= root_lb:
                return

    if len(best) > root_lb:
        search(elements, [])
    positions = tuple(sorted(p + 1 for p in best))
    return ExactResult(len(positions), AttractorSet(positions, k, sharp), stats)


def minimal_reduce(t: str, a: AttractorSet) -> AttractorSet:
    """Drop positions (ascending scan, restart after each drop) while valid."""
    if not verify(t, a).valid:
        raise ValueError("minimal_reduce needs a valid attractor")
    current = list(a.positions)
    changed = True
    while changed:
        changed = False
        for p in current:
            trial = a.with_positions(q for q in current if q != p)
            if verify(t, trial).valid:
                current = list(trial.positions)
                changed = True
                break
    return a.with_positions(current)


def equidistant_attractor(db: str, k: int, phase: int, sharp: bool = False) -> AttractorSet:
    """Positions phase, phase + k, phase + 2k, ... within the text."""
    if not 1 <= phase <= k:
        raise ValueError(f"phase must be in [1, {k}], got {phase}")
    return AttractorSet(tuple(range(phase, len(db) + 1, k)), k, sharp)


# --- extension assignment ---------------------------------------------------


class GapLemmaApplies(ValueError):
    """No run of k-1 unmarked positions: the (k-1)-trace gives the same markings."""


@dataclass(frozen=True)
class Extension:
    marking: int
    trigger: str
    trigger_start: int
    direction: str  # "rightward" | "leftward"
    start: int
    content: str


@dataclass(frozen=True)
class ExtensionAssignment:
    k: int
    gap_start: int  # first position of the first run of k-1 unmarked positions
    extensions: tuple[Extension, ...]

    @property
    def substrings(self) -> set[str]:
        return {e.content for e in self.extensions}


def first_gap(markings: Iterable[int], n: int, k: int) -> Optional[int]:
    """Start of the first run of >= k-1 unmarked positions after a marking."""
    marks = sorted(markings)
    if not marks:
        return None
    bounds = marks[1:] + [n + 1]
    for m, nxt in zip(marks, bounds):
        if nxt - m - 1 >= k - 1 and nxt - m - 1 > 0:
            return m + 1
    return None


def assign_extensions(t: str, trace: MarkingTrace, k: int) -> ExtensionAssignment:
    """Map each Lazy marking to a distinct length-k substring.

    Triggers before the first run of k-1 unmarked positions are extended to
    the right, later ones to the left.
    """
    if trace.k != k or trace.sharp:
        raise ValueError("assign_extensions needs a non-sharp Lazy trace with the same k")
    n = len(t)
    if k == 1:
        gap = n + 1
    else:
        g = first_gap(trace.markings, n, k)
        if g is None:
            raise GapLemmaApplies(f"no run of {k - 1} unmarked positions; compare with the {k - 1}-trace")
        gap = g
    out = []
    for mark, (x, end) in zip(trace.markings, trace.triggers):
        ki = end - x + 1
        if mark < gap:
            direction, start = "rightward", x
        else:
            direction, start = "leftward", x - (k - ki)
        if start < 1 or start + k - 1 > n:
            raise AssertionError(f"extension of trigger at {x} leaves the text")
        out.append(Extension(mark, t[x - 1:end], x, direction, start, t[start - 1:start + k - 1]))
    return ExtensionAssignment(k, gap, tuple(out))
