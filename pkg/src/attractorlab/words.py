"""Generators for the word families studied here.

Fibonacci, kernel and Thue-Morse words live on ``{a, b}``. De Bruijn and
spoon-feeding constructions take an explicit alphabet (or its size, meaning
the first ``sigma`` lowercase letters) and enumerate words lexicographically
in that alphabet's order.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence, Union

from .text import Alphabet, as_alphabet

AlphabetLike = Union[Alphabet, str, int]

FIBONACCI_MORPHISM = {"a": "ab", "b": "a"}
THUE_MORSE_MORPHISM = {"a": "ab", "b": "ba"}


def fibonacci_number(m: int) -> int:
    """f_{-2} = 0, f_{-1} = 1, f_m = f_{m-1} + f_{m-2}."""
    if m < -2:
        raise ValueError(f"Fibonacci index must be >= -2, got {m}")
    a, b = 0, 1  # f_{-2}, f_{-1}
    for _ in range(m + 2):
        a, b = b, a + b
    return a


def fibonacci_word(m: int) -> str:
    """F_{-2} = '', F_{-1} = 'b', F_0 = 'a', F_m = F_{m-1} F_{m-2}."""
    if m < -2:
        raise ValueError(f"Fibonacci index must be >= -2, got {m}")
    if m < 0:
        return ("", "b")[m + 2]
    prev, cur = "b", "a"  # F_{-1}, F_0
    for _ in range(m):
        prev, cur = cur, cur + prev
    return cur


def _delta(m: int) -> str:
    # last letter of F_m
    return "a" if m % 2 == 0 else "b"


def kernel_word(m: int) -> str:
    """K_m: F_m with its last letter dropped and the other letter prepended."""
    if m < -2:
        raise ValueError(f"kernel index must be >= -2, got {m}")
    if m == -2:
        return ""
    return _delta(m + 1) + fibonacci_word(m)[:-1]


def thue_morse_word(m: int) -> str:
    """G_0 = 'a', G_m = G_{m-1} followed by its complement."""
    if m < 0:
        raise ValueError(f"Thue-Morse index must be >= 0, got {m}")
    g = "a"
    flip = str.maketrans("ab", "ba")
    for _ in range(m):
        g = g + g.translate(flip)
    return g


def sturmian_word(directive: Sequence[int], m: int) -> str:
    """S_{-1} = 'b', S_0 = 'a', S_m = S_{m-1}^{q_{m-1}} S_{m-2}."""
    directive = list(directive)
    validate_directive(directive)
    if m < -1:
        raise ValueError(f"Sturmian index must be >= -1, got {m}")
    if m > len(directive):
        raise ValueError(f"S_{m} needs {m} directive entries, got {len(directive)}")
    prev, cur = "b", "a"
    if m == -1:
        return prev
    for i in range(m):
        prev, cur = cur, cur * directive[i] + prev
    return cur


def validate_directive(directive: Sequence[int]) -> None:
    if directive and directive[0] < 0:
        raise ValueError("q_0 must be >= 0")
    if any(q <= 0 for q in directive[1:]):
        raise ValueError("q_i must be > 0 for i >= 1")


def apply_morphism(rules: Mapping[str, str], t: str, iterations: int) -> str:
    if iterations < 0:
        raise ValueError("iterations must be >= 0")
    for c, image in rules.items():
        if not image:
            raise ValueError(f"morphism image of {c!r} is empty")
    for _ in range(iterations):
        try:
            t = "".join(rules[c] for c in t)
        except KeyError as e:
            raise ValueError(f"no morphism rule for symbol {e.args[0]!r}") from None
    return t


def lyndon_words(max_len: int, alphabet: AlphabetLike) -> list[str]:
    """All Lyndon words of length <= max_len in lexicographic order (Duval)."""
    sigma = as_alphabet(alphabet)
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    syms = sigma.symbols
    out = []
    w = [-1]
    while w:
        w[-1] += 1
        out.append("".join(syms[i] for i in w))
        m = len(w)
        while len(w) < max_len:
            w.append(w[len(w) - m])
        while w and w[-1] == len(syms) - 1:
            w.pop()
    return out


def de_bruijn_cycle(k: int, alphabet: AlphabetLike) -> str:
    """Lyndon words of lengths dividing k, concatenated; length sigma^k."""
    if k < 1:
        raise ValueError("order k must be >= 1")
    return "".join(w for w in lyndon_words(k, alphabet) if k % len(w) == 0)


def de_bruijn(k: int, alphabet: AlphabetLike, unfolding: str = "back") -> str:
    """Linear de Bruijn word of order k.

    ``back`` repeats the first k-1 symbols of the cycle at the end, ``front``
    repeats the last k-1 symbols in front.
    """
    cycle = de_bruijn_cycle(k, alphabet)
    if unfolding == "back":
        return cycle + cycle[:k - 1]
    if unfolding == "front":
        return cycle[len(cycle) - (k - 1):] + cycle if k > 1 else cycle
    raise ValueError(f"unfolding must be 'back' or 'front', got {unfolding!r}")


def spoon_feeding_set(l: int, alphabet: AlphabetLike) -> list[str]:
    """Words w of length l with w[1] != w[2] and w[l-1] != w[l], sorted."""
    sigma = as_alphabet(alphabet)
    if l < 2:
        raise ValueError("spoon-feeding length must be >= 2")
    return [
        "".join(w)
        for w in itertools.product(sigma.symbols, repeat=l)
        if w[0] != w[1] and w[-2] != w[-1]
    ]


def sff(l: int, k: int, alphabet: AlphabetLike) -> str:
    """Spoon-feeding string: each w in W(l) with first and last symbol repeated k times."""
    if not 2 <= l <= k:
        raise ValueError(f"need 2 <= l <= k, got l={l}, k={k}")
    return "".join(w[0] * k + w[1:-1] + w[-1] * k for w in spoon_feeding_set(l, alphabet))


def spoon_feed(k: int, alphabet: AlphabetLike) -> str:
    """SF(k) = sff(2, k) sff(3, k) ... sff(k, k)."""
    if k < 2:
        raise ValueError("k must be >= 2")
    return "".join(sff(l, k, alphabet) for l in range(2, k + 1))


def spoon_feed_length(k: int, sigma: int) -> int:
    """|SF(k)| from the block counts, without building the string."""
    total = 2 * k * sigma * (sigma - 1)
    for l in range(3, k + 1):
        total += (2 * k + l - 2) * sigma ** (l - 2) * (sigma - 1) ** 2
    return total


def spoon_feed_length_closed_form(k: int, sigma: int) -> int:
    """The published closed form; it assumes a k*sigma^2 block for l = 2."""
    s = sigma
    return (3 * k - 2) * s**k - (3 * k - 1) * s ** (k - 1) - k * s**2 + (2 * k + 1) * s


def palindromic_prefix_positions(t: str) -> list[int]:
    return [p for p in range(1, len(t) + 1) if t[:p] == t[:p][::-1]]


# --- word specs -----------------------------------------------------------

WORDSPEC_GRAMMAR = """\
word specs:
  fib:m                    Fibonacci word F_m (m >= -2)
  kernel:m                 kernel word K_m (m >= -2)
  tm:m                     Thue-Morse word G_m (m >= 0)
  sturmian:q0,q1,...:m     standard Sturmian word S_m
  debruijn:k:sigma[:back|front]
  sff:l:k:sigma            spoon-feeding string for length l
  sf:k:sigma               spoon-feeding string for lengths 2..k
  lit:<string>             the literal string
  file:<path>              raw bytes of a file
  -                        standard input"""


@dataclass(frozen=True)
class WordSpec:
    """A parsed word family instance; ``build()`` generates the text."""

    variant: str
    params: tuple = field(default=())

    def build(self) -> str:
        v, p = self.variant, self.params
        if v == "fibonacci":
            return fibonacci_word(*p)
        if v == "kernel":
            return kernel_word(*p)
        if v == "thue_morse":
            return thue_morse_word(*p)
        if v == "sturmian":
            return sturmian_word(*p)
        if v == "de_bruijn":
            k, sigma, unfolding = p
            return de_bruijn(k, sigma, unfolding)
        if v == "sff":
            return sff(*p)
        if v == "spoon_feed":
            return spoon_feed(*p)
        if v == "literal":
            return p[0]
        raise ValueError(f"unknown word family {v!r}")

    def __str__(self):
        v, p = self.variant, self.params
        if v == "sturmian":
            return f"sturmian:{','.join(map(str, p[0]))}:{p[1]}"
        if v == "de_bruijn":
            return f"debruijn:{p[0]}:{p[1]}:{p[2]}"
        if v == "literal":
            return f"lit:{p[0]}"
        prefix = {v2: k for k, v2 in _PREFIXES.items()}[v]
        return ":".join([prefix, *map(str, p)])


_PREFIXES = {
    "fib": "fibonacci",
    "kernel": "kernel",
    "tm": "thue_morse",
    "sturmian": "sturmian",
    "debruijn": "de_bruijn",
    "sff": "sff",
    "sf": "spoon_feed",
    "lit": "literal",
}

_ARITY = {"fib": 1, "kernel": 1, "tm": 1, "sff": 3, "sf": 2}


class WordSpecError(ValueError):
    pass


def parse_wordspec(s: str) -> WordSpec:
    """Parse the ``family:params`` syntax described by ``WORDSPEC_GRAMMAR``."""
    head, sep, rest = s.partition(":")
    if head == "lit" and sep:
        return WordSpec("literal", (rest,))
    if head not in _PREFIXES or not sep:
        raise WordSpecError(f"malformed word spec {s!r}\n{WORDSPEC_GRAMMAR}")
    parts = rest.split(":")
    try:
        if head == "sturmian":
            if len(parts) != 2:
                raise ValueError
            directive = tuple(int(q) for q in parts[0].split(",")) if parts[0] else ()
            validate_directive(directive)
            spec = WordSpec("sturmian", (directive, int(parts[1])))
        elif head == "debruijn":
            if len(parts) not in (2, 3):
                raise ValueError
            unfolding = parts[2] if len(parts) == 3 else "back"
            if unfolding not in ("back", "front"):
                raise ValueError
            spec = WordSpec("de_bruijn", (int(parts[0]), int(parts[1]), unfolding))
        else:
            if len(parts) != _ARITY[head] or not re.fullmatch(r"-?\d+(:-?\d+)*", rest):
                raise ValueError
            spec = WordSpec(_PREFIXES[head], tuple(int(x) for x in parts))
        _check_domain(spec)
    except ValueError as e:
        detail = f" ({e})" if str(e) else ""
        raise WordSpecError(f"malformed word spec {s!r}{detail}\n{WORDSPEC_GRAMMAR}") from None
    return spec


def _check_domain(spec: WordSpec) -> None:
    v, p = spec.variant, spec.params
    if v in ("fibonacci", "kernel") and p[0] < -2:
        raise ValueError("m must be >= -2")
    if v == "thue_morse" and p[0] < 0:
        raise ValueError("m must be >= 0")
    if v == "sturmian" and not -1 <= p[1] <= len(p[0]):
        raise ValueError("need -1 <= m <= number of directive entries")
    if v == "de_bruijn" and (p[0] < 1 or not 2 <= p[1] <= 26):
        raise ValueError("need k >= 1 and 2 <= sigma <= 26")
    if v == "sff" and (not 2 <= p[0] <= p[1] or not 2 <= p[2] <= 26):
        raise ValueError("need 2 <= l <= k and 2 <= sigma <= 26")
    if v == "spoon_feed" and (p[0] < 2 or not 2 <= p[1] <= 26):
        raise ValueError("need k >= 2 and 2 <= sigma <= 26")


def family_word(family: str, m: int, directive: Optional[Sequence[int]] = None) -> str:
    """Index-``m`` member of ``fibonacci``, ``thue_morse`` or ``sturmian``."""
    if family == "fibonacci":
        return fibonacci_word(m)
    if family == "thue_morse":
        return thue_morse_word(m)
    if family == "sturmian":
        if directive is None:
            raise ValueError("sturmian family needs a directive sequence")
        return sturmian_word(directive, m)
    raise ValueError(f"unknown family {family!r}")
