import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from attractorlab.attractor import min_attractor_exact
from attractorlab.lz import (
    Factorization,
    FactorizationError,
    Phrase,
    VariantFlags,
    longest_previous_factor,
    lz_factorize,
    reconstruct,
)

from oracles import naive_lz_novel

VARIANT_TEXT = "aaabbabaabaaabab"
VARIANT_PHRASES = {
    (True, True): (["a", "aab", "ba", "baa", "baaa", "bab"], 5),
    (True, False): (["a", "aa", "b", "b", "ab", "aab", "aaab", "ab"], 7),
    (False, True): (["a", "aa", "b", "ba", "baa", "baaa", "bab"], 6),
    (False, False): (["a", "a", "a", "b", "b", "ab", "aab", "aaab", "ab"], 8),
}
ALL_FLAGS = [VariantFlags(s, v) for s in (True, False) for v in (True, False)]


@pytest.mark.parametrize("flags", ALL_FLAGS, ids=str)
def test_variant_reference(flags):
    f = lz_factorize(VARIANT_TEXT, flags)
    contents, z = VARIANT_PHRASES[tuple(flags)]
    assert f.contents == contents
    assert f.z == z


def test_aaaa():
    f = lz_factorize("aaaa", VariantFlags(True, True))
    assert f.contents == ["a", "aaa"]
    assert len(f) == 2
    f = lz_factorize("aaaa", VariantFlags(True, False))
    assert f.contents == ["a", "aaa"]
    f = lz_factorize("aaaa", VariantFlags(False, False))
    assert f.contents == ["a", "a", "aa"]


def test_empty_and_single():
    assert len(lz_factorize("")) == 0
    f = lz_factorize("x")
    assert f.contents == ["x"] and f.phrases[0].source_start is None


def test_describe_and_records():
    f = lz_factorize("abaab")
    assert f.describe().startswith("a(1)|b(2)|")
    recs = f.records()
    assert recs[0] == {"start": 1, "length": 1, "source_start": None}
    assert [r["start"] for r in recs] == [p.start for p in f]


def test_longest_previous_factor():
    # 0-based index and source
    assert longest_previous_factor("abab", 2, True) == (2, 0)
    assert longest_previous_factor("aaaa", 1, True) == (3, 0)
    assert longest_previous_factor("aaaa", 1, False) == (1, 0)
    assert longest_previous_factor("abc", 2, True) == (0, -1)


def test_reconstruct_rejects_broken_factorization():
    good = lz_factorize("abab", VariantFlags(True, False))
    # structurally fine, but the copy does not spell the text
    wrong = Factorization(good.text, (Phrase(1, 1, None), Phrase(2, 3, 1)), good.flags)
    assert reconstruct(wrong) == "aaaa"
    ahead = Factorization(good.text, (Phrase(1, 1, None), Phrase(2, 3, 2)), good.flags)
    with pytest.raises(FactorizationError):
        reconstruct(ahead)
    gap = Factorization(good.text, (Phrase(1, 1, None), Phrase(3, 2, 1)), good.flags)
    with pytest.raises(FactorizationError):
        reconstruct(gap)


def test_round_trip_random():
    rng = random.Random(7)
    for _ in range(2500):
        sigma = rng.randint(2, 5)
        t = "".join(rng.choice("abcde"[:sigma]) for _ in range(rng.randint(0, 300)))
        zs = {}
        for flags in ALL_FLAGS:
            f = lz_factorize(t, flags)
            assert reconstruct(f) == t
            assert sum(p.length for p in f) == len(t)
            zs[flags] = f.z
        best = zs[VariantFlags(True, True)]
        assert all(best <= z for z in zs.values())


@given(st.text(alphabet="abc", max_size=80))
def test_novel_phrases_are_first_occurrences(t):
    f = lz_factorize(t, VariantFlags(True, True))
    for p in f.phrases[:-1]:
        w = t[p.start - 1:p.end]
        assert t.find(w) + 1 == p.start
    # without self-reference only the strictly earlier prefix counts
    f = lz_factorize(t, VariantFlags(False, True))
    for p in f.phrases[:-1]:
        assert t[p.start - 1:p.end] not in t[:p.start - 1]


@given(st.text(alphabet="abc", max_size=80))
def test_novel_matches_definition(t):
    assert lz_factorize(t, VariantFlags(True, True)).contents == naive_lz_novel(t)


@settings(max_examples=150, deadline=None)
@given(st.text(alphabet="ab", min_size=1, max_size=16))
def test_gamma_star_at_most_z(t):
    gamma = min_attractor_exact(t).size
    for flags in ALL_FLAGS:
        assert gamma <= lz_factorize(t, flags).z
