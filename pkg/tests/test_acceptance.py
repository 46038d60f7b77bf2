"""Acceptance criteria, one test each; the conftest prints a pass/fail line per criterion."""
import itertools
import random
import time

from attractorlab import experiments as ex
from attractorlab import words as W
from attractorlab.attractor import (
    AttractorSet,
    equidistant_attractor,
    first_gap,
    is_attractor,
    min_attractor_exact,
    verify,
)
from attractorlab.lazy import lazy_lz_equivalence, lazy_run
from attractorlab.lz import VariantFlags, lz_factorize

from oracles import brute_min_attractor, brute_verify

VARIANT_TEXT = "aaabbabaabaaabab"
VARIANT_PHRASES = {
    (True, True): ("a|aab|ba|baa|baaa|bab", 5),
    (True, False): ("a|aa|b|b|ab|aab|aaab|ab", 7),
    (False, True): ("a|aa|b|ba|baa|baaa|bab", 6),
    (False, False): ("a|a|a|b|b|ab|aab|aaab|ab", 8),
}
EXAMPLE = "abaabaaabbcaabbb"


def test_criterion_01_lz_variants():
    """LZ variants on aaabbabaabaaabab match the published phrases, sizes 5/7/6/8, under 1 s"""
    start = time.perf_counter()
    for (self_ref, novel), (phrases, z) in VARIANT_PHRASES.items():
        f = lz_factorize(VARIANT_TEXT, VariantFlags(self_ref, novel))
        assert str(f) == phrases, (self_ref, novel, str(f))
        assert f.z == z
    assert time.perf_counter() - start < 1.0


def _family_texts():
    for m in range(3, 25):
        yield f"fib:{m}", W.fibonacci_word(m)
    for m in range(3, 17):
        yield f"tm:{m}", W.thue_morse_word(m)
    directive = [1, 2, 1, 3, 1, 2, 2, 1, 3, 1, 1, 2, 1, 2, 1, 1, 2, 1]
    m = 1
    while len(W.sturmian_word(directive, m)) <= 120_000:
        yield f"sturmian:{m}", W.sturmian_word(directive, m)
        m += 1
    for k, sigma in [(3, 2), (5, 3), (16, 2), (10, 3), (8, 4), (7, 5)]:
        for unfolding in ("back", "front"):
            yield f"debruijn:{k}:{sigma}:{unfolding}", W.de_bruijn(k, sigma, unfolding)


def test_criterion_02_lazy_lz_equivalence():
    """Lazy markings equal novel LZ phrase ends on four families (n up to ~1e5) and 10,000 random texts"""
    mismatches = []
    largest = 0
    for name, t in _family_texts():
        largest = max(largest, len(t))
        r = lazy_lz_equivalence(t)
        if not r:
            mismatches.append((name, r.diagnostic()))
    assert largest >= 100_000
    rep = ex.experiment_equivalence(10_000, seed=2024, max_n=300, sigmas=(2, 3, 4, 5))
    assert mismatches == []
    assert rep.summary["mismatches"] == 0, rep.rows[:3]


def test_criterion_03_fibonacci_costs():
    """Lazy on F_m costs m with markings {1,2} and f_j - 1 for 3 <= m <= 24, under 10 s"""
    start = time.perf_counter()
    for m in range(3, 25):
        tr = lazy_run(W.fibonacci_word(m))
        assert tr.cost == m
        assert tr.markings == (1, 2) + tuple(W.fibonacci_number(j) - 1 for j in range(3, m + 1))
    assert time.perf_counter() - start < 10.0


def test_criterion_04_thue_morse_costs():
    """Lazy on G_m costs 2m - 2 for 3 <= m <= 16, under 10 s"""
    start = time.perf_counter()
    for m in range(3, 17):
        assert lazy_run(W.thue_morse_word(m)).cost == 2 * m - 2, m
    assert time.perf_counter() - start < 10.0


def test_criterion_05_exact_optima():
    """Solver: 2 on F_2..F_8, 4 on G_4, 3 on the k=3 example, agrees with exhaustive search on binary n <= 12"""
    for m in range(2, 9):
        assert min_attractor_exact(W.fibonacci_word(m)).size == 2
    g4 = W.thue_morse_word(4)
    res = min_attractor_exact(g4)
    assert res.size == 4 and verify(g4, res.attractor).valid
    res = min_attractor_exact(EXAMPLE, 3)
    assert res.size == 3 and verify(EXAMPLE, res.attractor).valid
    assert is_attractor(EXAMPLE, (6, 11, 14), 3)
    disagreements = []
    for n in range(1, 13):
        for tup in itertools.product("ab", repeat=n):
            t = "".join(tup)
            if min_attractor_exact(t).size != brute_min_attractor(t):
                disagreements.append(t)
    assert disagreements == []


def test_criterion_06_verifier_oracle():
    """Verifier agrees with brute force on 50,000 random (text, positions, k, sharp) cases, n <= 30"""
    rng = random.Random(6)
    disagreements = []
    for _ in range(50_000):
        n = rng.randint(0, 30)
        sigma = rng.randint(1, 4)
        t = "".join(rng.choice("abcd"[:sigma]) for _ in range(n))
        # small sets make invalid cases common, large ones valid cases
        size = rng.choice([rng.randint(0, min(n, 4)), rng.randint(0, n)])
        positions = set(rng.sample(range(1, n + 1), size))
        k = rng.choice([None] + list(range(1, n + 1))) if n else None
        sharp = k is not None and rng.random() < 0.5
        r = verify(t, AttractorSet(tuple(positions), k, sharp))
        valid, witness = brute_verify(t, positions, k, sharp)
        if (r.valid, r.witness) != (valid, witness):
            disagreements.append((t, sorted(positions), k, sharp))
    assert disagreements == []


def test_criterion_07_spoon_feeding():
    """Lazy on SF(k) pays at least s^k - s^(k-1); sff lengths; |SF(3)| is 26 at s=2 and deviates by k*s*(s-2)"""
    for k, sigmas in [(3, (2, 3, 4, 5)), (4, (2, 3))]:
        for sigma in sigmas:
            cost = lazy_run(W.spoon_feed(k, sigma), k).cost
            assert cost >= sigma**k - sigma ** (k - 1), (k, sigma, cost)
    for k in range(3, 6):
        for sigma in range(2, 6):
            for l in range(3, k + 1):
                assert len(W.sff(l, k, sigma)) == (2 * k + l - 2) * sigma ** (l - 2) * (sigma - 1) ** 2
    assert len(W.spoon_feed(3, 2)) == W.spoon_feed_length_closed_form(3, 2) == 26
    for k in (3, 4):
        for sigma in range(3, 7):
            measured = len(W.spoon_feed(k, sigma))
            assert measured - W.spoon_feed_length_closed_form(k, sigma) == k * sigma * (sigma - 2)


def test_criterion_08_de_bruijn():
    """de Bruijn lengths and unique k-substrings; equidistant sharp validity; 'ba' counterexample; prime cases"""
    for k in range(1, 5):
        for sigma in range(2, 5):
            for unfolding in ("back", "front"):
                db = W.de_bruijn(k, sigma, unfolding)
                assert len(db) == sigma**k + k - 1
                grams = [db[i:i + k] for i in range(len(db) - k + 1)]
                assert len(set(grams)) == len(grams) == sigma**k
                for phase in range(1, k + 1):
                    assert verify(db, equidistant_attractor(db, k, phase, sharp=True)).valid
    db = W.de_bruijn(3, "abc", "back")
    r = verify(db, equidistant_attractor(db, 3, 3))
    assert not r.valid and r.witness == "ba"
    for p, sigma in [(3, 2), (3, 3), (5, 2)]:
        front = W.de_bruijn(p, sigma, "front")
        assert verify(front, equidistant_attractor(front, p, p)).valid, (p, sigma)


def test_criterion_09_lower_bound_convergence():
    """k=3 lower-bound ratio is non-decreasing over s = 3..8, at least 2.0 at s = 8, no Lazy marks in T2"""
    plain = ex.experiment_lowerbound(3, range(3, 9))
    sharp = ex.experiment_lowerbound(3, range(3, 9), sharp=True)
    for rep in (plain, sharp):
        ratios = [r["ratio"] for r in rep.rows]
        assert ratios == sorted(ratios), ratios
        assert all(r < 3 for r in ratios)
        assert all(r["lazy_marks_in_t2"] == 0 for r in rep.rows)
        assert all(r["verified"] for r in rep.rows)
    assert plain.rows[-1]["sigma"] == 8 and plain.rows[-1]["ratio"] >= 2.0


def test_criterion_10_property_suites():
    """Gap lemma, kernel words, palindromic prefixes, Thue-Morse shift, gamma* <= z, Lazy <= k * gamma*_k"""
    rng = random.Random(10)
    # gap lemma
    for _ in range(2000):
        t = "".join(rng.choice("abc") for _ in range(rng.randint(1, 60)))
        k = rng.randint(2, 6)
        marks = lazy_run(t, k).markings
        if first_gap(marks, len(t), k) is None:
            assert lazy_run(t, k - 1).markings == marks
    # kernel words
    for m in range(1, 20):
        assert W.kernel_word(m) == W.kernel_word(m)[::-1]
    for m in range(2, 16):
        f, kw = W.fibonacci_word(m), W.kernel_word(m - 2)
        assert f.count(kw) == 1 and f.find(kw, f.find(kw) + 1) == -1
    # palindromic prefixes of F_m and the marking right after the largest one
    for m in range(3, 21):
        f = W.fibonacci_word(m)
        n = len(f)
        assert max(W.palindromic_prefix_positions(f[:-1])) == n - 2
        assert lazy_run(f).markings[-1] == n - 1
    # Thue-Morse first-occurrence shift
    g = W.thue_morse_word(10)
    first = {}
    for l in range(2, 9):
        for i in range(len(g) - l + 1):
            first.setdefault(g[i:i + l], i + 1)
    for w, x in first.items():
        if len(set(w)) == 1:
            continue
        image = W.apply_morphism(W.THUE_MORSE_MORPHISM, w, 1)
        if 2 * x - 2 + len(image) <= len(g):
            assert g.find(image) + 1 == 2 * x - 1, w
    # gamma* <= z and Lazy <= k * gamma*_k
    for _ in range(300):
        t = "".join(rng.choice("abc"[:rng.randint(2, 3)]) for _ in range(rng.randint(1, 16)))
        gamma = min_attractor_exact(t).size
        assert all(gamma <= lz_factorize(t, VariantFlags(s, v)).z for s in (True, False) for v in (True, False))
    for _ in range(300):
        t = "".join(rng.choice("abc") for _ in range(rng.randint(1, 24)))
        k = rng.randint(1, 5)
        opt_k = min_attractor_exact(t, k).size
        assert opt_k <= lazy_run(t, k).cost <= k * opt_k
