"""Enumeration counts, bound checks, and the randomized harness."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dupcode import analysis
from dupcode.core import GuardExceededError, VerificationError

from oracles import naive_leftmost


def _brute_bad_count(q: int, n: int, K: int) -> int:
    def words(m):
        if m == 0:
            yield ()
            return
        for w in words(m - 1):
            for c in range(q):
                yield w + (c,)

    return sum(1 for w in words(n) if naive_leftmost(w, K) is not None)


@pytest.mark.parametrize(
    "q,n,K,expect",
    [
        (2, 3, 1, 6),   # all but 010, 101
        (2, 4, 1, 16),  # every binary word of length 4 has a square
        (2, 6, 4, 0),   # a half-length-4 square needs 8 symbols
    ],
)
def test_count_bad_anchors(q, n, K, expect):
    rep = analysis.count_bad_words(q, n, K)
    assert rep.count == expect
    assert rep.count <= rep.bound
    assert isinstance(rep.bound, Fraction)
    assert rep.bound == Fraction(n * q ** (n + 1), q**K)


@pytest.mark.parametrize("q,n,K", [(2, 7, 2), (3, 5, 1), (2, 9, 3), (4, 4, 1)])
def test_count_bad_matches_recursive_enumeration(q, n, K):
    assert analysis.count_bad_words(q, n, K).count == _brute_bad_count(q, n, K)


def test_count_bad_monotone_in_K():
    counts = [analysis.count_bad_words(2, 10, K).count for K in range(1, 6)]
    assert counts == sorted(counts, reverse=True)


@pytest.mark.parametrize(
    "q,length,K,expect",
    [(2, 3, 1, 2), (2, 4, 1, 0), (2, 4, 3, 16)],
)
def test_enum_code0_anchors(q, length, K, expect):
    rep = analysis.enumerate_code0(q, length, K)
    assert rep.count == expect
    assert rep.count >= rep.bound


def test_enum_code0_words_listed():
    rep = analysis.enumerate_code0(2, 3, 1, want_words=True)
    assert rep.words is not None
    assert sorted(rep.words) == [(0, 1, 0), (1, 0, 1)]
    assert all(naive_leftmost(w, 1) is None for w in rep.words)


@settings(max_examples=25, deadline=None)
@given(q=st.integers(2, 3), n=st.integers(1, 9), K=st.integers(1, 5))
def test_partition_of_word_space(q, n, K):
    bad = analysis.count_bad_words(q, n, K).count
    good = analysis.enumerate_code0(q, n, K).count
    assert bad + good == q**n


def test_space_guard():
    with pytest.raises(GuardExceededError):
        analysis.count_bad_words(2, 27, 5)  # 2**27 over the default cap
    with pytest.raises(GuardExceededError):
        analysis.count_bad_words(2, 5, 1, max_space=16)
    # explicit override admits the same space
    assert analysis.count_bad_words(2, 5, 1, max_space=32).count >= 0
    with pytest.raises(GuardExceededError):
        analysis.enumerate_code0(2, 27, 5)
    with pytest.raises(GuardExceededError):
        analysis.verify_ball_disjointness(2, 27, [1])


def test_ball_disjointness_small():
    rep = analysis.verify_ball_disjointness(2, 6, [1, 2, 3])
    assert not rep.collisions
    assert [e.l for e in rep.entries] == [1, 2, 3]
    # l = 1: eligible words have no 00 or 11 factor
    assert rep.entries[0].eligible_words == 2
    assert rep.entries[0].images == 12
    d = rep.to_dict()
    assert d["disjoint"] is True
    assert all(e["collisions"] == [] for e in d["entries"])


def test_ball_disjointness_degenerate_half_length():
    # l > n/2: every word is trivially free of length-l squares
    rep = analysis.verify_ball_disjointness(2, 5, [4])
    assert rep.entries[0].eligible_words == 32
    assert not rep.collisions


def test_ball_disjointness_validates():
    with pytest.raises(ValueError):
        analysis.verify_ball_disjointness(2, 6, [0])
    with pytest.raises(ValueError):
        analysis.verify_ball_disjointness(1, 6, [1])


def test_roundtrip_suite_small():
    rep = analysis.roundtrip_suite(16, 16, trials=12, seed=9)
    assert rep.corruptions_checked == 36
    assert rep.encode_ms["p50"] >= 0.0
    d = rep.to_dict()
    assert d["trials"] == 12 and d["sweep"] is False


def test_roundtrip_suite_sweep_counts_every_pair():
    n, K = 16, 5
    pairs = sum(n + 2 - l for l in range(K, n + 2))
    rep = analysis.roundtrip_suite(16, n, trials=2, seed=1, sweep=True)
    assert rep.corruptions_checked == 2 * pairs


def test_roundtrip_suite_empty():
    rep = analysis.roundtrip_suite(16, 16, trials=0, seed=0)
    assert rep.corruptions_checked == 0
    assert rep.encode_ms == {"p50": 0.0, "p90": 0.0, "max": 0.0}


def test_roundtrip_detects_a_broken_codec(monkeypatch):
    from dupcode import codec

    monkeypatch.setattr(codec, "decode", lambda y, p: (0,) * p.n)
    with pytest.raises(VerificationError):
        analysis.roundtrip_suite(16, 16, trials=3, seed=5)


@pytest.mark.parametrize(
    "q,n,c,eta,exceeds",
    [(2, 1024, 3, 2, True), (2, 1024, 1, 0, False), (4, 256, 4, 3, True)],
)
def test_converse_anchors(q, n, c, eta, exceeds):
    rep = analysis.converse_gap(q, n, c)
    assert rep.eta_lower_bound == pytest.approx(eta)
    assert rep.exceeds_one is exceeds


def test_converse_validates():
    with pytest.raises(ValueError):
        analysis.converse_gap(2, 1024, 0)
    with pytest.raises(ValueError):
        analysis.converse_gap(1, 1024, 2)
