import random

import pytest

from freeband import (
    content,
    interval_transducer,
    levels,
    maximal_subwords,
    parse_word,
    realizes,
    to_fbt,
    validate,
)

W = parse_word


def test_maximal_subwords_abac():
    w = W("abac")
    ms2 = maximal_subwords(w, 2)
    assert ms2.rght(1) == 3  # "aba"
    assert ms2.rght(2) == 3  # "ba"
    assert ms2.rght(3) == 4  # "ac"
    assert ms2.rght(4) is None
    assert ms2.lft(4) == 3
    assert ms2.lft(2) == 1
    assert ms2.lft(1) is None
    ms1 = maximal_subwords(w, 1)
    assert [ms1.rght(i) for i in (1, 2, 3, 4)] == [1, 2, 3, 4]
    ms3 = maximal_subwords(w, 3)
    assert ms3.rght(1) == 4
    assert ms3.rght(2) is None


def test_maximal_subwords_runs():
    w = W("aaabba")
    ms1 = maximal_subwords(w, 1)
    assert [ms1.rght(i) for i in range(1, 7)] == [3, 3, 3, 5, 5, 6]
    assert [ms1.lft(i) for i in range(1, 7)] == [1, 1, 1, 4, 4, 6]


def test_maximal_subwords_matches_brute_scan():
    rng = random.Random(21)
    for _ in range(30):
        w = tuple(rng.randrange(4) for _ in range(rng.randint(1, 15)))
        n = len(w)
        for k in range(1, len(content(w)) + 1):
            ms = maximal_subwords(w, k)
            for i in range(1, n + 1):
                best = None
                for j in range(i, n + 1):
                    if len(set(w[i - 1 : j])) == k:
                        best = j
                assert ms.rght(i) == best, (w, k, i)
            for j in range(1, n + 1):
                best = None
                for i in range(j, 0, -1):
                    if len(set(w[i - 1 : j])) == k:
                        best = i
                assert ms.lft(j) == best, (w, k, j)


def test_maximal_subwords_rejects_bad_level():
    with pytest.raises(ValueError):
        maximal_subwords(W("abac"), 0)
    with pytest.raises(ValueError):
        maximal_subwords(W("abac"), 4)


def test_interval_abac():
    t = interval_transducer(W("abac"))
    # reachable part of the maximal-subword state set plus the sink
    assert t.num_states == 7
    assert validate(t) is None
    assert realizes(t, W("abac"))


def test_interval_empty_and_single():
    t = interval_transducer(W(""))
    assert t.num_states == 1 and t.terminal[t.initial]
    t1 = interval_transducer(W("aaa"))
    assert t1.num_states == 2
    assert realizes(t1, W("a"))


def test_interval_realizes_random_words():
    rng = random.Random(5)
    for _ in range(120):
        m = rng.randint(1, 4)
        w = tuple(rng.randrange(m) for _ in range(rng.randint(1, 50)))
        t = interval_transducer(w, m)
        assert validate(t) is None
        assert realizes(t, w)


def test_interval_state_bound():
    rng = random.Random(6)
    for _ in range(200):
        m = rng.randint(1, 6)
        w = tuple(rng.randrange(m) for _ in range(rng.randint(1, 60)))
        t = interval_transducer(w, m)
        assert t.num_states <= 2 * m * len(w) + 1


def test_interval_initial_level_is_content_size():
    rng = random.Random(8)
    for _ in range(40):
        w = tuple(rng.randrange(5) for _ in range(rng.randint(1, 40)))
        t = interval_transducer(w)
        assert levels(t)[t.initial] == len(content(w))


def test_interval_is_deterministic():
    w = W("bcacbcd")
    assert to_fbt(interval_transducer(w)) == to_fbt(interval_transducer(w))
