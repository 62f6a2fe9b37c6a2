import random
from itertools import product

import pytest

from freeband import (
    equal_in_free_band,
    equal_transducers,
    green_rees_equal,
    interval_transducer,
    isomorphic,
    minimize,
    normalize,
    parse_word,
    realizes,
    to_fbt,
    treelike,
    trim,
    validate,
)
from freeband.transducer import Transducer, NO_STATE

W = parse_word


def test_minimize_reference_state_counts():
    assert minimize(interval_transducer(W("eaec"))).num_states == 6
    assert minimize(interval_transducer(W("bcacbcd"))).num_states == 10


def test_minimize_idempotent_and_canonical():
    for text in ("a", "abac", "eaec", "bcacbcd", "ababdbddcccb"):
        m = minimize(interval_transducer(W(text)))
        again = minimize(m)
        assert isomorphic(again, m)
        # canonical numbering makes the serialized form byte-stable
        assert to_fbt(again) == to_fbt(m)


def test_minimize_preserves_realized_function():
    rng = random.Random(17)
    for _ in range(80):
        m = rng.randint(1, 4)
        w = tuple(rng.randrange(m) for _ in range(rng.randint(0, 40)))
        t = minimize(interval_transducer(w, m))
        assert validate(t) is None
        assert realizes(t, w)


def test_minimize_rejects_invalid():
    from freeband import TransducerBuilder

    builder = TransducerBuilder(1)
    a = builder.add_state()
    builder.set_transition(a, 0, a, 0)
    builder.set_transition(a, 1, a, 0)
    with pytest.raises(ValueError):
        minimize(builder.build(a))


def test_minimize_never_exceeds_size_bound():
    rng = random.Random(23)
    for _ in range(300):
        m = rng.randint(1, 6)
        w = tuple(rng.randrange(m) for _ in range(rng.randint(1, 60)))
        t = minimize(interval_transducer(w, m))
        assert t.num_states <= 2 * len(normalize(w)) * m + 1


def test_isomorphic_examples():
    t = minimize(interval_transducer(W("abac")))
    assert isomorphic(t, t)
    assert isomorphic(minimize(treelike(W("abac"))), minimize(interval_transducer(W("abac"))))
    assert not isomorphic(minimize(interval_transducer(W("ab"))), minimize(interval_transducer(W("ba"))))


def test_isomorphic_rejects_non_trim():
    t = treelike(W("ab"))
    junk = Transducer(
        t.alphabet_size,
        t.initial,
        list(t.terminal) + [False],
        list(t.t0_target) + [NO_STATE],
        list(t.t0_out) + [NO_STATE],
        list(t.t1_target) + [NO_STATE],
        list(t.t1_out) + [NO_STATE],
    )
    with pytest.raises(ValueError):
        isomorphic(junk, trim(junk))


def test_equal_in_free_band_examples():
    assert equal_in_free_band(W("abab"), W("ab"))
    assert not equal_in_free_band(W("ab"), W("ba"))
    assert equal_in_free_band(W(""), W(""))
    assert not equal_in_free_band(W(""), W("a"))


def test_equal_in_free_band_matches_oracle_exhaustively():
    words = [w for L in range(0, 5) for w in product(range(2), repeat=L)]
    for u in words:
        for v in words:
            assert equal_in_free_band(u, v) == green_rees_equal(u, v), (u, v)


def test_equal_in_free_band_is_congruence_on_samples():
    rng = random.Random(29)
    pool = [tuple(rng.randrange(3) for _ in range(rng.randint(0, 10))) for _ in range(30)]
    for _ in range(120):
        u, v, w = rng.choice(pool), rng.choice(pool), rng.choice(pool)
        assert equal_in_free_band(u, v) == equal_in_free_band(v, u)
        if equal_in_free_band(u, v):
            assert equal_in_free_band(u + w, v + w)
            assert equal_in_free_band(w + u, w + v)


def test_equal_transducers():
    assert equal_transducers(interval_transducer(W("abac")), treelike(W("abac")))
    t = interval_transducer(W("bcacbcd"))
    assert equal_transducers(t, t)
    assert not equal_transducers(interval_transducer(W("a")), interval_transducer(W("b")))
