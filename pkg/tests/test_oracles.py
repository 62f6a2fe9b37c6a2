import random
from itertools import product

import pytest

from freeband import (
    BudgetExceeded,
    brute_k,
    brute_min_word,
    content,
    green_rees_equal,
    parse_word,
)

W = parse_word


def test_green_rees_examples():
    assert green_rees_equal(W("abab"), W("ab"))
    assert not green_rees_equal(W("aba"), W("ab"))
    assert green_rees_equal(W("aa"), W("a"))
    assert green_rees_equal(W(""), W(""))
    assert not green_rees_equal(W(""), W("a"))


def test_green_rees_is_equivalence_and_congruence():
    rng = random.Random(0xFB)
    pool = [tuple(rng.randrange(3) for _ in range(rng.randint(0, 8))) for _ in range(40)]
    for u in pool[:12]:
        assert green_rees_equal(u, u)
    for _ in range(150):
        u, v, w = rng.choice(pool), rng.choice(pool), rng.choice(pool)
        assert green_rees_equal(u, v) == green_rees_equal(v, u)
        if green_rees_equal(u, v) and green_rees_equal(v, w):
            assert green_rees_equal(u, w)
        if green_rees_equal(u, v):
            assert green_rees_equal(u + w, v + w)
            assert green_rees_equal(w + u, w + v)


def test_brute_min_word_examples():
    assert brute_min_word(W("abab")) == W("ab")
    assert brute_min_word(W("aba")) == W("aba")
    assert brute_min_word(W("")) == W("")


def test_brute_min_word_properties():
    rng = random.Random(7)
    for _ in range(60):
        w = tuple(rng.randrange(3) for _ in range(rng.randint(1, 7)))
        m = brute_min_word(w)
        assert green_rees_equal(m, w)
        assert content(m) == content(w)
        assert brute_min_word(m) == m
        assert len(m) <= len(w)


def test_brute_min_word_budget():
    with pytest.raises(BudgetExceeded):
        brute_min_word(tuple(range(5)))
    with pytest.raises(BudgetExceeded):
        brute_min_word(W("abab"), max_candidates=1)


EAEC = W("eaec")
BCACBCD = W("bcacbcd")


def test_brute_k_examples():
    assert brute_k(EAEC, BCACBCD, 0, 0, 1) == 3
    assert brute_k(EAEC, BCACBCD, 1, 0, 0) == 2
    for i in range(4):
        assert brute_k(EAEC, BCACBCD, 0, i, 4) is None


def test_brute_k_rejects_bad_side():
    with pytest.raises(ValueError):
        brute_k(EAEC, BCACBCD, 2, 0, 0)


def test_brute_k_matches_direct_scan_definition():
    # independent re-derivation: scan exponents on plain words
    from freeband import ast, circ

    rng = random.Random(3)
    for _ in range(40):
        m = rng.randint(1, 4)
        x = tuple(rng.randrange(m) for _ in range(rng.randint(1, 10)))
        y = tuple(rng.randrange(m) for _ in range(rng.randint(1, 10)))
        for i, j in product(range(len(content(x)) + 1), range(len(content(y)) + 1)):
            expect = None
            for k in range(1, len(content(y)) + 1):
                letter = ast(y, (0,) * (j + k))
                if letter is None:
                    break
                if letter not in content(circ(x, (1,) * i)):
                    expect = k
                    break
            assert brute_k(x, y, 0, i, j) == expect
