"""Slow, obviously-correct reference implementations used for testing.

Everything in this module favours transparency over speed: the equality
check is the textbook recursion on prefix/suffix reductions, the minimal
word is found by exhaustive short-lex enumeration, and the escape-exponent
tables are scanned straight from their definition.  Production code lives
elsewhere; these exist so the fast paths have something independent to be
compared against.
"""

from __future__ import annotations

from itertools import product
from typing import Optional, Sequence

from .words import Letter, Word, circ, content, reduce_span


class BudgetExceeded(RuntimeError):
    """An exhaustive search outgrew its configured budget."""


def green_rees_equal(u: Sequence[Letter], v: Sequence[Letter]) -> bool:
    """Whether ``u`` and ``v`` represent the same free-band element.

    Direct recursion: equal contents, equal boundary letters on both sides,
    and recursively equivalent longest-prefix/suffix reductions; both-empty
    is the base case.  Subword spans are memoized per call, which tames the
    exponential blowup without touching correctness.
    """
    u = tuple(u)
    v = tuple(v)
    memo: dict[tuple[int, int, int, int], bool] = {}

    def eq(ulo: int, uhi: int, vlo: int, vhi: int) -> bool:
        if ulo >= uhi and vlo >= vhi:
            return True
        if ulo >= uhi or vlo >= vhi:
            return False
        key = (ulo, uhi, vlo, vhi)
        cached = memo.get(key)
        if cached is not None:
            return cached
        result = set(u[ulo:uhi]) == set(v[vlo:vhi])
        if result:
            for bit in (0, 1):
                us = reduce_span(u, ulo, uhi, bit)
                vs = reduce_span(v, vlo, vhi, bit)
                if us[2] != vs[2] or not eq(us[0], us[1], vs[0], vs[1]):
                    result = False
                    break
        memo[key] = result
        return result

    return eq(0, len(u), 0, len(v))


def brute_min_word(
    w: Sequence[Letter],
    max_content: int = 4,
    max_candidates: int = 2_000_000,
) -> Word:
    """The short-lex least word equivalent to ``w``, by exhaustive search.

    Candidates run over ``content(w)`` in short-lex order; the answer is
    never longer than ``w`` itself, so the enumeration always terminates.
    Rejects inputs whose search space exceeds the budget.
    """
    w = tuple(w)
    letters = sorted(content(w))
    if not letters:
        return ()
    if len(letters) > max_content:
        raise BudgetExceeded(
            f"brute_min_word limited to {max_content} distinct letters, got {len(letters)}"
        )
    tried = 0
    for length in range(1, len(w) + 1):
        for candidate in product(letters, repeat=length):
            tried += 1
            if tried > max_candidates:
                raise BudgetExceeded(f"brute_min_word exceeded {max_candidates} candidates")
            if green_rees_equal(candidate, w):
                return candidate
    raise AssertionError("unreachable: w is equivalent to itself")


def brute_k(
    x: Sequence[Letter],
    y: Sequence[Letter],
    side: int,
    i: int,
    j: int,
) -> Optional[int]:
    """Escape exponent for the product construction, straight from the
    definition.

    For ``side == 0``: the least ``k >= 1`` such that ``ast(y, "0" * (j+k))``
    is defined and lies outside ``content(circ(x, "1" * i))``; ``side == 1``
    swaps the roles (1-spine of ``x`` against the content of
    ``circ(y, "0" * j)``).  ``None`` when no such ``k`` exists.
    """
    if side not in (0, 1):
        raise ValueError(f"side must be 0 or 1, got {side!r}")
    x = tuple(x)
    y = tuple(y)
    if side == 0:
        stay = circ(x, (1,) * i)
        spine, start = y, j
        spine_bit = 0
    else:
        stay = circ(y, (0,) * j)
        spine, start = x, i
        spine_bit = 1
    if stay is None:
        return None
    avoid = content(stay)
    k = 0
    lo, hi = 0, len(spine)
    # advance to the start of the remaining spine
    for _ in range(start):
        step = reduce_span(spine, lo, hi, spine_bit)
        if step is None:
            return None
        lo, hi, _ = step
    while True:
        step = reduce_span(spine, lo, hi, spine_bit)
        if step is None:
            return None
        lo, hi, letter = step
        k += 1
        if letter not in avoid:
            return k
