"""Interval transducer: the linear-size machine computed from a word.

A *content-k subword* of ``w`` is a contiguous subword with exactly ``k``
distinct letters.  For each start position there is at most one prefix
maximal such subword (one not extendable to the right without gaining a
letter), and dually for suffix maximal ones; ``rght_k(i)`` and ``lft_k(j)``
record their far endpoints.  These arrays come out of a sliding window with
a letter-multiplicity counter, two O(|w|) passes per level.

States of the interval transducer are position pairs ``(i, j)`` naming such
maximal subwords plus one shared terminal sink; the 0-edge of ``(i, j)``
jumps to the prefix maximal subword at the same start with one letter
fewer, emitting the letter just past it, and the 1-edge dually.  Only the
pairs actually reachable from the whole-word state ``(1, n)`` are
materialized, which caps the state count at ``2*|A|*|w| + 1`` while leaving
the realized function untouched.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .transducer import NO_STATE, Transducer
from .words import Letter, content


def _rght_array(w: Sequence[Letter], k: int, alphabet_size: int) -> list[int]:
    """0-indexed: largest ``j`` with exactly ``k`` distinct letters in
    ``w[i..j]``, or -1 when fewer than ``k`` distinct letters remain."""
    n = len(w)
    out = [-1] * n
    counts = [0] * alphabet_size
    distinct = 0
    j = 0  # window is w[i:j]
    for i in range(n):
        while j < n and (counts[w[j]] > 0 or distinct < k):
            counts[w[j]] += 1
            if counts[w[j]] == 1:
                distinct += 1
            j += 1
        if distinct == k:
            out[i] = j - 1
        counts[w[i]] -= 1
        if counts[w[i]] == 0:
            distinct -= 1
    return out


def _lft_array(w: Sequence[Letter], k: int, alphabet_size: int) -> list[int]:
    """0-indexed mirror of :func:`_rght_array`: smallest ``i`` with exactly
    ``k`` distinct letters in ``w[i..j]``."""
    n = len(w)
    rev = _rght_array(w[::-1], k, alphabet_size)
    out = [-1] * n
    for j in range(n):
        r = rev[n - 1 - j]
        out[j] = -1 if r == -1 else n - 1 - r
    return out


@dataclass(frozen=True)
class MaximalSubwords:
    """Level-``k`` slice of the maximal-subword index, 1-based positions."""

    k: int
    _rght: tuple
    _lft: tuple

    def rght(self, i: int) -> Optional[int]:
        """End of the prefix maximal content-k subword starting at ``i``."""
        r = self._rght[i - 1]
        return None if r == -1 else r + 1

    def lft(self, j: int) -> Optional[int]:
        """Start of the suffix maximal content-k subword ending at ``j``."""
        l = self._lft[j - 1]
        return None if l == -1 else l + 1


def maximal_subwords(w: Sequence[Letter], k: int) -> MaximalSubwords:
    """Compute ``rght_k`` and ``lft_k`` for every position of ``w``."""
    w = tuple(w)
    if not 1 <= k <= len(content(w)):
        raise ValueError(f"k must be between 1 and |content(w)|, got {k}")
    alphabet_size = max(w) + 1
    return MaximalSubwords(
        k,
        tuple(_rght_array(w, k, alphabet_size)),
        tuple(_lft_array(w, k, alphabet_size)),
    )


def interval_transducer(w: Sequence[Letter], alphabet_size: Optional[int] = None) -> Transducer:
    """Build the interval transducer of ``w`` in O(|A| * |w|).

    The initial state names the whole word; the shared sink is the unique
    terminal.  For the empty word the result is a single terminal state.
    """
    w = tuple(w)
    if alphabet_size is None:
        alphabet_size = max(w, default=-1) + 1
    n = len(w)
    if n == 0:
        return Transducer(alphabet_size, 0, [True], [NO_STATE], [NO_STATE], [NO_STATE], [NO_STATE])
    big_k = len(set(w))

    # rght/lft arrays for levels 1 .. big_k - 1 (transition targets only).
    rght = [None] * big_k
    lft = [None] * big_k
    for k in range(1, big_k):
        rght[k] = _rght_array(w, k, alphabet_size)
        lft[k] = _lft_array(w, k, alphabet_size)

    terminal = [False]
    t0_target = [NO_STATE]
    t0_out = [NO_STATE]
    t1_target = [NO_STATE]
    t1_out = [NO_STATE]

    def add_state() -> int:
        terminal.append(False)
        t0_target.append(NO_STATE)
        t0_out.append(NO_STATE)
        t1_target.append(NO_STATE)
        t1_out.append(NO_STATE)
        return len(terminal) - 1

    sink = -1
    ids = {(0, n - 1): 0}
    queue = [(0, n - 1, big_k)]
    head = 0
    while head < len(queue):
        i, j, k = queue[head]
        head += 1
        q = ids[(i, j)]
        if k == 1:
            if sink == -1:
                sink = add_state()
                terminal[sink] = True
            t0_target[q] = sink
            t0_out[q] = w[i]
            t1_target[q] = sink
            t1_out[q] = w[i]
            continue
        j0 = rght[k - 1][i]
        child0 = (i, j0)
        c0 = ids.get(child0)
        if c0 is None:
            c0 = ids[child0] = add_state()
            queue.append((i, j0, k - 1))
        t0_target[q] = c0
        t0_out[q] = w[j0 + 1]
        i1 = lft[k - 1][j]
        child1 = (i1, j)
        c1 = ids.get(child1)
        if c1 is None:
            c1 = ids[child1] = add_state()
            queue.append((i1, j, k - 1))
        t1_target[q] = c1
        t1_out[q] = w[i1 - 1]
    return Transducer(alphabet_size, 0, terminal, t0_target, t0_out, t1_target, t1_out)
