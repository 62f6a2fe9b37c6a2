"""Short-lex minimal representatives from minimal transducers.

The minimal word of an element decomposes as the minimal word of its
longest-prefix reduction, the two boundary letters, and the minimal word of
its longest-suffix reduction, where prefix and suffix parts overlap in one
of exactly three ways:

* case I  - the two boundary letters coincide and the overlap is that
  single letter;
* case II - the overlap is ``boundary1 . min(middle) . boundary0`` for the
  unique common reduction ``middle`` reached by ``0 1^k`` and ``1 0^k``;
* case III - no overlap at all.

``classify_case`` decides the case in O(|A|) by walking the two reduction
paths in lockstep; state identity stands in for element equality, which is
exactly why the transducer must be minimal.  ``min_word`` then assembles
the word bottom-up over the transducer with a memo table mapping each
visited state to the span of the output buffer spelling its minimal word,
for O(|A|*|Q| + |min|) total time.
"""

from __future__ import annotations

from typing import NamedTuple, Optional, Sequence

from .interval import interval_transducer
from .minimize import minimize
from .transducer import Transducer, levels, validate
from .words import Letter, Word


class OverlapCase(NamedTuple):
    """Classification result: ``case`` is "I", "II" or "III"; ``k`` is the
    overlap depth for case II and the state's level otherwise (returned for
    uniformity, unused downstream)."""

    case: str
    k: int


def classify_case(t: Transducer, q: int, level: Optional[int] = None) -> OverlapCase:
    """Decide which overlap case applies to the element represented by
    state ``q`` of a *minimal* transducer.

    ``level`` may be passed when already known; otherwise it is recovered
    by walking 0-edges down to a terminal.  Terminal states are rejected.
    """
    if t.terminal[q]:
        raise ValueError("classify_case is undefined on terminal states")
    if level is None:
        level = 0
        p = q
        while not t.terminal[p]:
            p = t.t0_target[p]
            level += 1
    if t.t0_out[q] == t.t1_out[q]:
        return OverlapCase("I", level)
    u = t.t0_target[q]
    v = t.t1_target[q]
    for k in range(1, level + 1):
        if (
            t.t1_out[u] == t.t1_out[q]
            and t.t0_out[v] == t.t0_out[q]
            and t.t1_target[u] == t.t0_target[v]
        ):
            return OverlapCase("II", k)
        u = t.t1_target[u]
        v = t.t0_target[v]
        if t.terminal[u] or t.terminal[v]:
            return OverlapCase("III", level)
    raise AssertionError("classification loop ran past the state level")


def is_minimal(t: Transducer) -> bool:
    """Whether ``t`` is already the minimal transducer for its element."""
    if validate(t) is not None:
        return False
    return minimize(t).num_states == t.num_states


def min_word(t: Transducer) -> Word:
    """The short-lex least word representing the element of a minimal
    transducer.

    Minimality is load-bearing (case II detection compares state ids), so
    non-minimal input is rejected; use :func:`normalize` for the one-shot
    word-to-word route.
    """
    err = validate(t)
    if err is not None:
        raise ValueError(f"invalid transducer: {err}")
    if minimize(t).num_states != t.num_states:
        raise ValueError("min_word requires a minimal transducer")
    return _min_word(t)


def _min_word(t: Transducer) -> Word:
    lv = levels(t)
    n = t.num_states
    # memo[q] = 1-based inclusive span of the buffer spelling min(q)
    memo: list[Optional[tuple[int, int]]] = [None] * n
    for q in range(n):
        if t.terminal[q]:
            memo[q] = (0, 0)
    w: list[int] = []
    t0_target = t.t0_target
    t1_target = t.t1_target
    t0_out = t.t0_out
    t1_out = t.t1_out

    def rec(q: int, l: int) -> None:
        s = len(w) - l + 1
        span = memo[q]
        if span is not None:
            i, j = span
            lo = i + l
            if 1 <= lo <= j:
                w.extend(w[lo - 1 : j])
            return
        rec(t0_target[q], l)
        case, k = classify_case(t, q, lv[q])
        if case == "I":
            w.append(t0_out[q])
            lp = 0
        elif case == "II":
            r = t0_target[q]
            for _ in range(k):
                r = t1_target[r]
            bi, bj = memo[r]
            lp = bj - bi + 1 if 1 <= bi <= bj else 0
        else:
            w.append(t0_out[q])
            w.append(t1_out[q])
            lp = 0
        rec(t1_target[q], lp)
        memo[q] = (s, len(w))

    rec(t.initial, 0)
    return tuple(w)


def normalize(w: Sequence[Letter]) -> Word:
    """The short-lex least word equivalent to ``w`` (the canonical form).

    Composition of the interval construction, minimization, and the
    minimal-word extraction; O(|A|*|w| + |A|^2*|min(w)|) overall.
    """
    return _min_word(minimize(interval_transducer(w)))
