"""Minimization of acyclic transducers, isomorphism, and word equality.

Minimization exploits the uniform-depth structure: two states can only be
equivalent when they sit at the same level, so it suffices to sweep the
levels bottom-up, merging states with identical transition signatures
(hashing gives expected-linear time).  After merging, states are renumbered
in breadth-first order from the initial state (0-edge before 1-edge), so
minimal transducers have a canonical, byte-stable serialized form.

Isomorphism of trim machines is a parallel traversal from the two initial
states matching (input bit, output letter) edge pairs; it is an error to
pass a non-trim transducer rather than a silent trim.

``equal_in_free_band`` composes the pieces: two words are equal in the free
band exactly when the minimized interval transducers of the two words are
isomorphic.  Total cost is O((|u| + |v|) * |A|) time and space.
"""

from __future__ import annotations

from typing import Sequence

from .interval import interval_transducer
from .transducer import (
    NO_STATE,
    Transducer,
    levels,
    reachable_states,
    trim,
    validate,
)
from .words import Letter


def minimize(t: Transducer) -> Transducer:
    """The unique (up to isomorphism) smallest transducer realizing the
    same function as ``t``, trimmed and canonically numbered."""
    err = validate(t)
    if err is not None:
        raise ValueError(f"refusing to minimize an invalid transducer: {err}")
    t = trim(t)
    lv = levels(t)
    n = t.num_states
    max_level = max(lv)
    buckets: list[list[int]] = [[] for _ in range(max_level + 1)]
    for q in range(n):
        buckets[lv[q]].append(q)

    cls = [NO_STATE] * n
    # class table columns, indexed by class id
    c_terminal: list[bool] = []
    c0_target: list[int] = []
    c0_out: list[int] = []
    c1_target: list[int] = []
    c1_out: list[int] = []

    # level 0 is exactly the terminal states; they collapse to one class
    c_terminal.append(True)
    c0_target.append(NO_STATE)
    c0_out.append(NO_STATE)
    c1_target.append(NO_STATE)
    c1_out.append(NO_STATE)
    for q in buckets[0]:
        cls[q] = 0

    for level in range(1, max_level + 1):
        table: dict[tuple[int, int, int, int], int] = {}
        for q in buckets[level]:
            sig = (
                cls[t.t0_target[q]],
                t.t0_out[q],
                cls[t.t1_target[q]],
                t.t1_out[q],
            )
            cid = table.get(sig)
            if cid is None:
                cid = len(c_terminal)
                table[sig] = cid
                c_terminal.append(False)
                c0_target.append(sig[0])
                c0_out.append(sig[1])
                c1_target.append(sig[2])
                c1_out.append(sig[3])
            cls[q] = cid

    return _bfs_renumber(
        t.alphabet_size,
        cls[t.initial],
        c_terminal,
        c0_target,
        c0_out,
        c1_target,
        c1_out,
    )


def _bfs_renumber(alphabet_size, initial, terminal, t0_target, t0_out, t1_target, t1_out):
    """Renumber states breadth-first from the initial state, 0-edge first."""
    n = len(terminal)
    order = [NO_STATE] * n
    order[initial] = 0
    queue = [initial]
    head = 0
    while head < len(queue):
        q = queue[head]
        head += 1
        for target in (t0_target[q], t1_target[q]):
            if target != NO_STATE and order[target] == NO_STATE:
                order[target] = len(queue)
                queue.append(target)
    # every class is reachable from the initial class (built from a trim machine)
    new_terminal = [False] * n
    new_t0_target = [NO_STATE] * n
    new_t0_out = [NO_STATE] * n
    new_t1_target = [NO_STATE] * n
    new_t1_out = [NO_STATE] * n
    for q in range(n):
        nq = order[q]
        new_terminal[nq] = terminal[q]
        if t0_target[q] != NO_STATE:
            new_t0_target[nq] = order[t0_target[q]]
            new_t0_out[nq] = t0_out[q]
        if t1_target[q] != NO_STATE:
            new_t1_target[nq] = order[t1_target[q]]
            new_t1_out[nq] = t1_out[q]
    return Transducer(
        alphabet_size, 0, new_terminal, new_t0_target, new_t0_out, new_t1_target, new_t1_out
    )


def _is_trim(t: Transducer) -> bool:
    if not all(reachable_states(t)):
        return False
    n = t.num_states
    back: list[list[int]] = [[] for _ in range(n)]
    for q in range(n):
        for target in (t.t0_target[q], t.t1_target[q]):
            if target != NO_STATE:
                back[target].append(q)
    co = [False] * n
    stack = [q for q in range(n) if t.terminal[q]]
    for q in stack:
        co[q] = True
    while stack:
        q = stack.pop()
        for p in back[q]:
            if not co[p]:
                co[p] = True
                stack.append(p)
    return all(co)


def isomorphic(t1: Transducer, t2: Transducer) -> bool:
    """Whether two trim transducers differ only by the labelling of states.

    The bijection must preserve the initial state, terminal flags, and both
    transition functions together with their output letters.  Determinism
    plus trimness make a parallel traversal from the two initial states
    sufficient.  Non-trim inputs are rejected.
    """
    for t in (t1, t2):
        if not _is_trim(t):
            raise ValueError("isomorphism requires trim transducers")
    if t1.num_states != t2.num_states:
        return False
    n = t1.num_states
    map12 = [NO_STATE] * n
    map21 = [NO_STATE] * n
    map12[t1.initial] = t2.initial
    map21[t2.initial] = t1.initial
    stack = [(t1.initial, t2.initial)]
    while stack:
        q1, q2 = stack.pop()
        if t1.terminal[q1] != t2.terminal[q2]:
            return False
        for target1, out1, target2, out2 in (
            (t1.t0_target[q1], t1.t0_out[q1], t2.t0_target[q2], t2.t0_out[q2]),
            (t1.t1_target[q1], t1.t1_out[q1], t2.t1_target[q2], t2.t1_out[q2]),
        ):
            if (target1 == NO_STATE) != (target2 == NO_STATE):
                return False
            if target1 == NO_STATE:
                continue
            if out1 != out2:
                return False
            seen1, seen2 = map12[target1], map21[target2]
            if seen1 == NO_STATE and seen2 == NO_STATE:
                map12[target1] = target2
                map21[target2] = target1
                stack.append((target1, target2))
            elif seen1 != target2 or seen2 != target1:
                return False
    return True


def equal_in_free_band(u: Sequence[Letter], v: Sequence[Letter]) -> bool:
    """Whether the words ``u`` and ``v`` represent the same free-band
    element, in O((|u| + |v|) * |A|) time and space."""
    return isomorphic(
        minimize(interval_transducer(u)),
        minimize(interval_transducer(v)),
    )


def equal_transducers(t1: Transducer, t2: Transducer) -> bool:
    """Whether two transducers represent the same free-band element
    (element equality without a word round-trip)."""
    return isomorphic(minimize(t1), minimize(t2))
