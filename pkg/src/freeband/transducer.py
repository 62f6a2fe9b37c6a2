"""Deterministic synchronous acyclic transducers with binary input.

The input alphabet is hard-coded to {0, 1} and every transition emits
exactly one output letter.  A transducer is stored as flat parallel lists
(two inline transition slots per state, ``-1`` for "undefined"), which keeps
traversal cache-friendly and serialization trivial.

The machines built by this package are uniform-depth: every maximal path
from a state has the same length (the state's *level*), terminal states sit
at level 0 with no outgoing transitions, and reachable non-terminal states
carry both transitions.  :func:`validate` checks those invariants plus
acyclicity; exotic machines violating them are rejected rather than
second-guessed.

Transducers are immutable by convention after construction; use
:class:`TransducerBuilder` (or build the lists directly) while assembling
one, and never mutate a transducer that has been handed out.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .oracles import BudgetExceeded
from .words import (
    WORD_CHARS,
    Letter,
    Word,
    as_bits,
    content,
    f_eval,
    reduce_span,
)

#: Sentinel state id / output for an undefined transition slot.
NO_STATE = -1


class Transducer:
    """Immutable deterministic synchronous transducer over input bits."""

    __slots__ = (
        "alphabet_size",
        "initial",
        "terminal",
        "t0_target",
        "t0_out",
        "t1_target",
        "t1_out",
        "_levels",
        "_validated",
    )

    def __init__(
        self,
        alphabet_size: int,
        initial: int,
        terminal: list[bool],
        t0_target: list[int],
        t0_out: list[int],
        t1_target: list[int],
        t1_out: list[int],
    ):
        n = len(terminal)
        if not (len(t0_target) == len(t0_out) == len(t1_target) == len(t1_out) == n):
            raise ValueError("state table columns have mismatched lengths")
        if not 0 <= initial < n:
            raise ValueError(f"initial state {initial} out of range for {n} states")
        self.alphabet_size = alphabet_size
        self.initial = initial
        self.terminal = terminal
        self.t0_target = t0_target
        self.t0_out = t0_out
        self.t1_target = t1_target
        self.t1_out = t1_out
        self._levels: Optional[list[int]] = None
        self._validated: Optional[tuple] = None  # 1-tuple holding validate()'s verdict

    @property
    def num_states(self) -> int:
        return len(self.terminal)

    def transition(self, q: int, bit: int):
        """``(target, output)`` for one input bit, or ``None`` if undefined."""
        if bit == 0:
            target = self.t0_target[q]
            return None if target == NO_STATE else (target, self.t0_out[q])
        target = self.t1_target[q]
        return None if target == NO_STATE else (target, self.t1_out[q])

    def copy(self) -> "Transducer":
        dup = Transducer(
            self.alphabet_size,
            self.initial,
            list(self.terminal),
            list(self.t0_target),
            list(self.t0_out),
            list(self.t1_target),
            list(self.t1_out),
        )
        dup._levels = self._levels
        dup._validated = self._validated
        return dup

    def __repr__(self):
        return (
            f"<Transducer states={self.num_states} initial={self.initial} "
            f"alphabet={self.alphabet_size}>"
        )


class TransducerBuilder:
    """Single-owner accumulator for hand-assembling a transducer."""

    def __init__(self, alphabet_size: int):
        self.alphabet_size = alphabet_size
        self.terminal: list[bool] = []
        self.t0_target: list[int] = []
        self.t0_out: list[int] = []
        self.t1_target: list[int] = []
        self.t1_out: list[int] = []

    def add_state(self, terminal: bool = False) -> int:
        self.terminal.append(terminal)
        self.t0_target.append(NO_STATE)
        self.t0_out.append(NO_STATE)
        self.t1_target.append(NO_STATE)
        self.t1_out.append(NO_STATE)
        return len(self.terminal) - 1

    def set_transition(self, q: int, bit: int, target: int, out: Letter) -> None:
        if bit == 0:
            self.t0_target[q] = target
            self.t0_out[q] = out
        else:
            self.t1_target[q] = target
            self.t1_out[q] = out

    def build(self, initial: int) -> Transducer:
        return Transducer(
            self.alphabet_size,
            initial,
            self.terminal,
            self.t0_target,
            self.t0_out,
            self.t1_target,
            self.t1_out,
        )


def step(t: Transducer, q: int, bits: str | Iterable[int]) -> Optional[int]:
    """The state reached from ``q`` along ``bits``; ``step(t, q, "") == q``.

    ``None`` as soon as any transition on the path is undefined.
    """
    for b in as_bits(bits):
        tr = t.transition(q, b)
        if tr is None:
            return None
        q = tr[0]
    return q


def output(t: Transducer, q: int, bits: str | Iterable[int]) -> Optional[Word]:
    """Concatenated output letters along ``bits`` from ``q``.

    Undefined (``None``) for empty ``bits`` and whenever the path leaves
    the domain.
    """
    bs = as_bits(bits)
    if not bs:
        return None
    out = []
    for b in bs:
        tr = t.transition(q, b)
        if tr is None:
            return None
        q, letter = tr
        out.append(letter)
    return tuple(out)


def _compute_levels(t: Transducer):
    """``(levels, None)`` or ``(None, violation)``.

    A state's level is the common length of all maximal paths out of it;
    detects cycles and sibling-subtree depth mismatches on the way.
    """
    n = t.num_states
    levels = [-2] * n  # -2 unvisited, -1 in progress
    for root in range(n):
        if levels[root] != -2:
            continue
        stack = [root]
        while stack:
            q = stack[-1]
            if levels[q] == -2:
                levels[q] = -1
            child_levels = []
            pushed = False
            for target in (t.t0_target[q], t.t1_target[q]):
                if target == NO_STATE:
                    continue
                if levels[target] == -1:
                    return None, f"cycle through state {target}"
                if levels[target] == -2:
                    stack.append(target)
                    pushed = True
                else:
                    child_levels.append(levels[target])
            if pushed:
                continue
            stack.pop()
            if not child_levels:
                levels[q] = 0
            elif len(child_levels) == 2 and child_levels[0] != child_levels[1]:
                return None, (
                    f"state {q} has subtrees of unequal depth "
                    f"({child_levels[0]} vs {child_levels[1]})"
                )
            else:
                levels[q] = child_levels[0] + 1
    return levels, None


def levels(t: Transducer) -> list[int]:
    """Per-state levels, cached on the transducer.  Raises on malformed
    machines; call :func:`validate` first if the input is untrusted."""
    if t._levels is None:
        result, err = _compute_levels(t)
        if err is not None:
            raise ValueError(f"cannot compute levels: {err}")
        t._levels = result
    return t._levels


def reachable_states(t: Transducer) -> list[bool]:
    seen = [False] * t.num_states
    seen[t.initial] = True
    stack = [t.initial]
    while stack:
        q = stack.pop()
        for target in (t.t0_target[q], t.t1_target[q]):
            if target != NO_STATE and not seen[target]:
                seen[target] = True
                stack.append(target)
    return seen


def validate(t: Transducer) -> Optional[str]:
    """Check the structural invariants; ``None`` if fine, else the first
    violation found as a human-readable string.

    Checked, in order: paired definedness of the two transition columns,
    acyclicity and uniform depth, terminals having no outgoing transitions,
    and reachable non-terminal states carrying both transitions.  The
    verdict is cached on the (immutable) transducer.
    """
    if t._validated is not None:
        return t._validated[0]
    verdict = _validate(t)
    t._validated = (verdict,)
    return verdict


def _validate(t: Transducer) -> Optional[str]:
    n = t.num_states
    for q in range(n):
        if (t.t0_target[q] == NO_STATE) != (t.t0_out[q] == NO_STATE):
            return f"state {q}: 0-transition target and output definedness disagree"
        if (t.t1_target[q] == NO_STATE) != (t.t1_out[q] == NO_STATE):
            return f"state {q}: 1-transition target and output definedness disagree"
        for target in (t.t0_target[q], t.t1_target[q]):
            if target != NO_STATE and not 0 <= target < n:
                return f"state {q}: transition target {target} out of range"
    _, err = _compute_levels(t)
    if err is not None:
        return err
    reachable = reachable_states(t)
    for q in range(n):
        has0 = t.t0_target[q] != NO_STATE
        has1 = t.t1_target[q] != NO_STATE
        if t.terminal[q] and (has0 or has1):
            return f"terminal state {q} has outgoing transitions"
        if reachable[q] and not t.terminal[q] and not (has0 and has1):
            return f"reachable non-terminal state {q} lacks a transition"
    if not any(t.terminal):
        return "no terminal states"
    return None


def trim(t: Transducer) -> Transducer:
    """Restrict to states that are reachable from the initial state and
    co-reachable to a terminal, compacting state ids (original order kept).

    The realized function is unchanged.  Raises if nothing useful is left,
    i.e. no terminal is reachable from the initial state.
    """
    n = t.num_states
    reachable = reachable_states(t)
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
    keep = [q for q in range(n) if reachable[q] and co[q]]
    if not keep or not (reachable[t.initial] and co[t.initial]):
        raise ValueError("no terminal state is reachable from the initial state")
    new_id = {old: new for new, old in enumerate(keep)}

    def remap(target: int) -> int:
        if target == NO_STATE or target not in new_id:
            return NO_STATE
        return new_id[target]

    return Transducer(
        t.alphabet_size,
        new_id[t.initial],
        [t.terminal[q] for q in keep],
        [remap(t.t0_target[q]) for q in keep],
        [t.t0_out[q] if remap(t.t0_target[q]) != NO_STATE else NO_STATE for q in keep],
        [remap(t.t1_target[q]) for q in keep],
        [t.t1_out[q] if remap(t.t1_target[q]) != NO_STATE else NO_STATE for q in keep],
    )


def treelike(w: Sequence[Letter], alphabet_size: Optional[int] = None) -> Transducer:
    """The complete-binary-tree transducer for a word.

    States are all bitstrings of length at most ``k = |content(w)|`` (so
    ``2**(k+1) - 1`` states), the empty string is initial, length-``k``
    strings are terminal, and the edge out of state ``s`` on bit ``b``
    outputs the boundary letter of the reduction path ``s + b``.
    """
    w = tuple(w)
    if alphabet_size is None:
        alphabet_size = max(w, default=-1) + 1
    k = len(set(w))
    builder = TransducerBuilder(alphabet_size)
    root = builder.add_state(terminal=(k == 0))
    # queue of (state id, span of the word this state reduces to)
    queue = [(root, 0, len(w))]
    depth_left = {root: k}
    for q, lo, hi in queue:
        if depth_left[q] == 0:
            continue
        for bit in (0, 1):
            nlo, nhi, letter = reduce_span(w, lo, hi, bit)
            child = builder.add_state(terminal=(depth_left[q] == 1))
            depth_left[child] = depth_left[q] - 1
            builder.set_transition(q, bit, child, letter)
            queue.append((child, nlo, nhi))
    return builder.build(root)


def realizes(t: Transducer, w: Sequence[Letter], budget: int = 16) -> bool:
    """Whether ``t`` computes exactly the reduction-path function of ``w``.

    Checks every full-length bitstring: the path must be defined, end in a
    terminal state, and output ``f_eval(w, bits)``; the initial level must
    equal ``|content(w)|``.  Exponential in the content size, hence the
    budget guard.
    """
    w = tuple(w)
    k = len(content(w))
    if k > budget:
        raise BudgetExceeded(f"realizes() budget is content size {budget}, got {k}")
    if levels(t)[t.initial] != k:
        return False
    if k == 0:
        return t.terminal[t.initial]
    for bits in _all_bitstrings(k):
        q = t.initial
        out = []
        for b in bits:
            tr = t.transition(q, b)
            if tr is None:
                return False
            q, letter = tr
            out.append(letter)
        if not t.terminal[q]:
            return False
        if tuple(out) != f_eval(w, bits):
            return False
    return True


def _all_bitstrings(k: int):
    for value in range(1 << k):
        yield tuple((value >> (k - 1 - i)) & 1 for i in range(k))


# ---------------------------------------------------------------------------
# Serialization


def to_fbt(t: Transducer) -> str:
    """Serialize to the FBT v1 text format.

    Line 1 is ``FBT 1 <nstates> <initial> <alphabet_size>``; then one line
    per state: ``<id> <terminal 0|1> <t0_target|-> <t0_out|-> <t1_target|->
    <t1_out|->`` with ``-`` marking undefined slots.
    """
    lines = [f"FBT 1 {t.num_states} {t.initial} {t.alphabet_size}"]
    for q in range(t.num_states):
        fields = [str(q), "1" if t.terminal[q] else "0"]
        for target, out in (
            (t.t0_target[q], t.t0_out[q]),
            (t.t1_target[q], t.t1_out[q]),
        ):
            if target == NO_STATE:
                fields += ["-", "-"]
            else:
                fields += [str(target), str(out)]
        lines.append(" ".join(fields))
    return "\n".join(lines) + "\n"


def from_fbt(text: str) -> Transducer:
    """Parse the FBT v1 text format produced by :func:`to_fbt`."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValueError("empty FBT input")
    header = lines[0].split()
    if len(header) != 5 or header[0] != "FBT" or header[1] != "1":
        raise ValueError(f"bad FBT header: {lines[0]!r}")
    n, initial, alphabet_size = int(header[2]), int(header[3]), int(header[4])
    if len(lines) != n + 1:
        raise ValueError(f"expected {n} state lines, got {len(lines) - 1}")
    terminal = [False] * n
    t0_target = [NO_STATE] * n
    t0_out = [NO_STATE] * n
    t1_target = [NO_STATE] * n
    t1_out = [NO_STATE] * n
    seen = [False] * n

    def field(token: str) -> int:
        return NO_STATE if token == "-" else int(token)

    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 6:
            raise ValueError(f"bad FBT state line: {line!r}")
        q = int(parts[0])
        if not 0 <= q < n or seen[q]:
            raise ValueError(f"bad or repeated state id {q}")
        seen[q] = True
        terminal[q] = parts[1] == "1"
        t0_target[q] = field(parts[2])
        t0_out[q] = field(parts[3])
        t1_target[q] = field(parts[4])
        t1_out[q] = field(parts[5])
    return Transducer(alphabet_size, initial, terminal, t0_target, t0_out, t1_target, t1_out)


def _letter_label(letter: int, alphabet_size: int) -> str:
    if alphabet_size <= len(WORD_CHARS) and 0 <= letter < len(WORD_CHARS):
        return WORD_CHARS[letter]
    return str(letter)


def to_dot(t: Transducer) -> str:
    """GraphViz export; edges are labelled ``<bit>|<letter>``."""
    lines = [
        "digraph transducer {",
        "  rankdir=TB;",
        '  __start [shape=point, label=""];',
        f"  __start -> q{t.initial};",
    ]
    for q in range(t.num_states):
        shape = "doublecircle" if t.terminal[q] else "circle"
        lines.append(f"  q{q} [shape={shape}, label=\"{q}\"];")
    for q in range(t.num_states):
        for bit, target, out in (
            (0, t.t0_target[q], t.t0_out[q]),
            (1, t.t1_target[q], t.t1_out[q]),
        ):
            if target != NO_STATE:
                label = f"{bit}|{_letter_label(out, t.alphabet_size)}"
                lines.append(f'  q{q} -> q{target} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
