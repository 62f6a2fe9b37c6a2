"""Multiplication of free-band elements on their transducers.

The product machine reuses both operand transducers unchanged and stitches
them together through a grid of at most ``|content(x)| * |content(y)|``
fresh states, one per pair ``(i, j)`` of spine depths.  The 1-spine of the
left operand is the path of 1-edges from its initial state, the 0-spine of
the right operand dually; the *escape tables* K0/K1 say how far down the
opposite spine a reduction jumps, and are filled in O(|A|^2) by a reverse
sweep that reuses each previously filled cell.

Grid cells whose escape is undefined fall off into the operand transducers
themselves.  Transitions that would land on the last grid row or column are
redirected to the corresponding spine states at creation time, so the
boundary states are never materialized; total cost is
O(|T_x| + |T_y| + |A|^2) time and space.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .transducer import NO_STATE, Transducer, validate


def _spine(t: Transducer, bit: int):
    """States and output letters along the all-``bit`` path from the
    initial state down to a terminal.

    Returns ``(states, letters)`` with ``states[0]`` the initial state and
    ``letters[d]`` the output of the d-th step (``letters[0] is None``).
    """
    states = [t.initial]
    letters: list[Optional[int]] = [None]
    q = t.initial
    while not t.terminal[q]:
        tr = t.transition(q, bit)
        if tr is None:
            raise ValueError("malformed transducer: dead end before a terminal")
        q, letter = tr
        states.append(q)
        letters.append(letter)
    return states, letters


@dataclass(frozen=True)
class KTable:
    """Escape exponents for one side of the product construction.

    ``values[i][j]`` is the least ``k >= 1`` such that the ``(j+k)``-th
    letter of the right operand's 0-spine escapes the content of the left
    operand reduced ``i`` times (side 0), resp. the mirror statement for
    side 1; ``None`` where no such ``k`` exists.
    """

    side: int
    values: tuple

    def get(self, i: int, j: int) -> Optional[int]:
        return self.values[i][j]


def compute_k(tx: Transducer, ty: Transducer, side: int) -> KTable:
    """Fill the full escape table for ``side`` in O(|A|^2).

    Cells are visited in reverse lexicographic order so each one is either
    immediate (the next spine letter already escapes) or one more than an
    already-computed neighbour.
    """
    if side not in (0, 1):
        raise ValueError(f"side must be 0 or 1, got {side!r}")
    for t in (tx, ty):
        err = validate(t)
        if err is not None:
            raise ValueError(f"invalid transducer: {err}")
    _, x_letters = _spine(tx, 1)
    _, y_letters = _spine(ty, 0)
    m = len(x_letters) - 1
    n = len(y_letters) - 1
    values = [[None] * (n + 1) for _ in range(m + 1)]
    seen: set[int] = set()
    if side == 0:
        for i in range(m, -1, -1):
            row = values[i]
            for j in range(n - 1, -1, -1):
                letter = y_letters[j + 1]
                if letter not in seen:
                    row[j] = 1
                elif row[j + 1] is not None:
                    row[j] = 1 + row[j + 1]
            if i != 0:
                seen.add(x_letters[i])
    else:
        for j in range(n, -1, -1):
            for i in range(m - 1, -1, -1):
                letter = x_letters[i + 1]
                if letter not in seen:
                    values[i][j] = 1
                elif values[i + 1][j] is not None:
                    values[i][j] = 1 + values[i + 1][j]
            if j != 0:
                seen.add(y_letters[j])
    return KTable(side, tuple(tuple(row) for row in values))


def multiply(tx: Transducer, ty: Transducer) -> Transducer:
    """A transducer representing the product of the elements represented
    by ``tx`` and ``ty``.

    The result is returned unminimized; compose with ``minimize`` when a
    canonical machine is needed.  If either operand represents the empty
    word the other operand is copied verbatim.
    """
    for t in (tx, ty):
        err = validate(t)
        if err is not None:
            raise ValueError(f"invalid transducer: {err}")
    if tx.terminal[tx.initial]:
        return ty.copy()
    if ty.terminal[ty.initial]:
        return tx.copy()

    x_spine, x_letters = _spine(tx, 1)
    y_spine, y_letters = _spine(ty, 0)
    m = len(x_spine) - 1
    n = len(y_spine) - 1
    k0 = compute_k(tx, ty, 0).values
    k1 = compute_k(tx, ty, 1).values

    nx = tx.num_states
    ny = ty.num_states
    total = nx + ny + m * n

    def grid_id(i: int, j: int) -> int:
        # boundary coordinates are identified with the operand spines
        if j == n:
            return x_spine[i]
        if i == m:
            return nx + y_spine[j]
        return nx + ny + i * n + j

    terminal = [False] * total
    t0_target = [NO_STATE] * total
    t0_out = [NO_STATE] * total
    t1_target = [NO_STATE] * total
    t1_out = [NO_STATE] * total

    terminal[:nx] = tx.terminal
    t0_out[:nx] = tx.t0_out
    t1_out[:nx] = tx.t1_out
    t0_target[:nx] = tx.t0_target
    t1_target[:nx] = tx.t1_target

    for q in range(ny):
        terminal[nx + q] = ty.terminal[q]
        if ty.t0_target[q] != NO_STATE:
            t0_target[nx + q] = nx + ty.t0_target[q]
            t0_out[nx + q] = ty.t0_out[q]
        if ty.t1_target[q] != NO_STATE:
            t1_target[nx + q] = nx + ty.t1_target[q]
            t1_out[nx + q] = ty.t1_out[q]

    for i in range(m):
        for j in range(n):
            q = nx + ny + i * n + j
            k = k0[i][j]
            if k is not None:
                t0_target[q] = grid_id(i, j + k)
                t0_out[q] = y_letters[j + k]
            else:
                t0_target[q] = tx.t0_target[x_spine[i]]
                t0_out[q] = tx.t0_out[x_spine[i]]
            k = k1[i][j]
            if k is not None:
                t1_target[q] = grid_id(i + k, j)
                t1_out[q] = x_letters[i + k]
            else:
                t1_target[q] = nx + ty.t1_target[y_spine[j]]
                t1_out[q] = ty.t1_out[y_spine[j]]

    return Transducer(
        max(tx.alphabet_size, ty.alphabet_size),
        grid_id(0, 0),
        terminal,
        t0_target,
        t0_out,
        t1_target,
        t1_out,
    )
