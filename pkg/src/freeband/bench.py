"""Benchmark harness: seeded word samples and per-routine timing suites.

Word samples are drawn with an explicit splitmix64 generator (seeded with a
64-bit integer; each letter is the next output reduced modulo the alphabet
size), so the sampled inputs are reproducible bit-for-bit from the seed
alone, independent of any standard library's RNG internals.

Each suite times one routine against its expected cost driver and yields
``(x, seconds)`` rows, where ``x`` is the cost-driver quantity for that
measurement:

=============  =======================================  =====================
suite          routine                                  x
=============  =======================================  =====================
interval       interval_transducer(w)                   |A| * |w|
minimize       minimize(interval(w))                    states of interval(w)
isomorphism    isomorphic(M, M), M minimal              states of M
equality       equal_in_free_band(u, v)                 (|u| + |v|) * |A|
multiply       multiply(M1, M2), minimal operands       |M1| + |M2| + |A|^2
minword        min_word(M), M minimal                   |M| * |A|
=============  =======================================  =====================

Measured seconds are wall-clock means over enough repetitions to clear the
timer's resolution; the x column (and the words behind it) is deterministic
given the seed, the timings obviously are not.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence, TextIO

from .interval import interval_transducer
from .minimize import equal_in_free_band, isomorphic, minimize
from .minword import min_word
from .multiply import multiply
from .words import Word

_MASK64 = (1 << 64) - 1

SUITES = ("interval", "minimize", "isomorphism", "equality", "multiply", "minword")

#: Full benchmark grid: alphabet sizes 2, 7, ..., 47 and lengths 20, 520,
#: ..., 4520 with 100 words per cell at scale 1.0.
FULL_ALPHABET_SIZES = tuple(range(2, 48, 5))
FULL_WORD_LENGTHS = tuple(range(20, 4521, 500))
FULL_WORDS_PER_CELL = 100


class SplitMix64:
    """The splitmix64 generator (Steele/Lea/Flood constants)."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)


@dataclass(frozen=True)
class BenchSample:
    """One cell of the benchmark grid."""

    alphabet_size: int
    word_length: int
    count: int
    seed: int

    def words(self) -> list[Word]:
        """The sample's words: uniform letters from one splitmix64 stream."""
        rng = SplitMix64(self.seed)
        m = self.alphabet_size
        return [
            tuple(rng.next() % m for _ in range(self.word_length))
            for _ in range(self.count)
        ]


def default_samples(scale: float = 0.1, seed: int = 42) -> list[BenchSample]:
    """The benchmark grid at the given scale.

    ``scale=1.0`` is the full grid; smaller scales thin the grid (every
    other alphabet size and length below 1.0) and reduce the words per cell
    proportionally.  Each cell's seed mixes the base seed with the cell
    coordinates so cells are independent yet reproducible.
    """
    if scale >= 1.0:
        sizes, lengths = FULL_ALPHABET_SIZES, FULL_WORD_LENGTHS
    else:
        sizes, lengths = FULL_ALPHABET_SIZES[::2], FULL_WORD_LENGTHS[::2]
    count = max(1, round(FULL_WORDS_PER_CELL * scale))
    samples = []
    for m in sizes:
        for length in lengths:
            cell_seed = SplitMix64((seed << 32) ^ (m << 16) ^ length).next()
            samples.append(BenchSample(m, length, count, cell_seed))
    return samples


def _time_once(fn: Callable[[], object]) -> float:
    """Mean wall-clock seconds for ``fn``, repeating until the measurement
    clears 1 ms of total runtime (cap 256 repetitions)."""
    reps = 1
    while True:
        start = time.perf_counter()
        for _ in range(reps):
            fn()
        elapsed = time.perf_counter() - start
        if elapsed >= 1e-3 or reps >= 256:
            return elapsed / reps
        reps *= 4


def run_bench(suite: str, samples: Iterable[BenchSample]) -> list[tuple[int, float]]:
    """Run one suite over the samples; one ``(x, seconds)`` row per
    measured input."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    rows: list[tuple[int, float]] = []
    for sample in samples:
        words = sample.words()
        m = sample.alphabet_size
        if suite == "interval":
            for w in words:
                rows.append((m * len(w), _time_once(lambda: interval_transducer(w, m))))
        elif suite == "minimize":
            for w in words:
                t = interval_transducer(w, m)
                rows.append((t.num_states, _time_once(lambda: minimize(t))))
        elif suite == "isomorphism":
            for w in words:
                t = minimize(interval_transducer(w, m))
                rows.append((t.num_states, _time_once(lambda: isomorphic(t, t))))
        elif suite == "equality":
            for u, v in zip(words[0::2], words[1::2]):
                x = (len(u) + len(v)) * m
                rows.append((x, _time_once(lambda: equal_in_free_band(u, v))))
        elif suite == "multiply":
            minimal = [minimize(interval_transducer(w, m)) for w in words]
            for t1, t2 in zip(minimal[0::2], minimal[1::2]):
                x = t1.num_states + t2.num_states + m * m
                rows.append((x, _time_once(lambda: multiply(t1, t2))))
        elif suite == "minword":
            for w in words:
                t = minimize(interval_transducer(w, m))
                rows.append((t.num_states * m, _time_once(lambda: min_word(t))))
    return rows


def write_dat(rows: Sequence[tuple[int, float]], out: TextIO) -> None:
    """Emit rows as tab-separated ``x<TAB>seconds`` lines."""
    for x, seconds in rows:
        out.write(f"{x}\t{seconds:.9g}\n")
