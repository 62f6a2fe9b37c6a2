"""Words over an integer alphabet and the prefix/suffix reduction calculus.

A word is a finite sequence of letters, where a letter is a non-negative
integer.  The integer order on letters is the order used everywhere for
lexicographic comparisons.

The two reduction operations at the heart of everything else:

* ``circ(w, "0")`` is the longest prefix of ``w`` whose set of distinct
  letters is one smaller than that of ``w``; ``circ(w, "1")`` is the
  analogous longest suffix.  Longer bitstrings fold left:
  ``circ(w, "01") == circ(circ(w, "0"), "1")``.
* ``ast(w, "0")`` is the letter of ``w`` immediately after ``circ(w, "0")``
  (the last distinct letter to appear reading left to right), and
  ``ast(w, "1")`` the letter immediately before ``circ(w, "1")``.

Both are partial; ``None`` is the "undefined" value and propagates through
compositions.  ``f_eval(w, bits)`` strings the ``ast`` letters along a
``circ`` path and is defined exactly when ``len(bits)`` equals the number
of distinct letters of ``w``.

All functions here are pure and operate on immutable inputs.
"""

from __future__ import annotations

from string import ascii_lowercase, ascii_uppercase, digits
from typing import Iterable, Optional, Sequence

Letter = int
Word = tuple[Letter, ...]
Bits = tuple[int, ...]

#: Characters accepted in the default textual word format, in letter order:
#: ``a``-``z`` map to 0-25, ``A``-``Z`` to 26-51, ``0``-``9`` to 52-61.
WORD_CHARS = ascii_lowercase + ascii_uppercase + digits
_CHAR_TO_LETTER = {c: i for i, c in enumerate(WORD_CHARS)}

#: Largest letter id accepted by the integer-token word format.
MAX_INT_LETTER = 1_000_000


class WordFormatError(ValueError):
    """Raised when a textual word cannot be parsed."""


def parse_word(text: str, ints: bool = False) -> Word:
    """Parse a word from text.

    The default format is a contiguous string of characters from
    ``WORD_CHARS``.  With ``ints=True`` the text is a comma-separated list
    of non-negative integers (empty text is the empty word in both modes).
    """
    if not ints:
        try:
            return tuple(_CHAR_TO_LETTER[c] for c in text)
        except KeyError as e:
            raise WordFormatError(f"unknown letter {e.args[0]!r} in word {text!r}") from None
    if text == "":
        return ()
    letters = []
    for token in text.split(","):
        token = token.strip()
        if not token.isdigit():
            raise WordFormatError(f"bad integer letter token {token!r}")
        value = int(token)
        if value > MAX_INT_LETTER:
            raise WordFormatError(f"oversized letter token {token!r} (max {MAX_INT_LETTER})")
        letters.append(value)
    return tuple(letters)


def format_word(w: Sequence[Letter], ints: bool = False) -> str:
    """Inverse of :func:`parse_word`; falls back to integer tokens when a
    letter has no character (id >= 62)."""
    if not ints and all(0 <= a < len(WORD_CHARS) for a in w):
        return "".join(WORD_CHARS[a] for a in w)
    return ",".join(str(a) for a in w)


def as_bits(bits: str | Iterable[int]) -> Bits:
    """Normalize a bitstring argument ("010", (0, 1, 0), ...) to a tuple of
    0/1 ints."""
    if isinstance(bits, str):
        out = tuple(1 if c == "1" else 0 if c == "0" else _bad_bit(c) for c in bits)
    else:
        out = tuple(1 if b == 1 else 0 if b == 0 else _bad_bit(b) for b in bits)
    return out


def _bad_bit(b):
    raise ValueError(f"bit must be 0 or 1, got {b!r}")


def content(w: Sequence[Letter]) -> frozenset[Letter]:
    """The set of distinct letters of ``w``."""
    return frozenset(w)


def subword(w: Sequence[Letter], i: int, j: int) -> Word:
    """The 1-based inclusive subword ``w[i..j]``; empty whenever ``i > j``
    or the span starts before the first position."""
    if i > j or i < 1:
        return ()
    return tuple(w[i - 1 : j])


def reduce_span(w: Sequence[Letter], lo: int, hi: int, bit: int):
    """One reduction step on the half-open span ``w[lo:hi]``.

    Returns ``(new_lo, new_hi, letter)`` where the new span is the longest
    prefix (bit 0) or suffix (bit 1) with one fewer distinct letter and
    ``letter`` is the boundary letter cut off; ``None`` on the empty span.
    """
    if lo >= hi:
        return None
    if bit == 0:
        seen = set()
        add = seen.add
        p = lo
        for idx in range(lo, hi):
            a = w[idx]
            if a not in seen:
                add(a)
                p = idx
        return (lo, p, w[p])
    seen = set()
    add = seen.add
    p = hi - 1
    for idx in range(hi - 1, lo - 1, -1):
        a = w[idx]
        if a not in seen:
            add(a)
            p = idx
    return (p + 1, hi, w[p])


def circ(w: Sequence[Letter], bits: str | Iterable[int]) -> Optional[Word]:
    """Iterated longest-prefix/suffix reduction of ``w`` along ``bits``.

    ``circ(w, "") == w``; ``None`` once the word is exhausted, i.e. whenever
    ``len(bits)`` exceeds the number of distinct letters of ``w``.
    """
    w = tuple(w)
    lo, hi = 0, len(w)
    for b in as_bits(bits):
        step = reduce_span(w, lo, hi, b)
        if step is None:
            return None
        lo, hi, _ = step
    return w[lo:hi]


def ast(w: Sequence[Letter], bits: str | Iterable[int]) -> Optional[Letter]:
    """The boundary letter of the final reduction step along ``bits``.

    Undefined (``None``) for empty ``bits`` and whenever the reduction path
    runs off the end of the word.
    """
    w = tuple(w)
    bs = as_bits(bits)
    if not bs:
        return None
    lo, hi = 0, len(w)
    letter = None
    for b in bs:
        step = reduce_span(w, lo, hi, b)
        if step is None:
            return None
        lo, hi, letter = step
    return letter


def f_eval(w: Sequence[Letter], bits: str | Iterable[int]) -> Optional[Word]:
    """The word of boundary letters read along the reduction path ``bits``.

    Defined exactly when ``len(bits)`` equals the number of distinct
    letters of ``w``; the result is then a permutation of ``content(w)``.
    """
    w = tuple(w)
    bs = as_bits(bits)
    if len(bs) != len(set(w)):
        return None
    lo, hi = 0, len(w)
    out = []
    for b in bs:
        step = reduce_span(w, lo, hi, b)
        if step is None:
            return None
        lo, hi, letter = step
        out.append(letter)
    return tuple(out)
