"""Exhaustive enumeration of the free band on a small alphabet.

Breadth-first closure under right-multiplication by generators: keep a set
of canonical (short-lex minimal) words, extend each by each generator,
normalize, and insert when new.  Every element is a product of generators,
so the closure reaches the whole free band; the count excludes the empty
word.  Feasible at desk scale for alphabets of size up to 4.
"""

from __future__ import annotations

from collections import deque

from .minword import normalize
from .oracles import BudgetExceeded


def enumerate_fb(alphabet_size: int, max_elements: int = 400_000) -> int:
    """The number of distinct nonempty free-band elements over an alphabet
    of the given size.

    Raises :class:`BudgetExceeded` once more than ``max_elements`` distinct
    elements have been found.
    """
    if alphabet_size < 0:
        raise ValueError("alphabet size must be non-negative")
    if alphabet_size == 0:
        return 0
    generators = range(alphabet_size)
    seen: set[tuple[int, ...]] = set()
    queue: deque[tuple[int, ...]] = deque()
    for g in generators:
        word = (g,)
        seen.add(word)
        queue.append(word)
    while queue:
        word = queue.popleft()
        for g in generators:
            product = normalize(word + (g,))
            if product not in seen:
                if len(seen) >= max_elements:
                    raise BudgetExceeded(
                        f"free band on {alphabet_size} letters exceeds "
                        f"{max_elements} elements"
                    )
                seen.add(product)
                queue.append(product)
    return len(seen)
