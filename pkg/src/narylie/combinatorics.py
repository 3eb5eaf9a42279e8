"""Multi-indexes, signed sorting and unshuffles.

Indices are 1-based throughout: the full multi-index of length ``n`` is
``(1, ..., n)``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Optional, Sequence

MultiIndex = tuple[int, ...]


def sort_with_sign(idx: Sequence[int]) -> Optional[tuple[MultiIndex, int]]:
    """Sort ``idx`` increasingly and return ``(sorted, parity)``.

    Returns ``None`` if an index repeats (the alternating value is zero).

    >>> sort_with_sign((2, 1, 3))
    ((1, 2, 3), -1)
    >>> sort_with_sign((1, 1, 2)) is None
    True
    """
    items = list(idx)
    sign = 1
    # insertion sort, counting transpositions
    for i in range(1, len(items)):
        x = items[i]
        j = i - 1
        while j >= 0 and items[j] > x:
            items[j + 1] = items[j]
            j -= 1
            sign = -sign
        if j >= 0 and items[j] == x:
            return None
        items[j + 1] = x
    return tuple(items), sign


@lru_cache(maxsize=None)
def unshuffles(total: int, k: int) -> tuple[tuple[MultiIndex, MultiIndex, int], ...]:
    """All splittings of ``(1..total)`` into increasing ``I`` (``|I| = k``) and its complement ``J``.

    Each entry carries the parity of the permutation taking the
    concatenation ``(I, J)`` to ``(1..total)``.  Entries are ordered
    lexicographically in ``I``.
    """
    if not 0 <= k <= total:
        raise ValueError(f"need 0 <= k <= total, got k={k}, total={total}")
    out = []
    full = range(1, total + 1)
    for I in combinations(full, k):
        chosen = set(I)
        J = tuple(i for i in full if i not in chosen)
        # inversions of (I, J): pairs i in I, j in J with i > j
        inversions = sum(i - 1 - pos for pos, i in enumerate(I))
        out.append((I, J, -1 if inversions % 2 else 1))
    return tuple(out)


def permutation_parity(perm: Sequence[int]) -> int:
    """Parity of a permutation of distinct values by counting inversions."""
    n = len(perm)
    inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
    return -1 if inv % 2 else 1
