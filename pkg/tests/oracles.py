"""Independent reference implementations used as test oracles.

These are deliberately naive: a direct transliteration of the reference
index/curvature procedure working on character strings, a quadratic least
rotation, and a position-set nerve construction.  They share no code with
the package.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product


def maple_index(a: str, b: str, s: str) -> Fraction:
    letters = list(s)
    k0 = 0
    total = 0
    for i, ch in enumerate(letters):
        if ch == a:
            k0 += 1
            for j, other in enumerate(letters):
                if other == b:
                    if j < i:
                        total += 1
                    elif j > i:
                        total -= 1
    k1 = len(letters) - k0
    return Fraction(total, 2 * k0 * k1)


def maple_curv(a: str, b: str, c: str, s: str) -> Fraction:
    lab = "".join(ch for ch in s if ch in (a, b))
    lac = "".join(ch for ch in s if ch in (a, c))
    lbc = "".join(ch for ch in s if ch in (b, c))
    return maple_index(b, c, lbc) - maple_index(a, c, lac) + maple_index(a, b, lab)


def brute_least_rotation(seq) -> int:
    """Smallest start index of the lexicographically least rotation."""
    seq = tuple(seq)
    rots = [(seq[k:] + seq[:k], k) for k in range(len(seq))]
    return min(rots)[1]


def brute_cyclic_palindrome(seq) -> bool:
    seq = tuple(seq)
    rev = seq[::-1]
    return any(seq[k:] + seq[:k] == rev for k in range(len(seq)))


def all_valid_words(alphabet_size: int, length: int):
    """Every rank tuple of this length using all ranks."""
    for tup in product(range(alphabet_size), repeat=length):
        if len(set(tup)) == alphabet_size:
            yield tup


def brute_canonical_reps(length: int, alphabet_size: int) -> list[tuple[int, ...]]:
    """One least rotation per rotation class, lexicographically sorted."""
    reps = set()
    for tup in all_valid_words(alphabet_size, length):
        k = brute_least_rotation(tup)
        reps.add(tup[k:] + tup[:k])
    return sorted(reps)


def nerve_cells(word: str) -> set[frozenset]:
    """Maximal families of per-character stretches with a common position.

    Vertices are pairs (character rank, stretch index); stretches are the
    closed position ranges between consecutive occurrences of a character,
    including the leading and trailing ones.
    """
    chars = sorted(set(word))
    spans = {}
    for r, ch in enumerate(chars):
        occ = [i for i, c in enumerate(word) if c == ch]
        ranges = [(0, occ[0])]
        ranges += [(occ[j], occ[j + 1]) for j in range(len(occ) - 1)]
        ranges += [(occ[-1], len(word) - 1)]
        for idx, (lo, hi) in enumerate(ranges):
            spans[(r, idx)] = (lo, hi)
    families = [
        frozenset(v for v, (lo, hi) in spans.items() if lo <= t <= hi)
        for t in range(len(word))
    ]
    return {f for f in families if not any(f < g for g in families)}
