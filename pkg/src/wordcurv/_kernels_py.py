"""Pure-Python backend for the hot kernels.

The compiled backend in ``_kernels.pyx`` implements the same functions with
the same semantics; ``_backend`` picks whichever is available.  Everything
here is exact integer arithmetic -- no floats.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

BACKEND = "pure"


def ind_terms(word: bytes) -> tuple[int, int]:
    """Reduced (numerator, denominator) of the index of a word over ranks {0, 1}.

    The numerator counts, over all occurrence pairs, rank-1 left of rank-0
    minus rank-1 right of rank-0; the denominator is ``2 * k0 * k1``.
    """
    k0 = k1 = 0
    left = 0  # rank-1 occurrences seen before each rank-0 occurrence
    for r in word:
        if r == 0:
            k0 += 1
            left += k1
        elif r == 1:
            k1 += 1
        else:
            raise ValueError(f"rank {r} out of range for a two-character word")
    if k0 == 0 or k1 == 0:
        raise ValueError("both characters must occur")
    num = 2 * left - k0 * k1
    den = 2 * k0 * k1
    g = gcd(num, den)
    return num // g, den // g


def curv_terms(word: bytes) -> tuple[int, int]:
    """Reduced (numerator, denominator) of the curvature of a word over ranks {0, 1, 2}."""
    k0 = k1 = k2 = 0
    s01 = s02 = s12 = 0  # s_xy: pairs with the rank-y occurrence left of the rank-x one
    for r in word:
        if r == 0:
            k0 += 1
            s01 += k1
            s02 += k2
        elif r == 1:
            k1 += 1
            s12 += k2
        elif r == 2:
            k2 += 1
        else:
            raise ValueError(f"rank {r} out of range for a three-character word")
    if k0 == 0 or k1 == 0 or k2 == 0:
        raise ValueError("all three characters must occur")
    total = (
        Fraction(2 * s12 - k1 * k2, 2 * k1 * k2)
        - Fraction(2 * s02 - k0 * k2, 2 * k0 * k2)
        + Fraction(2 * s01 - k0 * k1, 2 * k0 * k1)
    )
    return total.numerator, total.denominator


def least_rotation(word: bytes) -> int:
    """Booth's algorithm: start index of the lexicographically least rotation."""
    n = len(word)
    if n == 0:
        raise ValueError("empty word")
    f = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        sj = word[j % n]
        i = f[j - k - 1]
        while i != -1 and sj != word[(k + i + 1) % n]:
            if sj < word[(k + i + 1) % n]:
                k = j - i - 1
            i = f[i]
        if sj != word[(k + i + 1) % n]:
            if sj < word[k % n]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k % n


def cyclic_palindrome(word: bytes) -> bool:
    """True iff some rotation of ``word`` equals its reversal."""
    if not word:
        raise ValueError("empty word")
    return (word + word).find(word[::-1]) >= 0


def canonical_words(length: int, alphabet_size: int) -> list[bytes]:
    """All words of the given length, in lexicographic order, that contain
    every rank and equal their own least rotation (one per rotation class).

    Uses the FKM necklace generator, then filters for full alphabet use.
    """
    if length < 1 or alphabet_size < 1:
        raise ValueError("length and alphabet_size must be positive")
    out: list[bytes] = []
    a = bytearray(length + 1)

    def extend(t: int, p: int) -> None:
        if t > length:
            if length % p == 0:
                w = bytes(a[1:])
                if len(set(w)) == alphabet_size:
                    out.append(w)
            return
        a[t] = a[t - p]
        extend(t + 1, p)
        for j in range(a[t - p] + 1, alphabet_size):
            a[t] = j
            extend(t + 1, t)

    extend(1, 1)
    return out
