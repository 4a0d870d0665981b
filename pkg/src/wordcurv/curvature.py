"""Exact rational index and curvature of words.

The index of a two-character word counts, over the ``k0 * k1`` grid of
occurrence pairs, how many have the lower character left of the higher one
minus how many have it right, divided by ``2 * k0 * k1``.  The sign
convention is fixed so that ``ind("ab") == -1/2``: a lower-ranked character
sitting to the *right* of a higher-ranked one counts negatively.

The curvature of a three-character word is the alternating sum of the
indices of its three two-character deletions::

    curv(w) = ind(delta(w, 0)) - ind(delta(w, 1)) + ind(delta(w, 2))

Curvature is invariant under rotation of the word, so it descends to cyclic
words, where it is a cocycle taking values in [-1/2, 1/2].
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from ._backend import kernels
from .errors import DegreeMismatch, MissingCharacter, NotAOneWord, NotATwoWord
from .words import CyclicWord, Word, delta, validate_n_word

Rational = Fraction


def ind(w: Word) -> Fraction:
    """Index of a 1-word (two characters, both present)."""
    if w.alphabet_size != 2:
        raise NotAOneWord(f"expected a two-character alphabet, got {w.alphabet_size}")
    try:
        validate_n_word(w)
    except MissingCharacter as exc:
        raise NotAOneWord(str(exc)) from exc
    num, den = kernels.ind_terms(bytes(w))
    return Fraction(num, den)


def curv(w: Word) -> Fraction:
    """Curvature of a 2-word (three characters, all present)."""
    if w.alphabet_size != 3:
        raise NotATwoWord(f"expected a three-character alphabet, got {w.alphabet_size}")
    try:
        validate_n_word(w)
    except MissingCharacter as exc:
        raise NotATwoWord(str(exc)) from exc
    num, den = kernels.curv_terms(bytes(w))
    return Fraction(num, den)


def curv_cyclic(cw: CyclicWord) -> Fraction:
    """Curvature of a cyclic 2-word; rotation-independent by invariance."""
    return curv(cw.rep)


@dataclass(frozen=True)
class CochainFn:
    """A degree-n rational cochain: a total function on n-words."""

    degree: int
    fn: Callable[[Word], Fraction]

    def __call__(self, w: Word) -> Fraction:
        if w.alphabet_size != self.degree + 1:
            raise DegreeMismatch(
                f"degree-{self.degree} cochain applied to a word over "
                f"{w.alphabet_size} characters"
            )
        return self.fn(w)


IND = CochainFn(1, ind)
CURV = CochainFn(2, curv)


def coboundary(f: CochainFn, w: Word) -> Fraction:
    """Evaluate ``df`` on ``w``: the alternating sum of ``f`` over the faces.

    ``w`` must be an (n+1)-word when ``f`` has degree n.
    """
    if w.alphabet_size != f.degree + 2:
        raise DegreeMismatch(
            f"coboundary of a degree-{f.degree} cochain needs a word over "
            f"{f.degree + 2} characters, got {w.alphabet_size}"
        )
    validate_n_word(w)
    total = Fraction(0)
    for i in range(w.alphabet_size):
        term = f(delta(w, i))
        total = total + term if i % 2 == 0 else total - term
    return total
