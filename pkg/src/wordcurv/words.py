"""Words and cyclic words over ordered alphabets.

Letters are stored as character *ranks*: rank 0 is the highest character of
the alphabet, rank ``alphabet_size - 1`` the lowest.  An *n-word* is a word
over ``n + 1`` characters in which every rank actually occurs; deleting all
occurrences of one rank (:func:`delta`) is the face operator that makes
n-words into the n-simplices of a semi-simplicial set.

Surface syntax maps user-visible characters to ranks through an explicit
alphabet string whose first character is the highest, e.g. alphabet
``"cat"`` means c > a > t, so ``"cattactact"`` has letter ranks
``(0, 1, 2, 2, 1, 0, 2, 1, 0, 2)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from ._backend import kernels
from .errors import MissingCharacter

_DEFAULT_SYMBOLS = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class Word:
    """A finite word over an ordered alphabet, letters stored as ranks."""

    alphabet_size: int
    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.alphabet_size < 0:
            raise ValueError("alphabet_size must be non-negative")
        for r in self.letters:
            if not 0 <= r < self.alphabet_size:
                raise ValueError(f"letter rank {r} outside alphabet of size {self.alphabet_size}")

    @classmethod
    def from_symbols(cls, text: str, alphabet: str) -> "Word":
        """Build a word from characters, ordered by the alphabet string."""
        rank = _alphabet_ranks(alphabet)
        try:
            letters = tuple(rank[ch] for ch in text)
        except KeyError as exc:
            raise ValueError(f"character {exc.args[0]!r} not in alphabet {alphabet!r}") from None
        return cls(len(alphabet), letters)

    def to_symbols(self, alphabet: str | None = None) -> str:
        """Render the word with the given alphabet (default ``abc...``)."""
        if alphabet is None:
            if self.alphabet_size > len(_DEFAULT_SYMBOLS):
                raise ValueError("alphabet too large for default symbols; pass one explicitly")
            alphabet = _DEFAULT_SYMBOLS[: self.alphabet_size]
        elif len(alphabet) != self.alphabet_size:
            raise ValueError("alphabet length does not match alphabet_size")
        return "".join(alphabet[r] for r in self.letters)

    def to_json(self, alphabet: str | None = None) -> dict:
        if alphabet is None:
            alphabet = _DEFAULT_SYMBOLS[: self.alphabet_size]
        return {"alphabet": alphabet, "word": self.to_symbols(alphabet)}

    @classmethod
    def from_json(cls, data: dict) -> "Word":
        return cls.from_symbols(data["word"], data["alphabet"])

    def counts(self) -> tuple[int, ...]:
        """Occurrences of each rank."""
        c = [0] * self.alphabet_size
        for r in self.letters:
            c[r] += 1
        return tuple(c)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, i: int) -> int:
        return self.letters[i]

    def __str__(self) -> str:
        return self.to_symbols()

    def __bytes__(self) -> bytes:
        return bytes(self.letters)


@dataclass(frozen=True)
class CyclicWord:
    """A rotation class of words, held by its lexicographically least rotation.

    Two cyclic words are equal exactly when their representatives coincide
    letter for letter.
    """

    rep: Word

    def __post_init__(self) -> None:
        if not self.rep.letters:
            raise ValueError("cyclic word must be nonempty")
        k = kernels.least_rotation(bytes(self.rep))
        if k:
            rotated = self.rep.letters[k:] + self.rep.letters[:k]
            object.__setattr__(self, "rep", Word(self.rep.alphabet_size, rotated))

    @property
    def alphabet_size(self) -> int:
        return self.rep.alphabet_size

    def rotations(self) -> Iterator[Word]:
        """All rotations of the representative (length-many, with repeats)."""
        w = self.rep
        for k in range(len(w)):
            yield Word(w.alphabet_size, w.letters[k:] + w.letters[:k])

    def __len__(self) -> int:
        return len(self.rep)

    def __str__(self) -> str:
        return str(self.rep)


@dataclass(frozen=True)
class Permutation:
    """A bijection on ranks ``0..n-1``, applied to alphabets."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError("images must be a bijection on 0..n-1")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def swap(cls, n: int, i: int, j: int) -> "Permutation":
        images = list(range(n))
        images[i], images[j] = images[j], images[i]
        return cls(tuple(images))

    @classmethod
    def all(cls, n: int) -> Iterator["Permutation"]:
        from itertools import permutations as _perms

        for p in _perms(range(n)):
            yield cls(p)

    def __call__(self, rank: int) -> int:
        return self.images[rank]

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: ``(self.compose(other))(r) == self(other(r))``."""
        if len(self.images) != len(other.images):
            raise ValueError("permutation size mismatch")
        return Permutation(tuple(self.images[other.images[r]] for r in range(len(self.images))))

    @property
    def parity(self) -> int:
        """+1 for even permutations, -1 for odd."""
        seen = [False] * len(self.images)
        sign = 1
        for start in range(len(self.images)):
            if seen[start]:
                continue
            length = 0
            r = start
            while not seen[r]:
                seen[r] = True
                r = self.images[r]
                length += 1
            if length % 2 == 0:
                sign = -sign
        return sign


def _alphabet_ranks(alphabet: str) -> dict[str, int]:
    if len(set(alphabet)) != len(alphabet):
        raise ValueError(f"alphabet {alphabet!r} has repeated characters")
    return {ch: r for r, ch in enumerate(alphabet)}


def validate_n_word(w: Word) -> int:
    """Return ``n = alphabet_size - 1`` if every rank occurs in ``w``.

    Raises :class:`MissingCharacter` for the lowest absent rank.
    """
    seen = [False] * w.alphabet_size
    for r in w.letters:
        seen[r] = True
    for r, present in enumerate(seen):
        if not present:
            raise MissingCharacter(r)
    if not w.letters:
        raise MissingCharacter(0)
    return w.alphabet_size - 1


def delta(w: Word, i: int) -> Word:
    """Delete every occurrence of rank ``i`` and close up the alphabet.

    Surviving ranks above ``i`` shift down by one, so the result is a word
    over an alphabet one character smaller.
    """
    if not 0 <= i < w.alphabet_size:
        raise ValueError(f"rank {i} outside alphabet of size {w.alphabet_size}")
    letters = tuple(r if r < i else r - 1 for r in w.letters if r != i)
    return Word(w.alphabet_size - 1, letters)


def cyclic_shift(w: Word) -> Word:
    """Move the first letter to the end."""
    if not w.letters:
        raise ValueError("cannot shift the empty word")
    return Word(w.alphabet_size, w.letters[1:] + w.letters[:1])


def mirror(w: Word) -> Word:
    """Reverse the letter sequence."""
    return Word(w.alphabet_size, w.letters[::-1])


def permute_alphabet(w: Word, p: Permutation) -> Word:
    """Replace each letter rank ``r`` by ``p(r)``."""
    if len(p.images) != w.alphabet_size:
        raise ValueError("permutation size does not match alphabet")
    return Word(w.alphabet_size, tuple(p.images[r] for r in w.letters))


def canonicalize(w: Word) -> CyclicWord:
    """The rotation class of ``w``, held by its least rotation."""
    return CyclicWord(w)


def is_cyclic_palindrome(cw: CyclicWord) -> bool:
    """True iff the word equals its mirror up to rotation."""
    return kernels.cyclic_palindrome(bytes(cw.rep))
