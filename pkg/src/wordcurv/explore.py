"""Enumeration of cyclic words and surveys of attained curvature values.

Rotation classes of 3-character words are enumerated by canonical-form
filtering: a class is represented by the unique member that equals its own
lexicographically least rotation.  Surveys tabulate the curvature over all
classes of a length range: which rational values occur, which words have
curvature zero (split into cyclic palindromes and the rest), and which
attain the extreme values +-1/2.  Everything is deterministic -- there is
no randomness anywhere.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from ._backend import kernels
from .words import CyclicWord, Word

_ALPHABET = "abc"


def enumerate_cyclic_words(length: int, alphabet_size: int = 3) -> Iterator[CyclicWord]:
    """One representative per rotation class of valid words of this length.

    Yields, in lexicographic order of the canonical representative, every
    rotation class of words of the given length using all characters.
    """
    if length < alphabet_size:
        return
    for raw in kernels.canonical_words(length, alphabet_size):
        yield CyclicWord(Word(alphabet_size, tuple(raw)))


@dataclass(frozen=True)
class ValueEntry:
    """One attained curvature value with its multiplicity and first witness."""

    value: Fraction
    count: int
    example: str


@dataclass(frozen=True)
class SurveyReport:
    """Aggregated curvature statistics over all rotation classes of a length range."""

    min_length: int
    max_length: int
    classes_per_length: tuple[tuple[int, int], ...]
    values: tuple[ValueEntry, ...]
    zero_palindromes: tuple[str, ...]
    zero_nonpalindromes: tuple[str, ...]
    extremal: tuple[tuple[str, str], ...]

    @property
    def total_classes(self) -> int:
        return sum(n for _, n in self.classes_per_length)

    def to_json_dict(self) -> dict:
        return {
            "lengths": [self.min_length, self.max_length],
            "classes": self.total_classes,
            "classes_per_length": {str(l): n for l, n in self.classes_per_length},
            "values": [
                {"value": str(e.value), "count": e.count, "example": e.example}
                for e in self.values
            ],
            "zero": {
                "palindromes": list(self.zero_palindromes),
                "non_palindromes": list(self.zero_nonpalindromes),
            },
            "extremal": [{"word": w, "value": v} for w, v in self.extremal],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)

    def format_table(self, max_rows: int | None = None) -> str:
        """Human-readable summary table of the attained values."""
        lines = [
            f"lengths {self.min_length}..{self.max_length}: "
            f"{self.total_classes} rotation classes, {len(self.values)} distinct values",
            f"zero curvature: {len(self.zero_palindromes)} cyclic palindromes, "
            f"{len(self.zero_nonpalindromes)} non-palindromes",
            f"extremal (|value| = 1/2): {len(self.extremal)} classes",
            "",
            f"{'value':>12}  {'count':>8}  example",
        ]
        rows = self.values if max_rows is None else self.values[:max_rows]
        for e in rows:
            lines.append(f"{str(e.value):>12}  {e.count:>8}  {e.example}")
        if max_rows is not None and len(self.values) > max_rows:
            lines.append(f"... {len(self.values) - max_rows} more values")
        return "\n".join(lines)


def survey(min_length: int, max_length: int) -> SurveyReport:
    """Tabulate curvature over every rotation class with lengths in range."""
    if not 3 <= min_length <= max_length:
        raise ValueError("need 3 <= min_length <= max_length")
    counts: dict[Fraction, int] = {}
    examples: dict[Fraction, str] = {}
    per_length = []
    zero_pal: list[str] = []
    zero_other: list[str] = []
    extremal: list[tuple[str, str]] = []
    half = Fraction(1, 2)
    for length in range(min_length, max_length + 1):
        reps = kernels.canonical_words(length, 3)
        per_length.append((length, len(reps)))
        for raw in reps:
            num, den = kernels.curv_terms(raw)
            value = Fraction(num, den)
            text = raw.decode("ascii").translate(_TO_ABC)
            counts[value] = counts.get(value, 0) + 1
            if value not in examples:
                examples[value] = text
            if num == 0:
                if kernels.cyclic_palindrome(raw):
                    zero_pal.append(text)
                else:
                    zero_other.append(text)
            elif abs(value) == half:
                extremal.append((text, str(value)))
    values = tuple(
        ValueEntry(v, counts[v], examples[v]) for v in sorted(counts)
    )
    return SurveyReport(
        min_length,
        max_length,
        tuple(per_length),
        values,
        tuple(zero_pal),
        tuple(zero_other),
        tuple(extremal),
    )


def find_zero_nonpalindromes(max_length: int) -> list[CyclicWord]:
    """Every rotation class with curvature zero that is not a cyclic palindrome.

    An empty result for all lengths up to the bound is evidence (not proof)
    that zero curvature forces a cyclic palindrome.
    """
    out: list[CyclicWord] = []
    for length in range(3, max_length + 1):
        for raw in kernels.canonical_words(length, 3):
            num, _den = kernels.curv_terms(raw)
            if num == 0 and not kernels.cyclic_palindrome(raw):
                out.append(CyclicWord(Word(3, tuple(raw))))
    return out


_TO_ABC = {r: ord(_ALPHABET[r]) for r in range(3)}
