"""Chern numbers of triangulated circle bundles over closed oriented surfaces.

The input is a triangulated closed oriented surface together with, for each
2-simplex, the cyclic word of the circle bundle sitting over it (character
``i`` of the word corresponds to the i-th vertex of the simplex in the
global vertex order).  The Chern number is the signed sum of the curvature
of these words over the fundamental cycle.

Two ingestion paths: the per-triangle words can be given directly, or as
elementary circle-bundle cell data from which the word is read off
(:func:`gauss_word`).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .bundles import CIRCLE, ElementaryBundle, word_from_s_bundle
from .curvature import curv_cyclic
from .errors import InvalidBundle, InvalidInput, NotAnNWord, ValidationGap
from .words import CyclicWord, Word, canonicalize, delta, validate_n_word

Edge = tuple[int, int]


@dataclass(frozen=True)
class BaseTriangle:
    """An oriented 2-simplex of the base: vertex ids in increasing order and
    its coefficient in the fundamental cycle."""

    id: str
    vertices: tuple[int, int, int]
    sign: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if not (self.vertices[0] < self.vertices[1] < self.vertices[2]):
            raise InvalidInput(f"triangle {self.id}: vertices must be strictly increasing")
        if self.sign not in (1, -1):
            raise InvalidInput(f"triangle {self.id}: sign must be +1 or -1")

    def edges(self) -> list[tuple[Edge, int]]:
        """The three edges with the local index of the omitted vertex."""
        v = self.vertices
        return [((v[1], v[2]), 0), ((v[0], v[2]), 1), ((v[0], v[1]), 2)]


@dataclass
class TriangulatedSBundle:
    """A triangulated circle bundle: base triangles plus one cyclic 3-character
    word per triangle."""

    triangles: tuple[BaseTriangle, ...]
    words: dict[str, CyclicWord]

    def __post_init__(self) -> None:
        self.triangles = tuple(self.triangles)
        ids = [t.id for t in self.triangles]
        if len(set(ids)) != len(ids):
            raise InvalidInput("triangle ids must be unique")

    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for t in self.triangles for v in t.vertices}))

    def reversed_orientation(self) -> "TriangulatedSBundle":
        flipped = tuple(
            BaseTriangle(t.id, t.vertices, -t.sign) for t in self.triangles
        )
        return TriangulatedSBundle(flipped, dict(self.words))

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices()),
            "triangles": [
                {
                    "id": t.id,
                    "v": list(t.vertices),
                    "sign": t.sign,
                    "word": self.words[t.id].rep.to_json(),
                }
                for t in self.triangles
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "TriangulatedSBundle":
        try:
            entries = data["triangles"]
        except (TypeError, KeyError):
            raise InvalidInput("expected an object with a 'triangles' array") from None
        triangles = []
        words: dict[str, CyclicWord] = {}
        for entry in entries:
            try:
                tri = BaseTriangle(str(entry["id"]), tuple(int(v) for v in entry["v"]),
                                   int(entry["sign"]))
            except KeyError as exc:
                raise InvalidInput(f"triangle entry missing key {exc.args[0]!r}") from None
            if "word" in entry:
                word = canonicalize(Word.from_json(entry["word"]))
            elif "total" in entry:
                word = gauss_word(ElementaryBundle.from_json(entry["total"]))
            else:
                raise InvalidInput(f"triangle {tri.id}: needs 'word' or 'total'")
            triangles.append(tri)
            words[tri.id] = word
        return cls(tuple(triangles), words)


@dataclass(frozen=True)
class EdgeIssue:
    edge: Edge
    kind: str
    detail: str


@dataclass(frozen=True)
class CycleReport:
    """Outcome of :func:`validate_cycle`; empty issue lists mean valid."""

    boundary_defects: tuple[EdgeIssue, ...]
    word_mismatches: tuple[EdgeIssue, ...]
    problems: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not (self.boundary_defects or self.word_mismatches or self.problems)

    def summary(self) -> str:
        if self.ok:
            return "valid"
        parts = [f"{len(self.boundary_defects)} boundary defect(s)",
                 f"{len(self.word_mismatches)} edge word mismatch(es)"]
        out = ", ".join(p for p in parts if not p.startswith("0 "))
        if self.problems:
            out = "; ".join([out] + list(self.problems)) if out else "; ".join(self.problems)
        return out or "invalid"


def gauss_word(bundle: ElementaryBundle) -> CyclicWord:
    """Cyclic word of an elementary circle bundle over an ordered 2-simplex."""
    if bundle.fiber_kind != CIRCLE or bundle.base_dim != 2:
        raise InvalidBundle("expected a circle bundle over a 2-simplex")
    return word_from_s_bundle(bundle)


def validate_cycle(tb: TriangulatedSBundle) -> CycleReport:
    """Check that the signed triangles form a cycle and the words agree on edges.

    Boundary check: every edge must lie in exactly two triangles, with
    cancelling signed orientation coefficients.  Edge compatibility: the two
    induced 2-character cyclic words over a shared edge must coincide.
    """
    problems: list[str] = []
    for tri in tb.triangles:
        word = tb.words.get(tri.id)
        if word is None:
            problems.append(f"triangle {tri.id}: no word given")
            continue
        if word.alphabet_size != 3:
            problems.append(f"triangle {tri.id}: word must use a 3-character alphabet")
            continue
        try:
            validate_n_word(word.rep)
        except NotAnNWord as exc:
            problems.append(f"triangle {tri.id}: {exc}")

    coeff: Counter[Edge] = Counter()
    owners: dict[Edge, list[tuple[BaseTriangle, int]]] = {}
    for tri in tb.triangles:
        for edge, j in tri.edges():
            coeff[edge] += tri.sign * (-1) ** j
            owners.setdefault(edge, []).append((tri, j))

    boundary = []
    for edge in sorted(owners):
        if len(owners[edge]) != 2:
            boundary.append(EdgeIssue(edge, "structure",
                                      f"edge lies in {len(owners[edge])} triangles, expected 2"))
        elif coeff[edge] != 0:
            boundary.append(EdgeIssue(edge, "boundary",
                                      f"signed boundary coefficient {coeff[edge]} != 0"))

    mismatches = []
    if not problems:
        for edge in sorted(owners):
            if len(owners[edge]) != 2:
                continue
            sides = []
            for tri, j in owners[edge]:
                sides.append(canonicalize(delta(tb.words[tri.id].rep, j)))
            if sides[0] != sides[1]:
                (ta, _), (tc, _) = owners[edge]
                mismatches.append(EdgeIssue(
                    edge, "word-mismatch",
                    f"{ta.id} induces {sides[0]} but {tc.id} induces {sides[1]}"))

    return CycleReport(tuple(boundary), tuple(mismatches), tuple(problems))


def chern_number(tb: TriangulatedSBundle) -> int:
    """Signed curvature total over the fundamental cycle.

    Raises :class:`InvalidInput` when validation fails and
    :class:`ValidationGap` when the total is not an integer (the words then
    cannot come from a genuine circle bundle even though every edge check
    passed).
    """
    report = validate_cycle(tb)
    if not report.ok:
        raise InvalidInput(f"invalid triangulated bundle: {report.summary()}", report)
    total = Fraction(0)
    for tri in tb.triangles:
        total += tri.sign * curv_cyclic(tb.words[tri.id])
    if total.denominator != 1:
        raise ValidationGap(
            f"curvature total {total} is not an integer; the edge-compatible "
            "words do not assemble into a circle bundle"
        )
    return int(total)
