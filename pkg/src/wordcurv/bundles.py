"""Elementary interval- and circle-bundles over an ordered simplex.

An elementary bundle over the n-simplex is stored by its maximal cells.
Each vertex of the total complex is a pair ``(base_vertex, level)``: the
base vertex it projects to and its position in the fiber over that vertex.
A maximal cell has one vertex over every base vertex except one, over which
it has two vertices at consecutive levels; that doubled base vertex is the
letter the cell contributes to the word of the bundle.

The two directions of the word/bundle dictionary:

* :func:`bundle_from_word` builds the nerve of the covering of a word by
  its per-character stretches (one maximal cell per letter position);
* :func:`word_from_bundle` walks the maximal cells section by section from
  the all-zero section upward and reads off the doubled base vertices.

Gluing the top section of an interval bundle to its bottom section yields a
circle bundle whose word is read around the dual cycle.  Circle bundles
carry that cycle explicitly: when some fiber has fewer than three vertices
the cycle cannot be recovered from the bare cell multiset (the complex is
then a cell complex rather than a simplicial complex), so it is part of the
data and is reconstructed only when every fiber is honest.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import DegenerateFiber, InvalidBundle, SmallFiberWarning
from .words import CyclicWord, Word, canonicalize, validate_n_word

Vertex = tuple[int, int]
Cell = tuple[Vertex, ...]
Section = tuple[int, ...]

INTERVAL = "interval"
CIRCLE = "circle"


@dataclass(frozen=True)
class ElementaryBundle:
    """Maximal-cell model of an elementary bundle over the ordered n-simplex."""

    base_dim: int
    fiber_kind: str
    fiber_sizes: tuple[int, ...]
    cells: tuple[Cell, ...]
    cycle: tuple[Cell, ...] | None = None

    def __post_init__(self) -> None:
        if self.fiber_kind not in (INTERVAL, CIRCLE):
            raise ValueError(f"unknown fiber kind {self.fiber_kind!r}")
        if len(self.fiber_sizes) != self.base_dim + 1:
            raise ValueError("need one fiber size per base vertex")
        object.__setattr__(self, "fiber_sizes", tuple(self.fiber_sizes))
        cells = tuple(sorted(tuple(sorted(c)) for c in self.cells))
        object.__setattr__(self, "cells", cells)
        if self.cycle is not None:
            cyc = tuple(tuple(sorted(c)) for c in self.cycle)
            object.__setattr__(self, "cycle", _least_cycle_rotation(cyc))

    @property
    def has_small_fibers(self) -> bool:
        """True when some fiber has fewer than three vertices."""
        return any(m < 3 for m in self.fiber_sizes)

    def validate(self) -> None:
        """Full structural validation; raises :class:`InvalidBundle`."""
        if self.fiber_kind == INTERVAL:
            _interval_walk(self)
        else:
            _circle_walk(self)

    def to_json(self) -> dict:
        cells = self.cycle if (self.fiber_kind == CIRCLE and self.cycle) else self.cells
        return {
            "base_dim": self.base_dim,
            "fiber": self.fiber_kind,
            "fiber_sizes": list(self.fiber_sizes),
            "cells": [[[v, l] for v, l in cell] for cell in cells],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ElementaryBundle":
        kind = data["fiber"]
        sizes = tuple(int(m) for m in data["fiber_sizes"])
        cells = tuple(
            tuple((int(v), int(l)) for v, l in cell) for cell in data["cells"]
        )
        base_dim = int(data["base_dim"])
        if kind == INTERVAL:
            bundle = cls(base_dim, INTERVAL, sizes, cells)
            bundle.validate()
            return bundle
        if kind != CIRCLE:
            raise InvalidBundle(f"unknown fiber kind {kind!r}")
        # circle: first read the file's cell order as the dual cycle; when
        # that fails and every fiber is honest, reconstruct the cycle from
        # the bare cells (order-insensitive ingestion)
        try:
            bundle = cls(base_dim, CIRCLE, sizes, cells, cycle=cells)
            bundle.validate()
            return bundle
        except InvalidBundle:
            if not all(m >= 3 for m in sizes):
                raise
        bundle = _with_reconstructed_cycle(cls(base_dim, CIRCLE, sizes, cells))
        bundle.validate()
        return bundle


def bundle_from_word(w: Word) -> ElementaryBundle:
    """Nerve of the covering of an n-word by its per-character stretches.

    One maximal cell per letter position: the letter's stretch index pair
    over its own base vertex, the enclosing stretch over every other one.
    """
    validate_n_word(w)
    n = w.alphabet_size - 1
    seen = [0] * (n + 1)
    cells = []
    for r in w.letters:
        cell = []
        for v in range(n + 1):
            if v == r:
                cell.append((v, seen[v]))
                cell.append((v, seen[v] + 1))
            else:
                cell.append((v, seen[v]))
        seen[r] += 1
        cells.append(tuple(sorted(cell)))
    sizes = tuple(k + 1 for k in w.counts())
    return ElementaryBundle(n, INTERVAL, sizes, tuple(cells))


def word_from_bundle(b: ElementaryBundle) -> Word:
    """Shelling word of an interval bundle: doubled base vertices in walk order."""
    if b.fiber_kind != INTERVAL:
        raise InvalidBundle("expected an interval bundle")
    order = _interval_walk(b)
    letters = tuple(_doubled_base(cell, b.base_dim) for cell in order)
    return Word(b.base_dim + 1, letters)


def glue(b: ElementaryBundle) -> ElementaryBundle:
    """Identify the top section of an interval bundle with its bottom one.

    Fiber sizes drop by one.  Emits :class:`SmallFiberWarning` when a glued
    fiber has fewer than three vertices (cell complex, not simplicial).
    """
    if b.fiber_kind != INTERVAL:
        raise InvalidBundle("can only glue interval bundles")
    new_sizes = tuple(m - 1 for m in b.fiber_sizes)
    if any(m < 1 for m in new_sizes):
        raise DegenerateFiber("gluing would empty a fiber with a single vertex")
    order = _interval_walk(b)
    glued = tuple(
        tuple(sorted((v, 0 if l == b.fiber_sizes[v] - 1 else l) for v, l in cell))
        for cell in order
    )
    if any(m < 3 for m in new_sizes):
        warnings.warn(
            f"glued fiber sizes {new_sizes} include fibers below 3 vertices",
            SmallFiberWarning,
            stacklevel=2,
        )
    return ElementaryBundle(b.base_dim, CIRCLE, new_sizes, glued, cycle=glued)


def cyclic_shift_bundle(b: ElementaryBundle) -> ElementaryBundle:
    """Move the bottom cell of an interval bundle to the top.

    Structural form of the cyclic shift: the bundle of the shifted word.
    """
    if b.fiber_kind != INTERVAL:
        raise InvalidBundle("cyclic shift acts on interval bundles")
    order = _interval_walk(b)
    bottom = order[0]
    d = _doubled_base(bottom, b.base_dim)
    shifted = [
        tuple(sorted((v, l - 1 if v == d else l) for v, l in cell))
        for cell in order[1:]
    ]
    top = [(d, b.fiber_sizes[d] - 2), (d, b.fiber_sizes[d] - 1)]
    top += [(v, b.fiber_sizes[v] - 1) for v in range(b.base_dim + 1) if v != d]
    shifted.append(tuple(sorted(top)))
    return ElementaryBundle(b.base_dim, INTERVAL, b.fiber_sizes, tuple(shifted))


def word_from_s_bundle(b: ElementaryBundle) -> CyclicWord:
    """Cyclic word of a circle bundle: doubled base vertices around the cycle."""
    if b.fiber_kind != CIRCLE:
        raise InvalidBundle("expected a circle bundle")
    cycle = _circle_walk(b)
    letters = tuple(_doubled_base(cell, b.base_dim) for cell in cycle)
    return canonicalize(Word(b.base_dim + 1, letters))


def restrict(b: ElementaryBundle, i: int) -> ElementaryBundle:
    """The induced bundle over the i-th face of the base simplex.

    Drops every cell doubled over base vertex ``i``, removes the remaining
    vertices over ``i`` and closes up the base numbering; fiber levels over
    the surviving vertices are untouched.
    """
    if not 0 <= i <= b.base_dim:
        raise ValueError(f"face index {i} outside base of dimension {b.base_dim}")
    if b.base_dim == 0:
        raise ValueError("cannot restrict a bundle over a point")
    order = _interval_walk(b) if b.fiber_kind == INTERVAL else _circle_walk(b)
    kept = [
        tuple(sorted((v if v < i else v - 1, l) for v, l in cell if v != i))
        for cell in order
        if _doubled_base(cell, b.base_dim) != i
    ]
    sizes = tuple(m for v, m in enumerate(b.fiber_sizes) if v != i)
    if b.fiber_kind == INTERVAL:
        return ElementaryBundle(b.base_dim - 1, INTERVAL, sizes, tuple(kept))
    return ElementaryBundle(b.base_dim - 1, CIRCLE, sizes, tuple(kept), cycle=tuple(kept))


# ---------------------------------------------------------------------------
# cell structure helpers

def _doubled_base(cell: Cell, base_dim: int) -> int:
    seen = set()
    for v, _ in cell:
        if v in seen:
            return v
        seen.add(v)
    raise InvalidBundle(f"cell {cell} has no doubled base vertex")


def _split_cell(cell: Cell, b: ElementaryBundle) -> tuple[int, list[int], dict[int, int]]:
    """Return (doubled base, its two levels, single level per other base)."""
    if len(cell) != b.base_dim + 2:
        raise InvalidBundle(f"cell {cell} has {len(cell)} vertices, expected {b.base_dim + 2}")
    levels: dict[int, list[int]] = {}
    for v, l in cell:
        if not 0 <= v <= b.base_dim:
            raise InvalidBundle(f"cell {cell} has a vertex over unknown base vertex {v}")
        if not 0 <= l < b.fiber_sizes[v]:
            raise InvalidBundle(f"cell {cell} has level {l} outside fiber over {v}")
        levels.setdefault(v, []).append(l)
    doubled = [v for v, ls in levels.items() if len(ls) == 2]
    if len(doubled) != 1 or len(levels) != b.base_dim + 1:
        raise InvalidBundle(f"cell {cell} must double exactly one base vertex")
    d = doubled[0]
    pair = sorted(levels[d])
    singles = {v: ls[0] for v, ls in levels.items() if v != d}
    return d, pair, singles


def _orientations(cell: Cell, b: ElementaryBundle) -> list[tuple[Section, Section]]:
    """(lower, upper) section readings of a cell; two when ambiguous mod 2."""
    d, (la, lb), singles = _split_cell(cell, b)
    m = b.fiber_sizes[d]

    def section(level: int) -> Section:
        return tuple(level if v == d else singles[v] for v in range(b.base_dim + 1))

    if b.fiber_kind == INTERVAL:
        if lb != la + 1:
            raise InvalidBundle(f"cell {cell} doubles base {d} at non-consecutive levels")
        return [(section(la), section(lb))]
    out = []
    if lb == (la + 1) % m:
        out.append((section(la), section(lb)))
    if la == (lb + 1) % m:
        reading = (section(lb), section(la))
        if reading not in out:
            out.append(reading)
    if not out:
        raise InvalidBundle(f"cell {cell} doubles base {d} at non-consecutive levels mod {m}")
    return out


def _interval_walk(b: ElementaryBundle) -> list[Cell]:
    """Order the cells from the all-zero section to the all-top section.

    Consecutive cells share a full section (one vertex per base vertex);
    each step raises the doubled base vertex's level by one.  Serves as the
    structural validator for interval bundles.
    """
    if b.fiber_kind != INTERVAL:
        raise InvalidBundle("expected an interval bundle")
    if any(m < 2 for m in b.fiber_sizes):
        raise InvalidBundle(f"interval fibers need at least 2 vertices, got {b.fiber_sizes}")
    if len(b.cells) != sum(m - 1 for m in b.fiber_sizes):
        raise InvalidBundle(
            f"{len(b.cells)} cells cannot fill fibers of sizes {b.fiber_sizes}"
        )
    lower_map: dict[Section, Cell] = {}
    for cell in b.cells:
        (lo, _hi), = _orientations(cell, b)
        if lo in lower_map:
            raise InvalidBundle(f"cells {lower_map[lo]} and {cell} share their lower section")
        lower_map[lo] = cell
    cursor: Section = (0,) * (b.base_dim + 1)
    order: list[Cell] = []
    for _ in range(len(b.cells)):
        cell = lower_map.get(cursor)
        if cell is None:
            raise InvalidBundle(f"no cell sits on section {cursor}; dual graph is not a path")
        order.append(cell)
        (_lo, hi), = _orientations(cell, b)
        cursor = hi
    if cursor != tuple(m - 1 for m in b.fiber_sizes):
        raise InvalidBundle("walk does not end at the top section")
    return order


def _circle_walk(b: ElementaryBundle) -> tuple[Cell, ...]:
    """Validate a circle bundle and return its dual cycle.

    Uses the stored cycle when present (checking that consecutive cells
    chain lower-to-upper and that it closes); otherwise reconstructs it,
    which needs every fiber to have at least three vertices.
    """
    if b.fiber_kind != CIRCLE:
        raise InvalidBundle("expected a circle bundle")
    if any(m < 1 for m in b.fiber_sizes):
        raise InvalidBundle("fibers must be nonempty")
    if len(b.cells) != sum(b.fiber_sizes):
        raise InvalidBundle(
            f"{len(b.cells)} cells cannot fill circle fibers of sizes {b.fiber_sizes}"
        )
    if b.cycle is not None:
        if tuple(sorted(b.cycle)) != b.cells:
            raise InvalidBundle("stored cycle does not list the cells")
        for first in _orientations(b.cycle[0], b):
            if _follow(b, first):
                return b.cycle
        raise InvalidBundle("stored cycle is not a lower-to-upper chain of sections")
    reconstructed = _with_reconstructed_cycle(b)
    return reconstructed.cycle  # type: ignore[return-value]


def _follow(b: ElementaryBundle, first: tuple[Section, Section]) -> bool:
    """Check that the stored cycle chains up with the first cell read as ``first``."""
    assert b.cycle is not None
    cursor = first[1]
    for cell in b.cycle[1:]:
        for lo, hi in _orientations(cell, b):
            if lo == cursor:
                cursor = hi
                break
        else:
            return False
    return cursor == first[0]


def _with_reconstructed_cycle(b: ElementaryBundle) -> ElementaryBundle:
    if any(m < 3 for m in b.fiber_sizes):
        raise InvalidBundle(
            "cannot reconstruct the dual cycle with fibers below 3 vertices; "
            "provide the cells in cycle order"
        )
    lower_map: dict[Section, Cell] = {}
    for cell in b.cells:
        (lo, _hi), = _orientations(cell, b)
        if lo in lower_map:
            raise InvalidBundle(f"cells {lower_map[lo]} and {cell} share their lower section")
        lower_map[lo] = cell
    start = b.cells[0]
    cycle = [start]
    (_lo, cursor), = _orientations(start, b)
    for _ in range(len(b.cells) - 1):
        nxt = lower_map.get(cursor)
        if nxt is None or nxt in cycle:
            raise InvalidBundle("dual graph is not a single cycle")
        cycle.append(nxt)
        (_lo, cursor), = _orientations(nxt, b)
    (start_lo, _), = _orientations(start, b)
    if cursor != start_lo:
        raise InvalidBundle("dual graph does not close into a cycle")
    return ElementaryBundle(b.base_dim, CIRCLE, b.fiber_sizes, b.cells, cycle=tuple(cycle))


def _least_cycle_rotation(cycle: tuple[Cell, ...]) -> tuple[Cell, ...]:
    if not cycle:
        return cycle
    best = min(range(len(cycle)), key=lambda k: cycle[k:] + cycle[:k])
    return cycle[best:] + cycle[:best]
