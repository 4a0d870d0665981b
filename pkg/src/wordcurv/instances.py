"""Ready-made triangulated circle bundles over the boundary of a tetrahedron.

The base is the face complex of the tetrahedron on vertices 0..3: triangle
``t{k}`` omits vertex ``k`` and enters the fundamental cycle with sign
``(-1)**k``.

Two instances are provided:

* :func:`product_bundle` carries the word ``(abc)^m`` on every triangle --
  the trivial bundle, Chern number 0;
* :func:`hopf_bundle` carries a fixed coloring whose per-triangle total
  spaces glue (with the frozen fiber offsets) into a closed 3-manifold with
  trivial first homology, i.e. a triangulation of the 3-sphere fibered by
  circles: the Hopf fibration.  Its Chern number is +1, which fixes the
  orientation conventions of the whole package.

:func:`hopf_total_tetrahedra` exposes the 36 tetrahedra of that global
complex on the 12 vertices ``(base_vertex, fiber_position)``; the test
suite re-checks manifoldness and homology from it.
"""
from __future__ import annotations

import warnings

from .bundles import ElementaryBundle, bundle_from_word, glue
from .chern import BaseTriangle, TriangulatedSBundle
from .words import Word, canonicalize

TETRA_TRIANGLES: tuple[tuple[int, int, int], ...] = tuple(
    tuple(v for v in range(4) if v != t) for t in range(4)
)

# One cyclic word per triangle t0..t3 (characters a,b,c = the triangle's
# vertices in increasing order), plus per-vertex fiber rotations making the
# four total spaces agree on shared edges.  Found by exhaustive search over
# edge-compatible colorings with three fiber vertices per base vertex.
HOPF_WORDS: tuple[str, ...] = ("aacbaccbb", "aabbcabcc", "aacbaccbb", "aabccabbc")
HOPF_OFFSETS: tuple[tuple[int, int, int], ...] = ((1, 2, 0), (0, 0, 0), (0, 0, 0), (0, 0, 0))


def tetrahedron_base() -> tuple[BaseTriangle, ...]:
    """The four oriented triangles of the tetrahedron boundary."""
    return tuple(
        BaseTriangle(f"t{t}", TETRA_TRIANGLES[t], (-1) ** t) for t in range(4)
    )


def product_bundle(fiber_size: int = 3) -> TriangulatedSBundle:
    """The trivial bundle: word ``(abc)^fiber_size`` over every triangle."""
    if fiber_size < 1:
        raise ValueError("fiber_size must be positive")
    word = canonicalize(Word.from_symbols("abc" * fiber_size, "abc"))
    triangles = tetrahedron_base()
    return TriangulatedSBundle(triangles, {t.id: word for t in triangles})


def hopf_bundle() -> TriangulatedSBundle:
    """A triangulated Hopf fibration; its Chern number is +1."""
    triangles = tetrahedron_base()
    words = {
        f"t{t}": canonicalize(Word.from_symbols(HOPF_WORDS[t], "abc"))
        for t in range(4)
    }
    return TriangulatedSBundle(triangles, words)


def product_triangle_bundles(fiber_size: int = 3) -> dict[str, ElementaryBundle]:
    """Per-triangle elementary circle bundles of the product instance."""
    word = Word.from_symbols("abc" * fiber_size, "abc")
    return {f"t{t}": _glued(word) for t in range(4)}


def hopf_triangle_bundles() -> dict[str, ElementaryBundle]:
    """Per-triangle elementary circle bundles of the Hopf instance.

    Fiber levels carry the frozen offsets, so mapping local vertex ``r`` of
    triangle ``t{k}`` to global vertex ``TETRA_TRIANGLES[k][r]`` makes the
    four total spaces literally share their cells over common edges.
    """
    out = {}
    for t in range(4):
        bundle = _glued(Word.from_symbols(HOPF_WORDS[t], "abc"))
        out[f"t{t}"] = _rotate_fibers(bundle, HOPF_OFFSETS[t])
    return out


def hopf_total_tetrahedra() -> tuple[frozenset[tuple[int, int]], ...]:
    """The 36 tetrahedra of the global Hopf total complex.

    Vertices are pairs ``(base_vertex, fiber_position)`` with base vertices
    0..3 and three fiber positions each.
    """
    tets = []
    bundles = hopf_triangle_bundles()
    for t in range(4):
        tri = TETRA_TRIANGLES[t]
        for cell in bundles[f"t{t}"].cells:
            tets.append(frozenset((tri[r], l) for r, l in cell))
    return tuple(tets)


def _glued(word: Word) -> ElementaryBundle:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return glue(bundle_from_word(word))


def _rotate_fibers(b: ElementaryBundle, offsets: tuple[int, ...]) -> ElementaryBundle:
    def shift(cell):
        return tuple(sorted((r, (l + offsets[r]) % b.fiber_sizes[r]) for r, l in cell))

    cells = tuple(shift(c) for c in b.cells)
    cycle = tuple(shift(c) for c in b.cycle) if b.cycle else None
    return ElementaryBundle(b.base_dim, b.fiber_kind, b.fiber_sizes, cells, cycle=cycle)
