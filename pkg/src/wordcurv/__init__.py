"""Exact curvature of cyclic words and Chern numbers of triangulated circle bundles.

A word over an ordered alphabet encodes an elementary interval bundle over a
simplex; a cyclic word encodes an elementary circle bundle.  The curvature
of a cyclic 3-character word is an exact rational in [-1/2, 1/2], invariant
under rotation, and summing it with orientation signs over the triangles of
a triangulated closed oriented surface yields the Chern number of the circle
bundle the words describe.
"""
from ._backend import BACKEND
from .bundles import (
    CIRCLE,
    INTERVAL,
    ElementaryBundle,
    bundle_from_word,
    cyclic_shift_bundle,
    glue,
    restrict,
    word_from_bundle,
    word_from_s_bundle,
)
from .chern import (
    BaseTriangle,
    CycleReport,
    TriangulatedSBundle,
    chern_number,
    gauss_word,
    validate_cycle,
)
from .curvature import CURV, IND, CochainFn, Rational, coboundary, curv, curv_cyclic, ind
from .errors import (
    DegenerateFiber,
    DegreeMismatch,
    InvalidBundle,
    InvalidInput,
    MissingCharacter,
    NotAnNWord,
    NotAOneWord,
    NotATwoWord,
    SmallFiberWarning,
    ValidationGap,
    WordCurvError,
)
from .explore import SurveyReport, enumerate_cyclic_words, find_zero_nonpalindromes, survey
from .words import (
    CyclicWord,
    Permutation,
    Word,
    canonicalize,
    cyclic_shift,
    delta,
    is_cyclic_palindrome,
    mirror,
    permute_alphabet,
    validate_n_word,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BaseTriangle",
    "CIRCLE",
    "CURV",
    "CochainFn",
    "CycleReport",
    "CyclicWord",
    "DegenerateFiber",
    "DegreeMismatch",
    "ElementaryBundle",
    "IND",
    "INTERVAL",
    "InvalidBundle",
    "InvalidInput",
    "MissingCharacter",
    "NotAOneWord",
    "NotATwoWord",
    "NotAnNWord",
    "Permutation",
    "Rational",
    "SmallFiberWarning",
    "SurveyReport",
    "TriangulatedSBundle",
    "ValidationGap",
    "Word",
    "WordCurvError",
    "bundle_from_word",
    "canonicalize",
    "chern_number",
    "coboundary",
    "curv",
    "curv_cyclic",
    "cyclic_shift",
    "cyclic_shift_bundle",
    "delta",
    "enumerate_cyclic_words",
    "find_zero_nonpalindromes",
    "gauss_word",
    "glue",
    "ind",
    "is_cyclic_palindrome",
    "mirror",
    "permute_alphabet",
    "restrict",
    "survey",
    "validate_cycle",
    "validate_n_word",
    "word_from_bundle",
    "word_from_s_bundle",
    "__version__",
]
