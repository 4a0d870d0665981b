"""Pure and compiled kernels must agree exactly."""
import pytest
from hypothesis import given
from hypothesis import strategies as st

from wordcurv import _kernels_py

from oracles import all_valid_words, brute_canonical_reps

cython_kernels = pytest.importorskip(
    "wordcurv._kernels", reason="compiled backend not built"
)

rank_words = st.lists(st.integers(0, 2), min_size=1, max_size=40).map(bytes)


def test_backend_names():
    assert _kernels_py.BACKEND == "pure"
    assert cython_kernels.BACKEND == "cython"


def test_ind_terms_agree_exhaustively():
    for length in range(2, 12):
        for tup in all_valid_words(2, length):
            w = bytes(tup)
            assert cython_kernels.ind_terms(w) == _kernels_py.ind_terms(w)


def test_curv_terms_agree_exhaustively():
    for length in range(3, 9):
        for tup in all_valid_words(3, length):
            w = bytes(tup)
            assert cython_kernels.curv_terms(w) == _kernels_py.curv_terms(w)


@given(rank_words)
def test_least_rotation_agrees(w):
    assert cython_kernels.least_rotation(w) == _kernels_py.least_rotation(w)


@given(rank_words)
def test_cyclic_palindrome_agrees(w):
    assert cython_kernels.cyclic_palindrome(w) == _kernels_py.cyclic_palindrome(w)


@pytest.mark.parametrize("length", range(1, 13))
def test_canonical_words_agree(length):
    assert cython_kernels.canonical_words(length, 3) == _kernels_py.canonical_words(length, 3)


@pytest.mark.parametrize("alphabet_size", [1, 2, 4])
def test_canonical_words_other_alphabets(alphabet_size):
    for length in range(1, 9):
        assert (cython_kernels.canonical_words(length, alphabet_size)
                == _kernels_py.canonical_words(length, alphabet_size))


def test_canonical_words_match_brute_force():
    for length in range(3, 9):
        got = [tuple(w) for w in cython_kernels.canonical_words(length, 3)]
        assert got == brute_canonical_reps(length, 3)


def test_long_words_fall_back_to_exact_arithmetic():
    w = bytes([0, 1, 2] * 500)  # beyond the 64-bit fast path
    assert cython_kernels.curv_terms(w) == _kernels_py.curv_terms(w)
    w2 = bytes([0, 1] * 800)
    assert cython_kernels.ind_terms(w2) == _kernels_py.ind_terms(w2)


def test_error_cases_agree():
    for kern in (cython_kernels, _kernels_py):
        with pytest.raises(ValueError):
            kern.ind_terms(bytes([0, 0]))
        with pytest.raises(ValueError):
            kern.curv_terms(bytes([0, 1, 1]))
        with pytest.raises(ValueError):
            kern.least_rotation(b"")
        with pytest.raises(ValueError):
            kern.canonical_words(0, 3)
