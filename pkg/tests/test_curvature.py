from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wordcurv.curvature import CURV, IND, CochainFn, coboundary, curv, curv_cyclic, ind
from wordcurv.errors import DegreeMismatch, NotAOneWord, NotATwoWord
from wordcurv.words import (
    Permutation,
    Word,
    canonicalize,
    cyclic_shift,
    delta,
    mirror,
    permute_alphabet,
)

from oracles import all_valid_words, maple_curv, maple_index

HALF = Fraction(1, 2)


def W(text, alphabet):
    return Word.from_symbols(text, alphabet)


def two_words(max_len, min_len=3):
    for length in range(min_len, max_len + 1):
        for tup in all_valid_words(3, length):
            yield Word(3, tup)


# ---------------------------------------------------------------------------
# ind

def test_ind_single_pair():
    assert ind(W("ab", "ab")) == Fraction(-1, 2)


def test_ind_mirror_symmetric_word():
    assert ind(W("abba", "ab")) == 0


def test_ind_attatat():
    assert ind(W("attatat", "at")) == Fraction(-1, 12)


def test_ind_requires_both_characters():
    with pytest.raises(NotAOneWord):
        ind(W("aaa", "ab"))
    with pytest.raises(NotAOneWord):
        ind(W("abc", "abc"))


def test_ind_matches_oracle_exhaustively():
    for length in range(2, 11):
        for tup in all_valid_words(2, length):
            w = Word(2, tup)
            assert ind(w) == maple_index("a", "b", w.to_symbols("ab"))


@pytest.mark.parametrize("length", range(2, 11))
def test_ind_swap_antisymmetry(length):
    swap = Permutation.swap(2, 0, 1)
    for tup in all_valid_words(2, length):
        w = Word(2, tup)
        assert ind(permute_alphabet(w, swap)) == -ind(w)


# ---------------------------------------------------------------------------
# curv: reference values

def test_curv_reference_values():
    assert curv(W("selllesseels", "sel")) == Fraction(-1, 16)
    assert curv(W("cattactact", "cat")) == Fraction(1, 18)
    assert curv(W("papaspaspsa", "aps")) == Fraction(1, 24)
    assert curv(W("lguguglu", "lgu")) == 0


def test_curv_block_word_sign():
    assert curv(W("abc", "abc")) == -HALF
    assert abs(curv(W("abc", "abc"))) == HALF


def test_curv_requires_all_characters():
    with pytest.raises(NotATwoWord):
        curv(W("abab", "abc"))
    with pytest.raises(NotATwoWord):
        curv(W("ab", "ab"))


def test_curv_matches_oracle_exhaustively():
    for w in two_words(7):
        assert curv(w) == maple_curv("a", "b", "c", w.to_symbols("abc"))


# ---------------------------------------------------------------------------
# curv: invariances

def test_curv_cyclic_shift_invariance_small():
    for w in two_words(8):
        assert curv(cyclic_shift(w)) == curv(w)


def test_curv_cyclic_evaluates_canonical_rep():
    cw = canonicalize(W("tcattactac", "cat"))
    assert curv_cyclic(cw) == Fraction(1, 18)
    assert curv_cyclic(canonicalize(W("cattactact", "cat"))) == Fraction(1, 18)
    assert curv_cyclic(canonicalize(W("lguguglu", "lgu"))) == 0


def test_shift_lemma_adjustment_is_plus_one_over_k0():
    # with this sign convention the two affected summands gain +1/k0 when
    # the leading highest character jumps to the end (the reference text
    # states the opposite sign; the exhaustive check picks this one)
    for w in two_words(7):
        if w.letters[0] != 0:
            continue
        k0 = w.counts()[0]
        shifted = cyclic_shift(w)
        assert delta(shifted, 0) == delta(w, 0)
        for i in (1, 2):
            assert ind(delta(shifted, i)) == ind(delta(w, i)) + Fraction(1, k0)


def test_curv_permutation_parity_sign():
    perms = list(Permutation.all(3))
    for w in two_words(6):
        base = curv(w)
        for p in perms:
            assert curv(permute_alphabet(w, p)) == p.parity * base


def test_curv_mirror_antisymmetry():
    for w in two_words(7):
        assert curv(mirror(w)) == -curv(w)


def test_curv_range_small():
    for w in two_words(7):
        assert -HALF <= curv(w) <= HALF


def test_cyclic_palindrome_curvature_vanishes_small():
    from wordcurv.words import is_cyclic_palindrome

    for w in two_words(8):
        cw = canonicalize(w)
        if is_cyclic_palindrome(cw):
            assert curv_cyclic(cw) == 0


# ---------------------------------------------------------------------------
# cochains and coboundaries

def test_curv_is_coboundary_of_ind():
    for w in two_words(7):
        assert coboundary(IND, w) == curv(w)


def test_coboundary_of_curv_vanishes_small():
    for length in range(4, 7):
        for tup in all_valid_words(4, length):
            assert coboundary(CURV, Word(4, tup)) == 0


def test_coboundary_of_zero_cochain():
    zero = CochainFn(1, lambda w: Fraction(0))
    assert coboundary(zero, W("abc", "abc")) == 0


def test_coboundary_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        coboundary(IND, W("ab", "ab"))
    with pytest.raises(DegreeMismatch):
        CURV(W("ab", "ab"))


@given(st.lists(st.sampled_from([0, 1, 2]), min_size=3, max_size=14))
def test_curv_rotation_invariance_random(letters):
    if len(set(letters)) < 3:
        return
    w = Word(3, tuple(letters))
    assert curv(cyclic_shift(w)) == curv(w)
