"""Acceptance suite: one test per criterion, every assertion exact.

Run with ``pytest tests/test_acceptance.py -v -s`` to get one pass/fail
line per criterion.
"""
import json
import os
from fractions import Fraction
from itertools import product

import pytest

from wordcurv.bundles import (
    bundle_from_word,
    glue,
    restrict,
    word_from_bundle,
    word_from_s_bundle,
)
from wordcurv.chern import TriangulatedSBundle, chern_number
from wordcurv.curvature import CURV, coboundary, curv, curv_cyclic, ind
from wordcurv.errors import SmallFiberWarning
from wordcurv.explore import enumerate_cyclic_words, survey
from wordcurv.instances import hopf_bundle, product_bundle
from wordcurv.words import (
    Permutation,
    Word,
    canonicalize,
    cyclic_shift,
    delta,
    is_cyclic_palindrome,
    mirror,
    permute_alphabet,
)

from oracles import all_valid_words

DATA = os.path.join(os.path.dirname(__file__), "data")
HALF = Fraction(1, 2)


def report(criterion: str, detail: str) -> None:
    print(f"PASS {criterion}: {detail}")


def W(text, alphabet):
    return Word.from_symbols(text, alphabet)


def test_criterion_1_golden_reference_values():
    golden = [
        (("selllesseels", "sel"), Fraction(-1, 16)),
        (("cattactact", "cat"), Fraction(1, 18)),
        (("papaspaspsa", "aps"), Fraction(1, 24)),
        (("lguguglu", "lgu"), Fraction(0)),
    ]
    for (text, alphabet), expected in golden:
        assert curv(W(text, alphabet)) == expected, text
    report("criterion 1", "four golden curvature values reproduced exactly")


def test_criterion_2_rotation_invariance_up_to_length_10():
    checked = 0
    for length in range(3, 11):
        for cw in enumerate_cyclic_words(length):
            value = curv_cyclic(cw)
            for rot in cw.rotations():
                assert curv(rot) == value, rot
                checked += 1
    report("criterion 2", f"curvature identical on all rotations ({checked} words, lengths 3..10)")


def test_criterion_3_curvature_is_a_cocycle_up_to_length_8():
    checked = 0
    for length in range(4, 9):
        for tup in all_valid_words(4, length):
            assert coboundary(CURV, Word(4, tup)) == 0
            checked += 1
    report("criterion 3", f"coboundary of the curvature vanishes on {checked} four-character words")


def test_criterion_4_symmetry_suite():
    perms = list(Permutation.all(3))
    words3 = [Word(3, t) for L in range(3, 9) for t in all_valid_words(3, L)]
    for w in words3:
        base = curv(w)
        for p in perms:
            assert curv(permute_alphabet(w, p)) == p.parity * base
        assert curv(mirror(w)) == -base
    swap = Permutation.swap(2, 0, 1)
    words2 = [Word(2, t) for L in range(2, 11) for t in all_valid_words(2, L)]
    for w in words2:
        assert ind(permute_alphabet(w, swap)) == -ind(w)
    report("criterion 4", f"parity sign rule and mirror antisymmetry on {len(words3)} words; "
           f"index swap antisymmetry on {len(words2)} words")


def test_criterion_5_range_and_extremes():
    rep = survey(3, 10)
    assert all(-HALF <= e.value <= HALF for e in rep.values)
    for p, q, r in product(range(1, 6), repeat=3):
        block = W("a" * p + "b" * q + "c" * r, "abc")
        assert curv(block) == -HALF
        assert curv(mirror(block)) == HALF
    report("criterion 5", f"{rep.total_classes} surveyed values inside [-1/2, 1/2]; "
           "125 block words attain -1/2 exactly")


def test_criterion_6_cyclic_palindromes_have_zero_curvature():
    checked = 0
    for length in range(3, 13):
        for cw in enumerate_cyclic_words(length):
            if is_cyclic_palindrome(cw):
                assert curv_cyclic(cw) == 0, cw
                checked += 1
    report("criterion 6", f"{checked} cyclic palindromes up to length 12, all curvature 0")


def test_criterion_7_word_bundle_isomorphism():
    import warnings

    shelling = 0
    for alphabet_size in (2, 3):
        for length in range(alphabet_size, 8):
            for tup in all_valid_words(alphabet_size, length):
                w = Word(alphabet_size, tup)
                b = bundle_from_word(w)
                assert word_from_bundle(b) == w
                assert bundle_from_word(word_from_bundle(b)) == b
                for i in range(alphabet_size):
                    assert word_from_bundle(restrict(b, i)) == delta(w, i)
                with warnings.catch_warnings():
                    warnings.simplefilter("ignore", SmallFiberWarning)
                    assert word_from_s_bundle(glue(b)) == canonicalize(w)
                shelling += 1
    report("criterion 7", f"round trips, face functoriality and gluing on {shelling} words")


def test_criterion_8_hopf_and_product_chern_numbers():
    assert chern_number(hopf_bundle()) == 1
    assert chern_number(hopf_bundle().reversed_orientation()) == -1
    assert chern_number(product_bundle()) == 0
    with open(os.path.join(DATA, "hopf_total.json")) as fh:
        from_totals = TriangulatedSBundle.from_json(json.load(fh))
    assert chern_number(from_totals) == 1
    report("criterion 8", "Hopf instance gives +1 (word and total-complex ingestion), "
           "product gives 0, orientation reversal negates")


def test_criterion_9_integrality_on_the_corpus():
    instances = [hopf_bundle(), hopf_bundle().reversed_orientation()]
    instances += [product_bundle(m) for m in (1, 2, 3, 4)]
    for path in ("hopf_bundle.json", "hopf_total.json", "product_bundle.json"):
        with open(os.path.join(DATA, path)) as fh:
            instances.append(TriangulatedSBundle.from_json(json.load(fh)))
    for tb in instances:
        value = chern_number(tb)
        assert isinstance(value, int)
    report("criterion 9", f"chern number an exact integer on {len(instances)} validated inputs")
