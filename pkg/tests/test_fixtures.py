"""Checked-in JSON fixtures must stay in sync with the instance builders."""
import json
import os

from wordcurv.chern import TriangulatedSBundle
from wordcurv.instances import (
    hopf_bundle,
    hopf_triangle_bundles,
    product_bundle,
    tetrahedron_base,
)
from wordcurv.words import Word, canonicalize

DATA = os.path.join(os.path.dirname(__file__), "data")


def load(name):
    with open(os.path.join(DATA, name)) as fh:
        return json.load(fh)


def test_hopf_bundle_fixture_is_fresh():
    assert load("hopf_bundle.json") == hopf_bundle().to_json()


def test_product_bundle_fixture_is_fresh():
    assert load("product_bundle.json") == product_bundle().to_json()


def test_hopf_total_fixture_is_fresh():
    data = hopf_bundle().to_json()
    bundles = hopf_triangle_bundles()
    for entry in data["triangles"]:
        del entry["word"]
        entry["total"] = bundles[entry["id"]].to_json()
    assert load("hopf_total.json") == data


def test_non_bundle_fixture_is_fresh():
    words = ("aaabbbccc", "aaabbbccc", "aaabbbccc", "aaabbcccb")
    tb = TriangulatedSBundle(
        tetrahedron_base(),
        {f"t{t}": canonicalize(Word.from_symbols(words[t], "abc")) for t in range(4)},
    )
    assert load("non_bundle_coloring.json") == tb.to_json()
