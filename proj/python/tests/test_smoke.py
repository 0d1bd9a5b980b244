import json

import pytest

import dirspec

SQUARE = [("0", "0"), ("1", "0"), ("0", "1"), ("1", "1")]


def test_square_spectrum():
    rep = dirspec.spectrum(SQUARE)
    assert rep["counts"] == [2, 3, 4]
    assert rep["vertical_count"] == 2
    assert rep["witnesses"][2]["direction"] == ("1", "0")
    assert rep["witnesses"][4]["generic"]
    assert dirspec.oracle_spectrum(SQUARE) == [2, 3, 4]


def test_stab_of_sheared_square():
    lines = [("0", "0"), ("1", "0"), ("1/3", "1"), ("4/3", "1")]
    assert dirspec.stab_spectrum(lines) == [2, 3, 4]


def test_duality_lemma_instance():
    assert dirspec.incident(("1", "-3"), ("1", "2"))
    assert dirspec.incident(("1", "2"), ("1", "-3"))


def test_cyclotomic():
    assert dirspec.cyclotomic_poly(7) == [1] * 7
    assert dirspec.cyclotomic_poly(4) == [1, 0, 1]


def test_polygon_model():
    assert all(dirspec.polygon_direction_count(7, d) == 4 for d in range(7))
    assert dirspec.polygon_spectrum_enumerated(7) == [4, 7]
    assert dirspec.polygon_spectrum_closed_form(14, True) == [7, 9, 15]
    assert "{3, 7}" in dirspec.odd_formula_discrepancy(7, False)
    assert dirspec.odd_formula_discrepancy(8, False) is None


def test_counterexample_roundtrip():
    doc = dirspec.construct(7)
    parsed = json.loads(doc)
    assert parsed["n"] == 7
    assert parsed["certificate"]["stab_counts"] == [4, 7]
    rep = dirspec.verify(doc)
    assert rep["pass"]
    assert rep["stab_counts"] == [4, 7]
    parsed["lines"][1]["a"] = parsed["lines"][0]["a"]
    assert not dirspec.verify(json.dumps(parsed))["pass"]


def test_float_crosscheck():
    counts, inconclusive = dirspec.float_crosscheck(12, 1e-6)
    assert counts == [6, 7, 12]
    assert inconclusive == 0


def test_errors():
    with pytest.raises(dirspec.ParseError):
        dirspec.spectrum([("1/0", "1")])
    with pytest.raises(dirspec.DegenerateInputError):
        dirspec.spectrum([("1", "1"), ("1", "1")])
    with pytest.raises(ValueError):
        dirspec.construct(6)
    with pytest.raises(ValueError):
        dirspec.construct(7, "center")


def test_property_checks():
    assert dirspec.duality_check(42, 500)["fail"] == 0
    assert dirspec.oracle_check(7, 50)["fail"] == 0
    assert dirspec.pinchasi_check(3, 50)["pass"] == 50
