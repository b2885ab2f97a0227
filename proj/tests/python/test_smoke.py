"""Smoke tests for the Python module: import, build, report, count, round-trip."""

import json
import math

import pytest

import simplectra as sx


def test_version_string():
    assert sx.__version__ == "1.0.0"


def test_generate_and_inspect():
    oct_ = sx.generate("octahedron")
    assert oct_.n == 6
    assert oct_.dim == 2
    assert oct_.cell_count(0) == 6
    assert oct_.cell_count(1) == 12
    assert oct_.cell_count(2) == 8
    assert oct_.euler_characteristic() == 2
    assert oct_.has_cell([0, 1, 2])
    assert not oct_.has_cell([0, 3])
    assert "n=6" in repr(oct_)


def test_from_maximal_faces_closure():
    X = sx.Complex.from_maximal_faces([[2, 1, 0]], 3)
    assert X.dim == 2
    assert X.has_cell([0, 1])
    assert X.cells(1) == [[0, 1], [0, 2], [1, 2]]


def test_spectrum_report_json():
    oct_ = sx.generate("octahedron")
    doc = json.loads(sx.spectrum_report(oct_, 0))
    assert doc["dim"] == 0
    assert doc["nontrivial"] == pytest.approx([4.0, 4.0, 4.0, 6.0, 6.0])
    assert doc["colored"] == pytest.approx([6.0, 6.0])
    assert doc["k"] == 4
    assert doc["mu"] == pytest.approx(0.0, abs=1e-9)
    assert sx.betti_number(oct_, 1) == 0


def test_gallery_counts_match():
    oct_ = sx.generate("octahedron")
    sets = [[0], [1, 4], [2, 5], [3]]
    assert sx.count_galleries(oct_, 2, sets) == 4
    spectral = sx.spectral_gallery_count(oct_, [0], [1, 4], [2, 5], [3])
    assert math.isclose(spectral, 4.0, abs_tol=1e-9)


def test_cheeger_report_holds():
    oct_ = sx.generate("octahedron")
    doc = json.loads(sx.cheeger_check(oct_, [0, 3], [1, 4], [2, 5]))
    assert doc["holds"] is True
    assert doc["lhs"] == pytest.approx(36.0)
    assert doc["details"]["lambda1"] == pytest.approx(2.0)


def test_satake_report():
    doc = json.loads(sx.satake_report(3.0, 1.0, 1.0 / 3.0, 3))
    assert doc["type"] == "e"
    assert doc["lambdaK"] == pytest.approx([0.0, 0.0], abs=1e-9)
    assert doc["lambdaE_plus"] == pytest.approx([12.0, 0.0], abs=1e-9)


def test_text_round_trip():
    oct_ = sx.generate("octahedron")
    again = sx.parse_text(oct_.to_text())
    assert again.cell_count(2) == 8
    assert sx.maximal_faces(again) == sx.maximal_faces(oct_)


def test_input_errors_are_value_errors():
    with pytest.raises(ValueError):
        sx.generate("no-such-family")
    with pytest.raises(ValueError):
        sx.Complex.from_maximal_faces([[0, 0, 1]], 3)
