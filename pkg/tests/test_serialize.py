import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dpcyl.oracle import Verdict, decide
from dpcyl.serialize import (
    SurfaceFormatError,
    load_fixture_surfaces,
    surface_from_dict,
    surface_to_dict,
    verdict_from_dict,
    verdict_to_dict,
)


def test_surface_roundtrip_all_fixtures():
    for name, (row, surf) in load_fixture_surfaces().items():
        data = surface_to_dict(surf)
        again = surface_from_dict(json.loads(json.dumps(data)))
        assert again.degree == surf.degree
        assert again.profile.simple_roots == surf.profile.simple_roots
        assert again.generators == surf.generators
        assert again.point_flags == surf.point_flags


def test_verdict_roundtrip():
    for name, (row, surf) in list(load_fixture_surfaces().items())[:10]:
        v = decide(surf)
        again = verdict_from_dict(json.loads(json.dumps(verdict_to_dict(v))))
        assert again == v


def test_missing_degree():
    with pytest.raises(SurfaceFormatError, match=r"\$\.degree"):
        surface_from_dict({"roots": []})


def test_bad_root_vector_reports_path():
    with pytest.raises(SurfaceFormatError, match=r"\$\.roots\[0\]"):
        surface_from_dict({"degree": 3, "roots": [[1, 0]]})


def test_non_integer_entry_reports_path():
    with pytest.raises(SurfaceFormatError, match=r"roots\[0\]\[1\]"):
        surface_from_dict({"degree": 3, "roots": [[0, 0.5, 0, 0, 0, 0, 0]]})


def test_non_root_class_rejected():
    with pytest.raises(SurfaceFormatError, match=r"\$\.roots"):
        surface_from_dict({"degree": 3, "roots": [[1, 0, 0, 0, 0, 0, 0]]})


def test_wrong_matrix_shape_rejected():
    with pytest.raises(SurfaceFormatError, match="matrices"):
        surface_from_dict(
            {"degree": 3, "roots": [], "galois": {"matrices": [[[1, 0], [0, 1]]]}}
        )


def test_unknown_point_flag_rejected():
    with pytest.raises(SurfaceFormatError, match="point_flags"):
        surface_from_dict(
            {"degree": 3, "roots": [[0, 1, -1, 0, 0, 0, 0]], "point_flags": {"A7.0": True}}
        )


def test_flag_value_must_be_boolean():
    with pytest.raises(SurfaceFormatError, match="point_flags"):
        surface_from_dict(
            {"degree": 3, "roots": [[0, 1, -1, 0, 0, 0, 0]], "point_flags": {"A1.0": 1}}
        )
