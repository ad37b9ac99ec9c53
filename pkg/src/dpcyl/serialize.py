"""JSON wire formats: surfaces, verdicts, curve sets and fixtures.

Surface schema::

    {
      "degree": 1..8,
      "roots": [[int, ...], ...],            # basis order: l, e1, ..  (M, F for degree 8)
      "galois": {"matrices": [[[int, ...], ...], ...]},
      "point_flags": {"A5.0": true, ...},    # keys are canonical point ids
      "assert_rank_one": false,              # optional
      "name": "...",                         # optional
      "expected": {...}                      # optional fixture metadata, ignored on load
    }

Matrices act on coefficient columns; verdicts serialize as
{"answer", "rule", "trace": [{"cite", "quote"}], "construction_case"}.
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources
from typing import Any

from .curves import CurveSet, form_for_degree
from .galois import SurfaceOverK
from .oracle import Verdict
from .singularities import SingularityProfile, validate_config


class SurfaceFormatError(ValueError):
    """Raised with a field path when surface JSON cannot be parsed."""


def _expect(cond: bool, path: str, message: str):
    if not cond:
        raise SurfaceFormatError(f"{path}: {message}")


def _int_matrix(obj: Any, path: str, square: int | None = None):
    _expect(isinstance(obj, list) and obj, path, "expected a nonempty array")
    rows = []
    for i, row in enumerate(obj):
        _expect(isinstance(row, list), f"{path}[{i}]", "expected an array")
        for j, x in enumerate(row):
            _expect(isinstance(x, int) and not isinstance(x, bool), f"{path}[{i}][{j}]", "expected an integer")
        rows.append(tuple(row))
    if square is not None:
        _expect(len(rows) == square and all(len(r) == square for r in rows), path, f"expected a {square}x{square} matrix")
    return tuple(rows)


def surface_from_dict(data: dict) -> SurfaceOverK:
    _expect(isinstance(data, dict), "$", "expected an object")
    _expect("degree" in data, "$.degree", "missing")
    d = data["degree"]
    _expect(isinstance(d, int) and 1 <= d <= 8, "$.degree", "expected an integer in 1..8")
    form = form_for_degree(d)
    _expect(isinstance(data.get("roots"), list), "$.roots", "expected an array")
    roots = []
    for i, r in enumerate(data["roots"]):
        _expect(isinstance(r, list) and len(r) == form.rank, f"$.roots[{i}]",
                f"expected an array of {form.rank} integers")
        for j, x in enumerate(r):
            _expect(isinstance(x, int) and not isinstance(x, bool), f"$.roots[{i}][{j}]", "expected an integer")
        roots.append(tuple(r))
    try:
        profile = validate_config(form, roots)
    except Exception as exc:
        raise SurfaceFormatError(f"$.roots: {exc}") from exc
    matrices: tuple = ()
    if "galois" in data:
        gal = data["galois"]
        _expect(isinstance(gal, dict), "$.galois", "expected an object")
        mats = gal.get("matrices", [])
        _expect(isinstance(mats, list), "$.galois.matrices", "expected an array")
        matrices = tuple(
            _int_matrix(m, f"$.galois.matrices[{i}]", square=form.rank) for i, m in enumerate(mats)
        )
    flags = {}
    for key, val in (data.get("point_flags") or {}).items():
        _expect(isinstance(val, bool), f"$.point_flags.{key}", "expected a boolean")
        try:
            profile.point_by_id(key)
        except KeyError:
            raise SurfaceFormatError(f"$.point_flags.{key}: unknown point id")
        flags[key] = val
    assertion = data.get("assert_rank_one")
    _expect(assertion is None or isinstance(assertion, bool), "$.assert_rank_one", "expected a boolean")
    return SurfaceOverK(profile, matrices, flags, assertion, data.get("name"))


def surface_to_dict(surface: SurfaceOverK, expected: dict | None = None) -> dict:
    out: dict[str, Any] = {
        "degree": surface.degree,
        "roots": [list(r) for r in surface.profile.simple_roots],
        "galois": {"matrices": [[list(row) for row in m] for m in surface.generators]},
        "point_flags": dict(surface.point_flags),
    }
    if surface.rank_one_assertion is not None:
        out["assert_rank_one"] = surface.rank_one_assertion
    if surface.name:
        out["name"] = surface.name
    if expected is not None:
        out["expected"] = expected
    return out


def load_surface(path) -> SurfaceOverK:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SurfaceFormatError(f"$: invalid JSON ({exc})") from exc
    surf = surface_from_dict(data)
    return surf


def verdict_to_dict(v: Verdict) -> dict:
    return {
        "answer": v.answer,
        "rule": v.rule,
        "trace": [{"cite": c, "quote": q} for c, q in v.trace],
        "construction_case": v.construction_case,
    }


def verdict_from_dict(data: dict) -> Verdict:
    return Verdict(
        data["answer"],
        data["rule"],
        tuple((t["cite"], t["quote"]) for t in data["trace"]),
        data.get("construction_case"),
    )


def curveset_to_list(cs: CurveSet) -> list[list[int]]:
    return [list(c) for c in cs.classes]


def profile_to_dict(profile: SingularityProfile, name: str | None = None) -> dict:
    out = {"degree": profile.degree, "roots": [list(r) for r in profile.simple_roots]}
    if name:
        out["name"] = name
    return out


def fixtures_dir():
    return resources.files("dpcyl") / "fixtures"


@lru_cache(maxsize=None)
def load_fixture_surfaces() -> dict:
    """All shipped fixtures as {name: (catalog row, surface)}."""
    from .catalog import row_by_name

    out = {}
    for entry in sorted(fixtures_dir().iterdir(), key=lambda e: e.name):
        if not entry.name.endswith(".json"):
            continue
        data = json.loads(entry.read_text(encoding="utf-8"))
        surf = surface_from_dict(data)
        name = data.get("name") or entry.name[:-5]
        out[name] = (row_by_name(name), surf)
    return out


def fixture_expected(name: str) -> dict:
    data = json.loads((fixtures_dir() / f"{name}.json").read_text(encoding="utf-8"))
    return data.get("expected", {})
