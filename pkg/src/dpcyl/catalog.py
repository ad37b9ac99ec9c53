"""Built-in catalog of rank-one surface models, one per classified type.

Every row records a degree, a type name (with the prime or line-count
variant when the singularity multiset alone is ambiguous), the rank of
the fixed sublattice of its Galois action, the action's shape as
component operations, and the verdict the row illustrates.  The builder
searches root embeddings and integral isometries matching the row; the
results are shipped as JSON fixtures and reloaded from there at runtime.

Row groups:

* ``rational-point``: degrees 3..8 admitting a rational singular point
  (these carry a construction-case label);
* ``no-rational-point``: degrees 3..4 with no rational singular point;
* ``big-singularity``: degrees 1..2 decided by the big-type or
  double-prime clauses;
* ``minus-decoration``: degrees 1..2 decided by a minus decoration;
* ``no-cylinder``: degrees 1..2 negative rows;
* ``worked-example``: the explicit example surfaces.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

from .actions import find_action
from .embeddings import (
    indices_to_profile,
    iter_embeddings_idx,
    line_count_idx,
    line_count_values,
    parse_components,
    system_data,
)
from .galois import SurfaceOverK
from .singularities import DOUBLE_PRIME, PRIME, SingularityProfile

IDENTITY = "identity"
POINTWISE = "pointwise"  # all components fixed pointwise, action moves lines only


@dataclass(frozen=True)
class CatalogRow:
    group: str
    degree: int
    type_name: str
    rho_tilde: int
    gen_specs: tuple  # tuple of op tuples, or IDENTITY / POINTWISE
    expected_answer: str
    expected_rule: str
    construction_case: Optional[int] = None
    point_flags: tuple[tuple[str, bool], ...] = ()
    tag: str = ""

    @property
    def name(self) -> str:
        slug = (
            self.type_name.replace("+", "-")
            .replace("(", "")
            .replace(")", "")
            .replace("''", "pp")
            .replace("'", "p")
            .lower()
        )
        base = f"d{self.degree}-{slug}"
        return f"{base}-{self.tag}" if self.tag else base


def parse_type_name(name: str) -> tuple[str, Optional[str], Optional[int]]:
    """Split a type name into (singularities, prime-variant, line-variant)."""
    m = re.fullmatch(r"\((.+)\)('{1,2})", name)
    if m:
        return m.group(1), (PRIME if m.group(2) == "'" else DOUBLE_PRIME), None
    m = re.fullmatch(r"(.+)\((\d)\)", name)
    if m:
        return m.group(1), None, int(m.group(2))
    return name, None, None


Y, N = "contains_cylinder", "no_cylinder"

_R = []


def _row(group, degree, type_name, rho, specs, answer, rule, case=None, flags=(), tag=""):
    _R.append(
        CatalogRow(group, degree, type_name, rho, specs, answer, rule, case, tuple(flags), tag)
    )


# degrees 3..8, a rational singular point, always a cylinder
_row("rational-point", 8, "A1", 2, IDENTITY, Y, "Deg5Plus", 9)
_row("rational-point", 6, "A2+A1", 4, IDENTITY, Y, "Deg5Plus", 1)
_row("rational-point", 6, "A2", 3, POINTWISE, Y, "Deg5Plus", 6)
_row("rational-point", 6, "A1(1)", 2, POINTWISE, Y, "Deg5Plus", 1)
_row("rational-point", 5, "A4", 5, IDENTITY, Y, "Deg5Plus", 1)
_row("rational-point", 4, "D5", 6, IDENTITY, Y, "Deg34-KRationalNonA1pp", 1)
_row("rational-point", 4, "A3+2A1", 6, IDENTITY, Y, "Deg34-KRationalNonA1pp", 10)
_row("rational-point", 4, "D4", 4, ((("flip", 0),),), Y, "Deg34-KRationalNonA1pp", 6)
_row("rational-point", 4, "A3+A1", 5, POINTWISE, Y, "Deg34-KRationalNonA1pp", 2)
_row("rational-point", 4, "A2+2A1", 3, ((("flip", 0), ("swap", 1, 2)),), Y, "Deg34-KRationalNonA1pp", 4)
_row("rational-point", 4, "4A1", 4, ((("fix", 0), ("fix", 1), ("swap", 2, 3)),), Y, "Deg34-KRationalNonA1pp", 8)
_row("rational-point", 4, "A3(1)", 4, POINTWISE, Y, "Deg34-KRationalNonA1pp", 10)
_row("rational-point", 4, "3A1", 3, ((("fix", 0), ("swap", 1, 2)),), Y, "Deg34-KRationalNonA1pp", 5)
_row("rational-point", 4, "A2", 2, ((("flip", 0),),), Y, "Deg34-KRationalNonA1pp", 4)
_row("rational-point", 4, "2A1(1)", 3, POINTWISE, Y, "Deg34-KRationalNonA1pp", 8)
_row("rational-point", 4, "A1", 2, POINTWISE, Y, "Deg34-KRationalNonA1pp", 5)
_row("rational-point", 3, "E6", 7, IDENTITY, Y, "Deg34-KRationalNonA1pp", 1)
_row("rational-point", 3, "A5+A1", 7, IDENTITY, Y, "Deg34-KRationalNonA1pp", 2)
_row("rational-point", 3, "3A2", 7, IDENTITY, Y, "Deg34-KRationalNonA1pp", 2)
_row("rational-point", 3, "A5", 6, POINTWISE, Y, "Deg34-KRationalNonA1pp", 2)
_row("rational-point", 3, "2A2+A1", 4, ((("swap", 0, 1), ("fix", 2)),), Y, "Deg34-KRationalNonA1pp", 3)
_row("rational-point", 3, "D4", 3, ((("flip", 0),),), Y, "Deg34-KRationalNonA1pp", 1)
_row("rational-point", 3, "2A2", 5, POINTWISE, Y, "Deg34-KRationalNonA1pp", 7)
_row("rational-point", 3, "4A1", 3, ((("fix", 0), ("cycle", (1, 2, 3))),), Y, "Deg34-KRationalNonA1pp", 3)
_row("rational-point", 3, "A2", 3, POINTWISE, Y, "Deg34-KRationalNonA1pp", 2)
_row("rational-point", 3, "A1", 2, POINTWISE, Y, "Deg34-KRationalNonA1pp", 3)

# degrees 3..4, no rational singular point, never a cylinder
_row("no-rational-point", 4, "4A1", 2, ((("cycle", (0, 1, 2, 3)),),), N, "Deg34-None", tag="nopoint")
_row("no-rational-point", 4, "2A1(1)", 2, ((("swap", 0, 1),),), N, "Deg34-None", tag="nopoint")
_row("no-rational-point", 3, "3A2", 2, ((("cycle", (0, 1, 2)),), (("swap", 0, 1), ("flip", 2))), N, "Deg34-None", tag="nopoint")
_row("no-rational-point", 3, "2A2", 3, ((("swap", 0, 1),),), N, "Deg34-None", tag="nopoint")
_row("no-rational-point", 3, "4A1", 2, ((("cycle", (0, 1, 2, 3)),), (("swap", 0, 1), ("fix", 2), ("fix", 3))), N, "Deg34-None", tag="nopoint")
_row("no-rational-point", 3, "3A1", 2, ((("cycle", (0, 1, 2)),),), N, "Deg34-None", tag="nopoint")

# degrees 1..2, big-type and double-prime clauses
_row("big-singularity", 2, "D4", 5, POINTWISE, Y, "LowDeg-BigSingList")
_row("big-singularity", 2, "D4+A1", 6, POINTWISE, Y, "LowDeg-BigSingList")
_row("big-singularity", 2, "D4+2A1", 7, POINTWISE, Y, "LowDeg-BigSingList")
_row("big-singularity", 2, "D4+3A1", 8, IDENTITY, Y, "LowDeg-BigSingList")
_row("big-singularity", 2, "A6", 4, ((("flip", 0),),), Y, "LowDeg-BigSingList")
_row("big-singularity", 2, "A7", 8, IDENTITY, Y, "LowDeg-BigSingList")
_row("big-singularity", 2, "D5", 5, ((("flip", 0),),), Y, "LowDeg-BigSingList")
_row("big-singularity", 2, "D5+A1", 6, ((("flip", 0), ("fix", 1)),), Y, "LowDeg-BigSingList")
_row("big-singularity", 2, "D6", 7, POINTWISE, Y, "LowDeg-BigSingList")
_row("big-singularity", 2, "D6+A1", 8, IDENTITY, Y, "LowDeg-BigSingList")
_row("big-singularity", 2, "E6", 5, ((("flip", 0),),), Y, "LowDeg-BigSingList")
_row("big-singularity", 2, "E7", 8, IDENTITY, Y, "LowDeg-BigSingList")
_row("big-singularity", 2, "(A5)''", 4, ((("flip", 0),),), Y, "LowDeg-DoublePrime")
_row("big-singularity", 1, "A8", 9, IDENTITY, Y, "LowDeg-BigSingList")
_row("big-singularity", 1, "D6", 7, POINTWISE, Y, "LowDeg-BigSingList")
_row("big-singularity", 1, "D6+A1", 8, POINTWISE, Y, "LowDeg-BigSingList")
_row("big-singularity", 1, "D6+2A1", 9, IDENTITY, Y, "LowDeg-BigSingList")
_row("big-singularity", 1, "D7", 7, ((("flip", 0),),), Y, "LowDeg-BigSingList")
_row("big-singularity", 1, "D8", 9, IDENTITY, Y, "LowDeg-BigSingList")
_row("big-singularity", 1, "E7", 8, POINTWISE, Y, "LowDeg-BigSingList")
_row("big-singularity", 1, "E7+A1", 9, IDENTITY, Y, "LowDeg-BigSingList")
_row("big-singularity", 1, "E8", 9, IDENTITY, Y, "LowDeg-BigSingList")
_row("big-singularity", 1, "(A7)''", 5, ((("flip", 0),),), Y, "LowDeg-DoublePrime")

# degrees 1..2, decided by a minus decoration
_row("minus-decoration", 2, "A5+A2", 8, IDENTITY, Y, "LowDeg-MinusDecoration")
_row("minus-decoration", 2, "2A3+A1", 8, IDENTITY, Y, "LowDeg-MinusDecoration")
_row("minus-decoration", 2, "2A3", 7, POINTWISE, Y, "LowDeg-MinusDecoration")
_row("minus-decoration", 2, "A3+3A1", 6, ((("fix", 0), ("fix", 1), ("swap", 2, 3)),), Y, "LowDeg-MinusDecoration")
_row("minus-decoration", 2, "3A2", 5, ((("fix", 0), ("swap", 1, 2)),), Y, "LowDeg-MinusDecoration")
_row("minus-decoration", 2, "(A5)'", 6, POINTWISE, Y, "LowDeg-MinusDecoration")
_row("minus-decoration", 2, "(A3+2A1)''", 5, ((("fix", 0), ("swap", 1, 2)),), Y, "LowDeg-MinusDecoration")
_row("minus-decoration", 2, "A2+3A1", 4, ((("fix", 0), ("cycle", (1, 2, 3))),), Y, "LowDeg-MinusDecoration")
_row("minus-decoration", 2, "(A3+A1)'", 5, POINTWISE, Y, "LowDeg-MinusDecoration")
_row("minus-decoration", 2, "A3", 4, POINTWISE, Y, "LowDeg-MinusDecoration")
_row("minus-decoration", 2, "A2", 3, POINTWISE, Y, "LowDeg-MinusDecoration")
_row("minus-decoration", 1, "A7+A1", 9, IDENTITY, Y, "LowDeg-MinusDecoration")
_row("minus-decoration", 1, "E6+A2", 9, IDENTITY, Y, "LowDeg-MinusDecoration")
_row("minus-decoration", 1, "D5+A3", 9, IDENTITY, Y, "LowDeg-MinusDecoration")
_row("minus-decoration", 1, "A5+A2+A1", 9, IDENTITY, Y, "LowDeg-MinusDecoration")
_row("minus-decoration", 1, "2A4", 9, IDENTITY, Y, "LowDeg-MinusDecoration")
_row("minus-decoration", 1, "(A7)'", 8, POINTWISE, Y, "LowDeg-MinusDecoration")
_row("minus-decoration", 1, "D5+2A1", 7, ((("fix", 0), ("swap", 1, 2)),), Y, "LowDeg-MinusDecoration")
_row("minus-decoration", 1, "A5+A2", 8, POINTWISE, Y, "LowDeg-MinusDecoration")
_row("minus-decoration", 1, "E6", 7, POINTWISE, Y, "LowDeg-MinusDecoration")
_row("minus-decoration", 1, "(A5+A1)'", 7, POINTWISE, Y, "LowDeg-MinusDecoration")
_row("minus-decoration", 1, "D5", 6, POINTWISE, Y, "LowDeg-MinusDecoration")
_row("minus-decoration", 1, "A5", 6, POINTWISE, Y, "LowDeg-MinusDecoration")
_row("minus-decoration", 1, "A4", 5, POINTWISE, Y, "LowDeg-MinusDecoration")

# degrees 1..2, negative rows
_row("no-cylinder", 1, "2D4", 9, IDENTITY, N, "LowDeg-SmallSingOnly")
_row("no-cylinder", 1, "D4+A2", 5, ((("flip", 0), ("fix", 1)),), N, "LowDeg-SmallSingOnly")
_row("no-cylinder", 2, "(A5)''", 4, ((("flip", 0),),), N, "LowDeg-DoublePrime",
     flags=[("A5.0", False)], tag="nopoint")

# the worked example surfaces
_row("worked-example", 3, "3A1", 2, ((("cycle", (0, 1, 2)),),), N, "Deg34-None", tag="conjugate-triple")
_row("worked-example", 4, "3A1", 3, ((("fix", 0), ("swap", 1, 2)),), N, "Deg34-None",
     flags=[("A1.0", False)], tag="real-quadrics")
# the two arithmetic states of the weighted-plane quartic example: the same
# square root splits the cusp's exceptional pair and the chain-end lines, so
# the only integral non-split action reverses both components at once
_row("worked-example", 2, "A5+A2", 8, IDENTITY, Y, "LowDeg-MinusDecoration", tag="split-cusp")
_row("worked-example", 2, "A5+A2", 5, ((("flip", 0), ("flip", 1)),), N, "LowDeg-None",
     tag="nonsplit-cusp")

CATALOG_ROWS: tuple[CatalogRow, ...] = tuple(_R)
del _R


def rows(group: Optional[str] = None) -> list[CatalogRow]:
    return [r for r in CATALOG_ROWS if group is None or r.group == group]


def row_by_name(name: str) -> CatalogRow:
    for r in CATALOG_ROWS:
        if r.name == name:
            return r
    raise KeyError(name)


def candidate_profiles(degree: int, type_name: str, limit: int = 4000):
    """Profiles matching a type name, variant constraints included."""
    sing, prime_variant, line_variant = parse_type_name(type_name)
    comps = parse_components(sing)
    want_lines = None
    if line_variant is not None:
        values = line_count_values(degree, sing)
        if len(values) != 2:
            raise LookupError(f"{degree} {sing}: expected two line counts, got {values}")
        want_lines = values[line_variant - 1]
    elif prime_variant is not None:
        values = line_count_values(degree, sing)
        if len(values) != 2:
            raise LookupError(f"{degree} {sing}: expected two line counts, got {values}")
        # degree 2: prime = fewer lines; degree 1: prime = more lines
        if degree == 2:
            want_lines = values[0] if prime_variant == PRIME else values[1]
        else:
            want_lines = values[1] if prime_variant == PRIME else values[0]
    count = 0
    for idx in iter_embeddings_idx(degree, comps):
        count += 1
        if count > limit:
            return
        if want_lines is not None and line_count_idx(degree, idx) != want_lines:
            continue
        yield indices_to_profile(degree, idx)


def _specs_for(row: CatalogRow, profile: SingularityProfile):
    if row.gen_specs == IDENTITY:
        return []
    if row.gen_specs == POINTWISE:
        return [[("fix", i) for i in range(len(profile.points))]]
    return [list(spec) for spec in row.gen_specs]


def _perm_matrix(rank: int, e_perm: dict[int, int]):
    """Isometry permuting the exceptional basis vectors, fixing the line class."""
    m = [[0] * rank for _ in range(rank)]
    m[0][0] = 1
    for i in range(1, rank):
        m[e_perm.get(i, i)][i] = 1
    return tuple(tuple(r) for r in m)


def _build_d3_4a1_nopoint() -> SurfaceOverK:
    """Blow-up of the plane at the six intersection points of four lines.

    The four line proper transforms are the roots; the symmetric group on
    the lines acts through permutations of the six points e_{ij}.  The
    full action leaves no line defined over the ground field and fixes
    only rank two, while the pure four-cycle would fix rank three.
    """
    from .lattice import standard_lattice
    from .singularities import validate_config

    form = standard_lattice(3)
    # e1={12} e2={13} e3={14} e4={23} e5={24} e6={34}
    roots = [
        (1, -1, -1, -1, 0, 0, 0),
        (1, -1, 0, 0, -1, -1, 0),
        (1, 0, -1, 0, -1, 0, -1),
        (1, 0, 0, -1, 0, -1, -1),
    ]
    profile = validate_config(form, roots)
    four_cycle = _perm_matrix(7, {1: 4, 4: 6, 6: 3, 3: 1, 2: 5, 5: 2})
    transposition = _perm_matrix(7, {2: 4, 4: 2, 3: 5, 5: 3})
    return SurfaceOverK(profile, (four_cycle, transposition), {}, name="d3-4a1-nopoint")


HAND_BUILT = {"d3-4a1-nopoint": _build_d3_4a1_nopoint}


def _fill_flags(surface: SurfaceOverK, overrides) -> SurfaceOverK:
    """Give every k-rational point an explicit flag (true unless overridden)."""
    from .galois import k_rational_points

    flags = {surface.profile.point_id(ci): True for ci in k_rational_points(surface)}
    flags.update(dict(overrides))
    return SurfaceOverK(surface.profile, surface.generators, flags, surface.rank_one_assertion, surface.name)


def build_row(row: CatalogRow) -> SurfaceOverK:
    """Search embeddings and actions matching the row; raises if none fit."""
    if row.name in HAND_BUILT:
        return _fill_flags(HAND_BUILT[row.name](), row.point_flags)
    last_error: Optional[Exception] = None
    for profile in candidate_profiles(row.degree, row.type_name):
        specs = _specs_for(row, profile)
        if row.gen_specs == IDENTITY:
            assert profile.form.rank == row.rho_tilde, (
                f"{row.name}: identity action has fixed rank {profile.form.rank}, "
                f"row wants {row.rho_tilde}"
            )
            surface = SurfaceOverK(profile, (), name=row.name)
            return _fill_flags(surface, row.point_flags)
        try:
            gens = find_action(profile, specs, row.rho_tilde)
            surface = SurfaceOverK(profile, tuple(gens), name=row.name)
            return _fill_flags(surface, row.point_flags)
        except LookupError as exc:
            last_error = exc
            continue
    raise LookupError(f"no model found for {row.name}: {last_error}")


@lru_cache(maxsize=None)
def construction_case_table() -> dict[tuple[int, str, int], int]:
    """(degree, singularity string, #lines) -> construction case, from fixtures."""
    from .serialize import load_fixture_surfaces
    from .singularities import surface_type

    table = {}
    for name, (row, surface) in load_fixture_surfaces().items():
        if row.construction_case is not None:
            t = surface_type(surface.profile)
            table[(row.degree, t.sing_string, t.num_lines)] = row.construction_case
    return table


def generate_fixtures(dest=None, verbose: bool = False) -> list[str]:
    """Build every catalog row and write it as a JSON fixture file."""
    import json
    import pathlib

    from .embeddings import line_count
    from .serialize import surface_to_dict
    from .singularities import surface_type

    if dest is None:
        dest = pathlib.Path(__file__).parent / "fixtures"
    dest = pathlib.Path(dest)
    dest.mkdir(parents=True, exist_ok=True)
    written = []
    for row in CATALOG_ROWS:
        if (dest / f"{row.name}.json").exists():
            continue
        surface = build_row(row)
        t = surface_type(surface.profile)
        expected = {
            "group": row.group,
            "type": row.type_name,
            "singularities": t.sing_string,
            "num_lines": t.num_lines,
            "rho_tilde": row.rho_tilde,
            "answer": row.expected_answer,
            "rule": row.expected_rule,
            "construction_case": row.construction_case,
        }
        data = surface_to_dict(surface, expected)
        path = dest / f"{row.name}.json"
        path.write_text(json.dumps(data, indent=1) + "\n", encoding="utf-8")
        written.append(row.name)
        if verbose:
            print(f"{row.name}: rho~={row.rho_tilde} lines={t.num_lines} -> {row.expected_rule}")
    return written
