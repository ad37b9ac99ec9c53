"""Galois actions as lattice isometries, Picard-rank bookkeeping and
decorated singularity types.

The action is given by explicit integer matrices on the lattice basis.
The model Picard rank of the contracted surface is

    rho_k(S) = rank(fixed sublattice) - (number of root orbits),

the rule used in every rank computation this package reproduces.  A
singular point is k-rational iff the Galois group fixes its component
set; its decoration is

* family A, n >= 2:  minus if its components fall into n orbits (all
  fixed individually), else plus / plus-plus by the rational-point flag;
* family A, n = 1:   plus / plus-plus by the flag alone;
* families D and E:  minus if the drop equals n, else plus.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .actions import fixed_rank, group_closure, is_isometry, orbit_partition
from .curves import line_classes, lines_on_surface
from .exact import mat_vec
from .lattice import Coeffs, IntersectionForm, pair
from .singularities import (
    DOUBLE_PRIME,
    PRIME,
    SingularityProfile,
    central_vertex_variant,
)

MINUS = "minus"
PLUS = "plus"
PLUS_PLUS = "plus_plus"

GROUP_CAP = 1_000_000


class ActionError(ValueError):
    """Raised when a matrix list is not a valid Galois action."""


class MissingFlagWarning(UserWarning):
    pass


@dataclass(frozen=True)
class Decoration:
    family: str
    n: int
    sign: str  # MINUS / PLUS / PLUS_PLUS
    variant: Optional[str] = None  # PRIME / DOUBLE_PRIME for maximal chains

    def __post_init__(self):
        if self.sign == PLUS_PLUS:
            assert self.family == "A", "plus-plus only occurs for chain points"
        if self.family == "A" and self.n == 1:
            assert self.sign != MINUS, "an A1 point is decorated plus or plus-plus"

    @property
    def label(self) -> str:
        sign = {MINUS: "-", PLUS: "+", PLUS_PLUS: "++"}[self.sign]
        var = {PRIME: "'", DOUBLE_PRIME: "''", None: ""}[self.variant]
        return f"{self.family}{self.n}^{sign}{var}"


@dataclass
class SurfaceOverK:
    """A rank-one surface datum: configuration, action and point flags."""

    profile: SingularityProfile
    generators: tuple = ()
    point_flags: dict[str, bool] = field(default_factory=dict)
    rank_one_assertion: Optional[bool] = None
    name: Optional[str] = None

    @property
    def form(self) -> IntersectionForm:
        return self.profile.form

    @property
    def degree(self) -> int:
        return self.profile.degree


def validate_action(surface: SurfaceOverK) -> int:
    """Check every action invariant; returns the group order."""
    form = surface.form
    n = form.rank
    for t in surface.generators:
        if len(t) != n or any(len(row) != n for row in t):
            raise ActionError("generator has wrong shape")
        if not is_isometry(form, t):
            raise ActionError("generator does not preserve the intersection form")
        if tuple(mat_vec(t, form.canonical)) != form.canonical:
            raise ActionError("generator does not fix the canonical class")
    root_set = set(surface.profile.simple_roots)
    for t in surface.generators:
        images = {tuple(mat_vec(t, r)) for r in surface.profile.simple_roots}
        if images != root_set:
            raise ActionError("generator does not permute the configuration's roots")
        lines = set(lines_on_surface(surface.profile).classes)
        if {tuple(mat_vec(t, l)) for l in lines} != lines:
            raise ActionError("generator does not permute the surface's lines")
    group = group_closure(surface.generators, cap=GROUP_CAP)
    for pid in surface.point_flags:
        ci = surface.profile.point_by_id(pid)  # raises KeyError for bad ids
        if ci not in k_rational_points(surface):
            raise ActionError(f"point flag for {pid}, which is not k-rational")
    return len(group)


def orbits(surface: SurfaceOverK) -> list[list[int]]:
    """Orbit partition of the profile's roots (by root index)."""
    return orbit_partition(surface.profile, surface.generators)


def k_rational_points(surface: SurfaceOverK) -> list[int]:
    """Indices of components whose root set is fixed setwise by the group."""
    prof = surface.profile
    out = []
    part = orbits(surface)
    orbit_of = {}
    for oi, orb in enumerate(part):
        for r in orb:
            orbit_of[r] = oi
    for ci, pt in enumerate(prof.points):
        comp = set(pt.ordered)
        stable = all(set(part[orbit_of[r]]) <= comp for r in comp)
        if stable:
            out.append(ci)
    return out


def rho_drop(surface: SurfaceOverK) -> tuple[int, dict[str, int]]:
    """(total root-orbit count, per-k-rational-point orbit counts)."""
    prof = surface.profile
    part = orbits(surface)
    total = len(part)
    per_point: dict[str, int] = {}
    for ci in k_rational_points(surface):
        comp = set(prof.points[ci].ordered)
        per_point[prof.point_id(ci)] = sum(1 for orb in part if set(orb) <= comp)
    return total, per_point


def rho_tilde(surface: SurfaceOverK) -> int:
    """Model rank of the resolution: rank of the fixed sublattice."""
    return fixed_rank(surface.form, surface.generators)


def rho_model(surface: SurfaceOverK) -> int:
    total, _ = rho_drop(surface)
    return rho_tilde(surface) - total


def has_k_point(surface: SurfaceOverK, ci: int) -> bool:
    pid = surface.profile.point_id(ci)
    if pid in surface.point_flags:
        return surface.point_flags[pid]
    warnings.warn(
        f"no rational-point flag for {pid}; assuming the exceptional set has a rational point",
        MissingFlagWarning,
        stacklevel=2,
    )
    return True


def decorate_point(surface: SurfaceOverK, ci: int) -> Decoration:
    """Decorated type of a k-rational singular point."""
    prof = surface.profile
    if ci not in k_rational_points(surface):
        raise ValueError(f"point {prof.point_id(ci)} is not k-rational")
    pt = prof.points[ci]
    _, per_point = rho_drop(surface)
    drop = per_point[prof.point_id(ci)]
    variant = None
    if pt.family == "A" and prof.degree in (1, 2) and pt.n == 9 - 2 * prof.degree:
        variant = central_vertex_variant(prof, ci)
    if pt.family == "A":
        if pt.n >= 2 and drop == pt.n:
            return Decoration(pt.family, pt.n, MINUS, variant)
        sign = PLUS if has_k_point(surface, ci) else PLUS_PLUS
        return Decoration(pt.family, pt.n, sign, variant)
    sign = MINUS if drop == pt.n else PLUS
    return Decoration(pt.family, pt.n, sign, variant)


@dataclass(frozen=True)
class RankOneReport:
    ok: bool
    obstruction: Optional[str]  # "stable-disjoint-lines" | "too-few-roots" | "rank-not-one"
    detail: str
    rho_tilde: int
    rho: int
    asserted: bool = False


def rank_one_check(surface: SurfaceOverK) -> RankOneReport:
    """Decide whether the datum models a Picard-rank-one surface.

    Three obstructions are tested in order: a Galois-stable disjoint
    union of lines meeting no root; everything fixed but fewer than
    9 - d roots; computed rank different from one.  A user assertion
    overrides a failing check, with a warning in the report.
    """
    prof = surface.profile
    form = surface.form
    rt = rho_tilde(surface)
    rho = rt - rho_drop(surface)[0]

    obstruction = None
    detail = ""
    free_lines = [
        l
        for l in lines_on_surface(prof).classes
        if all(pair(form, l, r) == 0 for r in prof.simple_roots)
    ]
    if free_lines:
        orbit = _line_orbits(surface, free_lines)
        for orb in orbit:
            if all(
                pair(form, a, b) == 0 for i, a in enumerate(orb) for b in orb[i + 1 :]
            ):
                obstruction = "stable-disjoint-lines"
                detail = (
                    "a Galois-stable disjoint union of lines meets no root, so the "
                    "contracted surface has rank greater than one"
                )
                break
    if obstruction is None:
        all_fixed = rt == form.rank
        if all_fixed and len(prof.simple_roots) < 9 - prof.degree:
            obstruction = "too-few-roots"
            detail = (
                f"every curve class is fixed but only {len(prof.simple_roots)} of the "
                f"possible {9 - prof.degree} roots are present"
            )
    if obstruction is None and rho != 1:
        obstruction = "rank-not-one"
        detail = f"model rank is {rho}, not 1"

    if obstruction is None:
        return RankOneReport(True, None, "rank one", rt, rho)
    if surface.rank_one_assertion:
        warnings.warn(
            f"rank-one assertion overrides obstruction '{obstruction}'", UserWarning, stacklevel=2
        )
        return RankOneReport(True, obstruction, detail + " (overridden by assertion)", rt, rho, True)
    return RankOneReport(False, obstruction, detail, rt, rho)


def _line_orbits(surface: SurfaceOverK, lines: Sequence[Coeffs]) -> list[list[Coeffs]]:
    index = {l: i for i, l in enumerate(lines)}
    parent = list(range(len(lines)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for t in surface.generators:
        for l, i in index.items():
            img = tuple(mat_vec(t, l))
            # the action permutes roots, so a root-avoiding line maps to one
            j = index[img]
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
    groups: dict[int, list[Coeffs]] = {}
    for l, i in index.items():
        groups.setdefault(find(i), []).append(l)
    return list(groups.values())
