"""Cylinder-existence decision for rank-one Du Val del Pezzo surfaces.

The decision runs on a decoration summary of the surface: the geometric
singularity labels plus, for each k-rational point, its decorated type.
Precedence is strict first-match:

  degree >= 5                      -> cylinder;
  degree 3, 4                      -> cylinder iff some k-rational point
                                      is decorated anything but A1++;
  degree 2, 1:
    (1) k-rational point of a big type (A6 A7 D4 D5 D6 E6 E7 for degree
        2; A8 D6 D7 D8 E7 E8 for degree 1)         -> cylinder;
    (2) else k-rational double-prime maximal chain -> cylinder iff its
        decoration is not plus-plus;
    (3) else only small geometric types (A1 for degree 2; A1 A2 A3 D4
        for degree 1)                              -> no cylinder;
    (4) else                                       -> cylinder iff some
        k-rational point is decorated minus.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional, Sequence

from .galois import (
    MINUS,
    PLUS,
    PLUS_PLUS,
    Decoration,
    RankOneReport,
    SurfaceOverK,
    decorate_point,
    k_rational_points,
    rank_one_check,
    rho_drop,
    rho_tilde,
    validate_action,
)
from .singularities import DOUBLE_PRIME, PRIME, surface_type

CONTAINS = "contains_cylinder"
NO_CYLINDER = "no_cylinder"

RULES = (
    "Deg5Plus",
    "Deg34-KRationalNonA1pp",
    "Deg34-None",
    "LowDeg-BigSingList",
    "LowDeg-DoublePrime",
    "LowDeg-SmallSingOnly",
    "LowDeg-MinusDecoration",
    "LowDeg-None",
)

BIG_TYPES = {
    2: {("A", 6), ("A", 7), ("D", 4), ("D", 5), ("D", 6), ("E", 6), ("E", 7)},
    1: {("A", 8), ("D", 6), ("D", 7), ("D", 8), ("E", 7), ("E", 8)},
}

SMALL_TYPES = {
    2: {("A", 1)},
    1: {("A", 1), ("A", 2), ("A", 3), ("D", 4)},
}


class RankOneError(ValueError):
    """The input does not model a Picard-rank-one surface."""


@dataclass(frozen=True)
class PointSummary:
    family: str
    n: int
    k_rational: bool
    decoration: Optional[Decoration]  # None for points that are not k-rational


@dataclass(frozen=True)
class Verdict:
    answer: str
    rule: str
    trace: tuple[tuple[str, str], ...]
    construction_case: Optional[int] = None

    @property
    def contains_cylinder(self) -> bool:
        return self.answer == CONTAINS


def summarize(surface: SurfaceOverK) -> list[PointSummary]:
    rational = set(k_rational_points(surface))
    out = []
    for ci, pt in enumerate(surface.profile.points):
        dec = decorate_point(surface, ci) if ci in rational else None
        out.append(PointSummary(pt.family, pt.n, ci in rational, dec))
    return out


def decide_from_summary(degree: int, points: Sequence[PointSummary]) -> Verdict:
    """The theorem clauses, applied to a decoration summary."""
    trace: list[tuple[str, str]] = []

    def verdict(answer, rule, cite, quote):
        trace.append((cite, quote))
        return Verdict(answer, rule, tuple(trace))

    if degree >= 5:
        return verdict(
            CONTAINS,
            "Deg5Plus",
            "rule:deg>=5",
            "rank-one surfaces of degree five or more always carry a cylinder",
        )
    if degree >= 3:
        for p in points:
            if p.k_rational and not (
                p.family == "A" and p.n == 1 and p.decoration.sign == PLUS_PLUS
            ):
                return verdict(
                    CONTAINS,
                    "Deg34-KRationalNonA1pp",
                    "rule:deg34",
                    f"rational singular point decorated {p.decoration.label} (not A1^++)",
                )
        return verdict(
            NO_CYLINDER,
            "Deg34-None",
            "rule:deg34",
            "no rational singular point decorated other than A1^++",
        )

    # degree 1 or 2
    for p in points:
        if p.k_rational and (p.family, p.n) in BIG_TYPES[degree]:
            return verdict(
                CONTAINS,
                "LowDeg-BigSingList",
                "rule:lowdeg-1",
                f"rational singular point of big type {p.family}{p.n}",
            )
    chain_n = 9 - 2 * degree
    for p in points:
        if (
            p.k_rational
            and p.family == "A"
            and p.n == chain_n
            and p.decoration.variant == DOUBLE_PRIME
        ):
            minus_elsewhere = any(
                q.k_rational and q is not p and q.decoration.sign == MINUS for q in points
            )
            if minus_elsewhere:
                trace.append(
                    (
                        "note:precedence",
                        "a minus-decorated point coexists with the double-prime chain; "
                        "the double-prime clause decides first",
                    )
                )
            if p.decoration.sign != PLUS_PLUS:
                return verdict(
                    CONTAINS,
                    "LowDeg-DoublePrime",
                    "rule:lowdeg-2",
                    f"double-prime A{chain_n} point decorated {p.decoration.label}",
                )
            return verdict(
                NO_CYLINDER,
                "LowDeg-DoublePrime",
                "rule:lowdeg-2",
                f"double-prime A{chain_n} point is plus-plus; no cylinder",
            )
    if all((p.family, p.n) in SMALL_TYPES[degree] for p in points):
        small = "/".join(sorted(f"{f}{n}" for f, n in SMALL_TYPES[degree]))
        return verdict(
            NO_CYLINDER,
            "LowDeg-SmallSingOnly",
            "rule:lowdeg-3",
            f"every geometric singularity lies in {{{small}}}",
        )
    for p in points:
        if p.k_rational and p.decoration.sign == MINUS:
            return verdict(
                CONTAINS,
                "LowDeg-MinusDecoration",
                "rule:lowdeg-4",
                f"rational singular point decorated {p.decoration.label}",
            )
    return verdict(
        NO_CYLINDER,
        "LowDeg-None",
        "rule:lowdeg-4",
        "no rational singular point carries a minus decoration",
    )


def decide(surface: SurfaceOverK) -> Verdict:
    """Full decision: validate, check rank one, then apply the clauses."""
    validate_action(surface)
    report = rank_one_check(surface)
    if not report.ok:
        raise RankOneError(f"{report.obstruction}: {report.detail}")
    verdict = decide_from_summary(surface.degree, summarize(surface))
    trace = (("check:rank-one", report.detail),) + verdict.trace
    if report.asserted:
        trace = (("warn:rank-one-asserted", report.detail),) + trace
    case = None
    if surface.degree >= 3 and verdict.answer == CONTAINS:
        from .singularities import construction_case

        case = construction_case(surface.degree, surface_type(surface.profile))
    return Verdict(verdict.answer, verdict.rule, trace, case)


def decide_fibration(fiber: SurfaceOverK) -> Verdict:
    """Decision for the generic fiber of a fibration over a function field.

    Over such a base every exceptional curve has a rational point, so all
    rational-point flags are forced to true and plus-plus decorations
    cannot occur.
    """
    forced = SurfaceOverK(
        fiber.profile,
        fiber.generators,
        {pid: True for pid in _all_point_ids(fiber)},
        fiber.rank_one_assertion,
        fiber.name,
    )
    verdict = decide(forced)
    trace = (
        (
            "note:function-field",
            "base field of a fibration is a C1 field; rational-point flags forced true",
        ),
    ) + verdict.trace
    return Verdict(verdict.answer, verdict.rule, trace, verdict.construction_case)


def _all_point_ids(surface: SurfaceOverK) -> list[str]:
    return [surface.profile.point_id(ci) for ci in k_rational_points(surface)]
