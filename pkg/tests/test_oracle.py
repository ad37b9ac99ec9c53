import pytest

from dpcyl.galois import MINUS, PLUS, PLUS_PLUS, SurfaceOverK, decorate_point, k_rational_points
from dpcyl.oracle import (
    CONTAINS,
    NO_CYLINDER,
    PointSummary,
    RankOneError,
    Verdict,
    decide,
    decide_from_summary,
    decide_fibration,
    summarize,
)
from dpcyl.serialize import load_fixture_surfaces
from dpcyl.singularities import DOUBLE_PRIME, PRIME
from dpcyl.galois import Decoration


def surface(name):
    return load_fixture_surfaces()[name][1]


def test_degree_five_always_contains():
    v = decide(surface("d5-a4"))
    assert v.answer == CONTAINS and v.rule == "Deg5Plus"
    v = decide(surface("d8-a1"))
    assert v.answer == CONTAINS and v.construction_case == 9


def test_conjugate_triple_has_no_cylinder():
    v = decide(surface("d3-3a1-conjugate-triple"))
    assert v.answer == NO_CYLINDER
    assert v.rule == "Deg34-None"


def test_real_quadric_intersection_has_no_cylinder():
    v = decide(surface("d4-3a1-real-quadrics"))
    assert v.answer == NO_CYLINDER
    # the rational point is there, but decorated A1^++
    surf = surface("d4-3a1-real-quadrics")
    ci = k_rational_points(surf)[0]
    assert decorate_point(surf, ci).sign == PLUS_PLUS


def test_cusp_example_depends_on_square_root():
    split = decide(surface("d2-a5-a2-split-cusp"))
    assert split.answer == CONTAINS and split.rule == "LowDeg-MinusDecoration"
    nonsplit = decide(surface("d2-a5-a2-nonsplit-cusp"))
    assert nonsplit.answer == NO_CYLINDER and nonsplit.rule == "LowDeg-None"


def test_fibration_criterion_rational_point_suffices():
    # with the function-field convention the plus-plus flag is overridden
    surf = surface("d4-3a1-real-quadrics")
    assert decide(surf).answer == NO_CYLINDER
    assert decide_fibration(surf).answer == CONTAINS
    # without any rational singular point even the fibration has none
    surf = surface("d4-4a1-nopoint")
    assert decide_fibration(surf).answer == NO_CYLINDER


def test_constant_fibration_criterion():
    # identity actions: no cylinder exactly in degree one with small types
    assert decide_fibration(surface("d1-2d4")).answer == NO_CYLINDER
    assert decide_fibration(surface("d1-a4")).answer == CONTAINS
    assert decide_fibration(surface("d2-a7")).answer == CONTAINS
    assert decide_fibration(surface("d2-a5-a2")).answer == CONTAINS


def test_threefold_family_parity():
    # the quartic threefold family: vertical cylinder iff the exponent is
    # even, i.e. iff the square root lives downstairs -> the split model
    assert decide_fibration(surface("d2-a5-a2-split-cusp")).answer == CONTAINS
    assert decide_fibration(surface("d2-a5-a2-nonsplit-cusp")).answer == NO_CYLINDER


def test_small_sing_only_rule():
    v = decide(surface("d1-2d4"))
    assert v.rule == "LowDeg-SmallSingOnly"
    v = decide(surface("d1-d4-a2"))
    assert v.rule == "LowDeg-SmallSingOnly"


def test_double_prime_rules():
    v = decide(surface("d2-a5pp"))
    assert v.answer == CONTAINS and v.rule == "LowDeg-DoublePrime"
    v = decide(surface("d2-a5pp-nopoint"))
    assert v.answer == NO_CYLINDER and v.rule == "LowDeg-DoublePrime"
    v = decide(surface("d1-a7pp"))
    assert v.answer == CONTAINS and v.rule == "LowDeg-DoublePrime"


def test_rank_one_precondition():
    from dpcyl.embeddings import find_profile

    profile = find_profile(5, "A2")
    with pytest.raises(RankOneError):
        decide(SurfaceOverK(profile, ()))
    # the assertion overrides, with a warning in the trace
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        v = decide(SurfaceOverK(profile, (), rank_one_assertion=True))
    assert v.answer == CONTAINS
    assert any(cite == "warn:rank-one-asserted" for cite, _ in v.trace)


def _pt(family, n, sign, variant=None, rational=True):
    dec = Decoration(family, n, sign, variant) if rational else None
    return PointSummary(family, n, rational, dec)


def test_summary_clause_precedence():
    # clause 1 beats everything
    v = decide_from_summary(2, [_pt("D", 4, PLUS), _pt("A", 2, MINUS)])
    assert v.rule == "LowDeg-BigSingList" and v.answer == CONTAINS
    # clause 2 decides even when a minus sits elsewhere
    v = decide_from_summary(
        2, [_pt("A", 5, PLUS_PLUS, DOUBLE_PRIME), _pt("A", 2, MINUS)]
    )
    assert v.rule == "LowDeg-DoublePrime" and v.answer == NO_CYLINDER
    assert any(cite == "note:precedence" for cite, _ in v.trace)
    # clause 3 only sees geometric labels
    v = decide_from_summary(2, [_pt("A", 1, PLUS), _pt("A", 1, PLUS, rational=False)])
    assert v.rule == "LowDeg-SmallSingOnly" and v.answer == NO_CYLINDER
    # clause 4 needs a minus
    v = decide_from_summary(2, [_pt("A", 3, PLUS)])
    assert v.rule == "LowDeg-None" and v.answer == NO_CYLINDER
    v = decide_from_summary(2, [_pt("A", 3, MINUS)])
    assert v.rule == "LowDeg-MinusDecoration" and v.answer == CONTAINS


def test_degree34_any_non_a1pp_counts():
    v = decide_from_summary(4, [_pt("A", 3, PLUS_PLUS)])
    assert v.answer == CONTAINS  # only A1^++ is excluded
    v = decide_from_summary(4, [_pt("A", 1, PLUS_PLUS)])
    assert v.answer == NO_CYLINDER
    v = decide_from_summary(3, [_pt("A", 1, PLUS)])
    assert v.answer == CONTAINS


def test_verdict_trace_nonempty():
    for name in ("d5-a4", "d1-2d4", "d2-a5pp", "d3-e6"):
        v = decide(surface(name))
        assert v.trace


UPGRADE = {PLUS_PLUS: PLUS, PLUS: MINUS, MINUS: MINUS}


def test_monotone_under_decoration_upgrades():
    # upgrading any one decoration never destroys a cylinder
    for name, (row, surf) in load_fixture_surfaces().items():
        if surf.degree > 4:
            continue
        points = summarize(surf)
        base = decide_from_summary(surf.degree, points)
        for i, p in enumerate(points):
            if not p.k_rational:
                continue
            new_sign = UPGRADE[p.decoration.sign]
            if new_sign == p.decoration.sign:
                continue
            if p.family == "A" and p.n == 1 and new_sign == MINUS:
                continue  # no minus decoration exists for A1 points
            upgraded = list(points)
            upgraded[i] = PointSummary(
                p.family, p.n, True, Decoration(p.family, p.n, new_sign, p.decoration.variant)
            )
            v = decide_from_summary(surf.degree, upgraded)
            if base.answer == CONTAINS:
                assert v.answer == CONTAINS, (name, i, p.decoration.label, new_sign)
