"""Acceptance suite: one test per criterion, each printing a pass line
with its runtime.  Every comparison is exact; the time limits are the
stated budgets.  Run with `pytest tests/test_acceptance.py -v -s`.
"""

import itertools
import json
import random
import time
from fractions import Fraction as F

import numpy as np
import pytest

from dpcyl import divisors
from dpcyl.curves import (
    form_for_degree,
    line_classes,
    line_classes_by_patterns,
    lines_on_surface,
    roots,
    roots_by_reflection,
)
from dpcyl.embeddings import find_profile, profile_with_variant
from dpcyl.exact import mat_vec
from dpcyl.galois import SurfaceOverK, decorate_point, k_rational_points, rho_tilde, validate_action
from dpcyl.lattice import pair
from dpcyl.oracle import CONTAINS, NO_CYLINDER, decide, decide_fibration, decide_from_summary, summarize
from dpcyl.serialize import (
    load_fixture_surfaces,
    surface_from_dict,
    surface_to_dict,
    verdict_from_dict,
    verdict_to_dict,
)
from dpcyl.singularities import PRIME, surface_type, validate_config
from dpcyl.verify import CHAIN_TABLE, CORTI_TABLE, CORTI_WITNESSES, DIVISOR_ROWS, EXPECTED_COUNTS, _slots


def report(number, label, t0, budget):
    elapsed = time.monotonic() - t0
    print(f"criterion {number:2d} ({label}): PASS in {elapsed:.2f}s (budget {budget}s)")
    assert elapsed < budget


def test_criterion_01_chain_table():
    t0 = time.monotonic()
    assert len(CHAIN_TABLE) == 36
    for (n, j0), expected in CHAIN_TABLE.items():
        _, sp = divisors.closed_form_chain(n, j0)
        assert sp == expected
    assert divisors.closed_form_chain(7, 4)[1] == -2
    assert divisors.closed_form_chain(5, 3)[1] == F(-3, 2)
    report(1, "chain self-pairing table", t0, 1)


def test_criterion_02_solver_vs_formula():
    t0 = time.monotonic()
    for n in range(1, 9):
        for j0 in range(1, n + 1):
            targets = tuple(1 if j == j0 else 0 for j in range(1, n + 1))
            assert divisors.solve_component("A", n, targets) == divisors.closed_form_chain(n, j0)
        for j0 in range(1, (n + 1) // 2 + 1):
            targets = tuple(
                (1 if j == j0 else 0) + (1 if j == n - j0 + 1 else 0) for j in range(1, n + 1)
            )
            b, sp = divisors.solve_component("A", n, targets)
            cb, csp = divisors.closed_form_chain_symmetric(n, j0)
            assert b == tuple(F(x) for x in cb) and sp == csp
    assert len(divisors.FORK_D5_FORMS) == 5
    assert len(divisors.FORK_E6_FORMS) == 6
    for targets, expected in divisors.FORK_D5_FORMS.items():
        assert divisors.solve_component("D", 5, targets) == expected
    for targets, expected in divisors.FORK_E6_FORMS.items():
        assert divisors.solve_component("E", 6, targets) == expected
    report(2, "solver equals closed forms", t0, 1)


def _grid(k: int) -> np.ndarray:
    base = np.arange(-5, 6, dtype=np.int64)
    cols = np.meshgrid(*([base] * k), indexing="ij")
    return np.stack([c.reshape(-1) for c in cols], axis=1)


def _chain_sides(cols):
    n = len(cols)
    direct = -2 * sum(c * c for c in cols)
    for j in range(n - 1):
        direct = direct + 2 * cols[j] * cols[j + 1]
    square = -(cols[0] ** 2 + cols[n - 1] ** 2)
    for j in range(n - 1):
        square = square - (cols[j] - cols[j + 1]) ** 2
    return direct, square


def test_criterion_03_square_identities_sweep():
    t0 = time.monotonic()
    # chains up to length 8 over [-5, 5]^n; lead coordinates looped, the
    # trailing five vectorized; integer arithmetic throughout
    for n in range(1, 9):
        tail = min(n, 5)
        grid = _grid(tail)
        lead = n - tail
        lead_iter = itertools.product(range(-5, 6), repeat=lead) if lead else [()]
        for leads in lead_iter:
            cols = [np.full(len(grid), v, dtype=np.int64) for v in leads] + [
                grid[:, i] for i in range(tail)
            ]
            direct, square = _chain_sides(cols)
            assert np.array_equal(direct, square)
    # the two forks, scaled by six to stay integral
    g5 = _grid(5)
    b = [g5[:, i] for i in range(5)]
    direct = -2 * sum(c * c for c in b) + 2 * (b[0] * b[2] + b[1] * b[2] + b[2] * b[3] + b[3] * b[4])
    square6 = (
        -3 * (2 * b[0] - b[2]) ** 2
        - 3 * (2 * b[1] - b[2]) ** 2
        - 6 * (b[2] - b[3]) ** 2
        - 6 * (b[3] - b[4]) ** 2
        - 6 * b[4] ** 2
    )
    assert np.array_equal(6 * direct, square6)
    g6 = _grid(5)
    for b6 in range(-5, 6):
        b = [g6[:, i] for i in range(5)] + [np.full(len(g6), b6, dtype=np.int64)]
        direct = -2 * sum(c * c for c in b) + 2 * (
            b[0] * b[2] + b[2] * b[4] + b[1] * b[3] + b[3] * b[4] + b[4] * b[5]
        )
        square6 = (
            -3 * (2 * b[0] - b[2]) ** 2
            - 3 * (2 * b[1] - b[3]) ** 2
            - (3 * b[2] - 2 * b[4]) ** 2
            - (3 * b[3] - 2 * b[4]) ** 2
            - (2 * b[4] - 3 * b[5]) ** 2
            - 3 * b[5] ** 2
        )
        assert np.array_equal(6 * direct, square6)
    report(3, "square identities over [-5,5]^n", t0, 120)


def test_criterion_04_enumeration_counts():
    t0 = time.monotonic()
    for d, (nr, nl) in EXPECTED_COUNTS.items():
        form = form_for_degree(d)
        r1, l1 = roots(form).classes, line_classes(form).classes
        assert (len(r1), len(l1)) == (nr, nl)
        assert set(r1) == set(roots_by_reflection(form))
        assert set(l1) == set(line_classes_by_patterns(form))
    report(4, "enumeration counts, two strategies", t0, 30)


def test_criterion_05_divisor_table_and_dichotomy():
    t0 = time.monotonic()
    for case, d, sing, lens, variant, want in DIVISOR_ROWS:
        profile = profile_with_variant(d, sing, variant) if variant else find_profile(d, sing)
        slots = _slots(profile, lens)
        dcls = divisors.divisor_for_case(case, profile, slots)
        form = profile.form
        assert pair(form, dcls, dcls) == -2
        assert pair(form, dcls, tuple(-x for x in form.canonical)) == 2
        dec = divisors.decompose_special(profile, dcls, case)
        assert dec.condition == want, (case, sing, dec.condition)
        for totals in dec.component_totals:
            assert all(t == 1 for t in totals)
        if dec.condition == "A" and dec.in_span:
            lengths = tuple(profile.points[i].n for i in slots)
            assert lengths in divisors.ADMISSIBLE_A[case]
        if dec.condition == "B":
            lengths = tuple(profile.points[i].n for i in slots)
            assert lengths in divisors.ADMISSIBLE_B[case]
    report(5, "distinguished divisors and their decompositions", t0, 300)


def test_criterion_06_corti_witnesses():
    t0 = time.monotonic()
    assert len(CORTI_TABLE) == 10
    for (d, label), (a, b, g) in CORTI_TABLE.items():
        if (d, label) in CORTI_WITNESSES:
            assert not divisors.corti_special(d, a, g)
            p = divisors.CortiParams(d, F(a), F(b), F(g))
            assert divisors.corti_evaluate(p, *CORTI_WITNESSES[(d, label)])
        else:
            assert divisors.corti_special(d, a, g)
    assert CORTI_WITNESSES[(2, "A1+")] == (0, 1)
    assert CORTI_WITNESSES[(1, "A3+")] == (1, 1)
    for t in (F(1), F(5, 4), F(3, 2), F(7, 4), F(2)):
        p = divisors.CortiParams(1, F(2), 2 * t - 2, 2 * t * t - 4 * t + 4)
        assert divisors.corti_evaluate(p, -t * t + 3 * t - 1, 2 * t - 3)
    report(6, "exclusion-system witnesses", t0, 1)


def test_criterion_07_pencil_degeneration():
    t0 = time.monotonic()
    degenerate = {(2, 2), (1, 4), (1, 1)}
    non_degenerate = {(2, 4), (2, 6), (1, 2), (1, 6), (1, 8)}
    for d, g in degenerate:
        assert divisors.pencil_degeneration(d, g)
    for d, g in non_degenerate:
        assert not divisors.pencil_degeneration(d, g)
    report(7, "pencil degeneration values", t0, 1)


def test_criterion_08_worked_examples():
    t0 = time.monotonic()
    fix = load_fixture_surfaces()
    assert decide(fix["d3-3a1-conjugate-triple"][1]).answer == NO_CYLINDER
    assert decide(fix["d4-3a1-real-quadrics"][1]).answer == NO_CYLINDER
    assert decide(fix["d2-a5-a2-split-cusp"][1]).answer == CONTAINS
    assert decide(fix["d2-a5-a2-nonsplit-cusp"][1]).answer == NO_CYLINDER
    # constant family: no vertical cylinder exactly for small degree-one types
    assert decide_fibration(fix["d1-2d4"][1]).answer == NO_CYLINDER
    assert decide_fibration(fix["d1-d4-a2"][1]).answer == NO_CYLINDER
    assert decide_fibration(fix["d1-a4"][1]).answer == CONTAINS
    assert decide_fibration(fix["d2-a7"][1]).answer == CONTAINS
    # threefold family: cylinder iff the square root splits downstairs
    assert decide_fibration(fix["d2-a5-a2-split-cusp"][1]).answer == CONTAINS
    assert decide_fibration(fix["d2-a5-a2-nonsplit-cusp"][1]).answer == NO_CYLINDER
    # fibration criterion in degree 3..4: a rational singular point suffices
    assert decide_fibration(fix["d4-3a1-real-quadrics"][1]).answer == CONTAINS
    assert decide_fibration(fix["d4-4a1-nopoint"][1]).answer == NO_CYLINDER
    report(8, "worked-example verdicts", t0, 1)


def test_criterion_09_catalog_coherence():
    t0 = time.monotonic()
    for name, (row, surf) in load_fixture_surfaces().items():
        assert validate_action(surf) >= 1
        assert rho_tilde(surf) == row.rho_tilde, name
        v = decide(surf)
        assert v.answer == row.expected_answer, name
        assert v.rule == row.expected_rule, name
        if row.construction_case is not None:
            assert v.construction_case == row.construction_case, name
    report(9, "catalog coherence", t0, 60)


def test_criterion_10_property_suites():
    t0 = time.monotonic()
    fixtures = load_fixture_surfaces()

    # isometry invariance of the enumerations under every fixture action
    for name, (row, surf) in fixtures.items():
        if not surf.generators:
            continue
        form = surf.form
        rset = set(roots(form).classes)
        lset = set(line_classes(form).classes)
        for t in surf.generators:
            assert {tuple(mat_vec(t, r)) for r in rset} == rset
            assert {tuple(mat_vec(t, l)) for l in lset} == lset

    # decoration stability under root relabeling
    rnd = random.Random(23)
    for name in ("d2-3a2", "d1-a7-a1", "d1-d5-2a1", "d4-3a1-real-quadrics"):
        row, surf = fixtures[name]
        base = sorted(
            decorate_point(surf, ci).label for ci in k_rational_points(surf)
        )
        perm = list(range(len(surf.profile.simple_roots)))
        rnd.shuffle(perm)
        prof2 = validate_config(surf.form, [surf.profile.simple_roots[i] for i in perm])
        surf2 = SurfaceOverK(prof2, surf.generators, dict(surf.point_flags))
        assert sorted(
            decorate_point(surf2, ci).label for ci in k_rational_points(surf2)
        ) == base

    # verdict monotonicity under single decoration upgrades
    from dpcyl.galois import MINUS, PLUS, PLUS_PLUS, Decoration
    from dpcyl.oracle import PointSummary

    upgrade = {PLUS_PLUS: PLUS, PLUS: MINUS}
    for name, (row, surf) in fixtures.items():
        points = summarize(surf)
        base = decide_from_summary(surf.degree, points)
        for i, p in enumerate(points):
            if not p.k_rational or p.decoration.sign == MINUS:
                continue
            new_sign = upgrade[p.decoration.sign]
            if p.family == "A" and p.n == 1 and new_sign == MINUS:
                continue
            upgraded = list(points)
            upgraded[i] = PointSummary(
                p.family, p.n, True, Decoration(p.family, p.n, new_sign, p.decoration.variant)
            )
            v = decide_from_summary(surf.degree, upgraded)
            if base.answer == CONTAINS:
                assert v.answer == CONTAINS, (name, i)

    # JSON round-trips for every fixture surface and verdict
    for name, (row, surf) in fixtures.items():
        data = json.loads(json.dumps(surface_to_dict(surf)))
        again = surface_from_dict(data)
        assert again.profile.simple_roots == surf.profile.simple_roots
        assert again.generators == surf.generators
        assert again.point_flags == surf.point_flags
        v = decide(surf)
        assert verdict_from_dict(json.loads(json.dumps(verdict_to_dict(v)))) == v

    report(10, "property suites", t0, 300)
