import pytest

from dpcyl.curves import (
    dual_graph,
    form_for_degree,
    has_cycle,
    line_classes,
    line_classes_by_patterns,
    lines_on_surface,
    roots,
    roots_by_reflection,
)
from dpcyl.lattice import hirzebruch_lattice, pair, standard_lattice
from dpcyl.singularities import validate_config

EXPECTED = {
    1: (240, 240),
    2: (126, 56),
    3: (72, 27),
    4: (40, 16),
    5: (20, 10),
    6: (8, 6),
    7: (2, 3),
    8: (2, 0),
}


@pytest.mark.parametrize("degree", sorted(EXPECTED))
def test_enumeration_counts_and_agreement(degree):
    form = form_for_degree(degree)
    r = roots(form).classes
    l = line_classes(form).classes
    assert (len(r), len(l)) == EXPECTED[degree]
    assert set(r) == set(roots_by_reflection(form))
    assert set(l) == set(line_classes_by_patterns(form))


def test_root_defining_equations():
    form = standard_lattice(2)
    for r in roots(form).classes:
        assert pair(form, r, r) == -2
        assert pair(form, r, form.canonical) == 0
    for l in line_classes(form).classes:
        assert pair(form, l, l) == -1
        assert pair(form, l, form.canonical) == -1


def test_roots_closed_under_negation():
    form = standard_lattice(4)
    rs = set(roots(form).classes)
    assert all(tuple(-x for x in r) in rs for r in rs)


def test_hirzebruch_roots_and_lines():
    form = hirzebruch_lattice()
    assert set(roots(form).classes) == {(1, 0), (-1, 0)}
    assert line_classes(form).classes == ()


def test_lines_on_surface_empty_profile():
    form = standard_lattice(3)
    profile = validate_config(form, [])
    assert len(lines_on_surface(profile).classes) == 27


def test_lines_on_surface_monotone():
    form = standard_lattice(3)
    r1 = (0, 1, -1, 0, 0, 0, 0)
    r2 = (0, 0, 0, 1, -1, 0, 0)
    small = validate_config(form, [r1])
    bigger = validate_config(form, [r1, r2])
    lines_small = set(lines_on_surface(small).classes)
    lines_bigger = set(lines_on_surface(bigger).classes)
    assert lines_bigger <= lines_small


def test_dual_graph_path():
    form = standard_lattice(3)
    r1 = (0, 1, -1, 0, 0, 0, 0)
    r2 = (0, 0, 1, -1, 0, 0, 0)
    g = dual_graph([r1, r2], form)
    assert g.edges == ((0, 1, 1),)
    assert g.labels == (-2, -2)
    assert not has_cycle(g)


def test_dual_graph_rejects_negative_pairing():
    form = standard_lattice(3)
    e1 = (0, 1, 0, 0, 0, 0, 0)
    r = (0, 1, -1, 0, 0, 0, 0)
    with pytest.raises(ValueError):
        dual_graph([e1, r], form)


def test_dual_graph_d5_fork():
    from dpcyl.embeddings import find_profile

    profile = find_profile(4, "D5")
    g = dual_graph(list(profile.ordered_roots(0)), profile.form)
    degrees = sorted(g.degree(i) for i in range(5))
    assert degrees == [1, 1, 1, 2, 3]
    # vertex 2 is the branch in the canonical order
    assert g.degree(2) == 3


def test_chain_plus_closing_curve_has_cycle():
    # a chain together with a curve meeting both ends closes into a cycle
    form = standard_lattice(2)
    chain = []
    for i in range(3):
        v = [0] * 8
        v[i + 1], v[i + 2] = 1, -1
        chain.append(tuple(v))
    minus_k = tuple(-x for x in form.canonical)
    c = tuple(mk - sum(ch[j] for ch in chain) for j, mk in enumerate(minus_k))
    assert pair(form, c, chain[0]) == 1 and pair(form, c, chain[2]) == 1
    g = dual_graph(chain + [c], form)
    assert has_cycle(g)


def test_multi_edge_counts_as_cycle():
    form = standard_lattice(1)
    # two classes pairing to 2: a chain of length one plus its closing curve
    m = (0, 1, -1, 0, 0, 0, 0, 0, 0)
    minus_k = tuple(-x for x in form.canonical)
    c = tuple(2 * mk - 2 * mm + mm for mk, mm in zip(minus_k, m))  # 2(-K) - M
    assert pair(form, c, m) == 2
    g = dual_graph([m, c], form)
    assert has_cycle(g)


def test_tree_has_no_cycle():
    from dpcyl.embeddings import find_profile

    profile = find_profile(3, "E6")
    g = dual_graph(list(profile.simple_roots), profile.form)
    assert not has_cycle(g)
