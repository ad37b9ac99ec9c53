from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dpcyl.lattice import (
    add,
    combination,
    hirzebruch_lattice,
    is_negative_definite,
    neg,
    pair,
    scale,
    signature,
    standard_lattice,
    sub,
    to_q,
)


def test_standard_lattice_shapes():
    for d in range(1, 8):
        form = standard_lattice(d)
        assert form.rank == 10 - d
        assert form.canonical == (-3,) + (1,) * (9 - d)
        assert pair(form, form.canonical, form.canonical) == d
        assert form.gram[0][0] == 1
        assert all(form.gram[i][i] == -1 for i in range(1, form.rank))


def test_standard_lattice_degree_range():
    with pytest.raises(ValueError):
        standard_lattice(0)
    with pytest.raises(ValueError):
        standard_lattice(8)


def test_degree_seven_basis():
    form = standard_lattice(7)
    assert form.rank == 3
    assert form.canonical == (-3, 1, 1)


def test_exceptional_orthonormality():
    form = standard_lattice(1)
    assert form.rank == 9
    for i in range(1, 9):
        for j in range(1, 9):
            ei = tuple(1 if k == i else 0 for k in range(9))
            ej = tuple(1 if k == j else 0 for k in range(9))
            assert pair(form, ei, ej) == (-1 if i == j else 0)


def test_hirzebruch_lattice():
    form = hirzebruch_lattice()
    m, f = (1, 0), (0, 1)
    assert pair(form, m, m) == -2
    assert pair(form, m, f) == 1
    assert pair(form, f, f) == 0
    assert form.canonical == (-2, -4)
    # expanding (-2M - 4F) against the Gram matrix
    assert pair(form, form.canonical, form.canonical) == 8
    assert pair(form, form.canonical, m) == 0
    assert pair(form, form.canonical, f) == -2


def test_pair_dimension_mismatch():
    form = standard_lattice(3)
    with pytest.raises(ValueError):
        pair(form, (1, 0), (0,) * 7)


def test_minus_k_meets_every_exceptional_once():
    form = standard_lattice(3)
    minus_k = neg(form.canonical)
    for i in range(1, 7):
        ei = tuple(1 if k == i else 0 for k in range(7))
        assert pair(form, minus_k, ei) == 1


def test_line_self_pairing():
    form = standard_lattice(3)
    line = (1,) + (0,) * 6
    assert pair(form, line, line) == 1


def test_chain_anticanonical_complement_is_minus_one():
    # degree 1, chain of length n: (-K - sum M_j)^2 = -1
    form = standard_lattice(1)
    # chain e1-e2, e2-e3, ..., inside the degree-one lattice
    for n in range(1, 8):
        chain = []
        for i in range(n):
            v = [0] * 9
            v[i + 1], v[i + 2] = 1, -1
            chain.append(tuple(v))
        m = combination(form, (1,) * n, chain)
        e = sub(neg(form.canonical), m)
        assert pair(form, e, e) == -1


@settings(max_examples=60, deadline=None)
@given(
    st.integers(1, 7),
    st.lists(st.fractions(min_value=-5, max_value=5), min_size=10, max_size=10),
    st.lists(st.fractions(min_value=-5, max_value=5), min_size=10, max_size=10),
    st.fractions(min_value=-4, max_value=4),
)
def test_pair_symmetric_bilinear(d, xs, ys, c):
    form = standard_lattice(d)
    a = tuple(xs[: form.rank])
    b = tuple(ys[: form.rank])
    k = to_q(form.canonical)
    assert pair(form, a, b) == pair(form, b, a)
    assert pair(form, scale(c, a), b) == c * pair(form, a, b)
    assert pair(form, add(a, k), b) == pair(form, a, b) + pair(form, k, b)


def test_negative_definite_examples():
    form = standard_lattice(3)
    e1 = (0, 1, 0, 0, 0, 0, 0)
    e2 = (0, 0, 1, 0, 0, 0, 0)
    assert is_negative_definite(form, [e1, e2])
    line = (1, 0, 0, 0, 0, 0, 0)
    assert not is_negative_definite(form, [line])
    # an ADE root pair: squares -2, product 1
    r1 = (0, 1, -1, 0, 0, 0, 0)
    r2 = (0, 0, 1, -1, 0, 0, 0)
    assert is_negative_definite(form, [r1, r2])
    with pytest.raises(ValueError):
        is_negative_definite(form, [])


def test_signature_is_lorentzian():
    for d in list(range(1, 8)) + [8]:
        form = hirzebruch_lattice() if d == 8 else standard_lattice(d)
        assert signature(form) == (1, form.rank - 1)
