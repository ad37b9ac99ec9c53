"""Picard lattices of weak del Pezzo surfaces and their intersection pairing.

Two lattice models are provided.  For degree d <= 7 the blow-up model of
the plane: basis (l, e_1, ..., e_{9-d}), Gram diag(1, -1, ..., -1) and
canonical class K = -3l + sum e_i.  For degree 8 the rank-two lattice of
the degree-two Hirzebruch surface: basis (M, F) with M^2 = -2, M.F = 1,
F^2 = 0 and K = -2M - 4F.

Divisor classes are plain coefficient tuples in the basis above; rational
classes use Fraction entries.  All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .exact import bareiss_det

Coeffs = tuple[int, ...]
QCoeffs = tuple[Fraction, ...]
AnyCoeffs = Union[Coeffs, QCoeffs]


@dataclass(frozen=True)
class IntersectionForm:
    """A finite-rank integral lattice with a distinguished canonical class."""

    rank: int
    gram: tuple[tuple[int, ...], ...]
    canonical: Coeffs
    degree: int
    basis_names: tuple[str, ...]

    def __post_init__(self):
        assert len(self.gram) == self.rank
        assert all(len(r) == self.rank for r in self.gram)
        assert self.gram == tuple(zip(*self.gram)), "Gram matrix must be symmetric"
        assert pair(self, self.canonical, self.canonical) == self.degree

    @property
    def is_diagonal(self) -> bool:
        return all(self.gram[i][j] == 0 for i in range(self.rank) for j in range(self.rank) if i != j)


def standard_lattice(d: int) -> IntersectionForm:
    """Blow-up-of-the-plane lattice for degree d in 1..7."""
    if not 1 <= d <= 7:
        raise ValueError(f"degree must be in 1..7, got {d}")
    m = 9 - d
    rank = m + 1
    gram = tuple(
        tuple((1 if i == 0 else -1) if i == j else 0 for j in range(rank)) for i in range(rank)
    )
    canonical = (-3,) + (1,) * m
    names = ("l",) + tuple(f"e{i}" for i in range(1, m + 1))
    return IntersectionForm(rank, gram, canonical, d, names)


def hirzebruch_lattice() -> IntersectionForm:
    """Rank-two lattice of the degree-two Hirzebruch surface (degree 8)."""
    gram = ((-2, 1), (1, 0))
    return IntersectionForm(2, gram, (-2, -4), 8, ("M", "F"))


def pair(form: IntersectionForm, a: Sequence, b: Sequence):
    """Exact intersection number a . b; int when both inputs are integral."""
    if len(a) != form.rank or len(b) != form.rank:
        raise ValueError("coefficient length does not match lattice rank")
    if form.is_diagonal:
        g = form.gram
        return sum(g[i][i] * a[i] * b[i] for i in range(form.rank))
    total = 0
    for i, ai in enumerate(a):
        if ai:
            row = form.gram[i]
            total += ai * sum(row[j] * b[j] for j in range(form.rank) if b[j])
    return total


def self_pair(form: IntersectionForm, a: Sequence):
    return pair(form, a, a)


def k_pair(form: IntersectionForm, a: Sequence):
    return pair(form, a, form.canonical)


def add(a: AnyCoeffs, b: AnyCoeffs) -> AnyCoeffs:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: AnyCoeffs, b: AnyCoeffs) -> AnyCoeffs:
    return tuple(x - y for x, y in zip(a, b))


def neg(a: AnyCoeffs) -> AnyCoeffs:
    return tuple(-x for x in a)


def scale(c, a: AnyCoeffs) -> AnyCoeffs:
    return tuple(c * x for x in a)


def zero(form: IntersectionForm) -> Coeffs:
    return (0,) * form.rank


def combination(form: IntersectionForm, coeffs: Sequence, classes: Sequence[AnyCoeffs]) -> AnyCoeffs:
    out = [0] * form.rank
    for c, cls in zip(coeffs, classes):
        for i, x in enumerate(cls):
            out[i] += c * x
    return tuple(out)


def gram_matrix(form: IntersectionForm, classes: Sequence[AnyCoeffs]) -> list[list[int]]:
    return [[pair(form, a, b) for b in classes] for a in classes]


def is_negative_definite(form: IntersectionForm, basis: Sequence[Coeffs]) -> bool:
    """Leading-principal-minor test on the restricted Gram matrix.

    True iff the pairing restricted to the given classes is negative
    definite, i.e. the k-th leading minor has sign (-1)^k for every k.
    A linearly dependent list fails the test.
    """
    if not basis:
        raise ValueError("basis must be nonempty")
    g = gram_matrix(form, basis)
    for k in range(1, len(basis) + 1):
        minor = bareiss_det([row[:k] for row in g[:k]])
        if (-1) ** k * minor <= 0:
            return False
    return True


def signature(form: IntersectionForm) -> tuple[int, int]:
    """(positive, negative) inertia of the Gram matrix, computed exactly."""
    n = form.rank
    pos = neg_count = 0
    prev = 1
    # Jacobi: signs of leading principal minors (with symmetric pivoting
    # avoided: our two Gram shapes never produce a zero leading minor).
    for k in range(1, n + 1):
        d = bareiss_det([row[:k] for row in form.gram[:k]])
        if d == 0:
            raise ValueError("degenerate leading minor")
        if d * prev > 0:
            pos += 1
        else:
            neg_count += 1
        prev = d
    return pos, neg_count


def to_q(a: Sequence) -> QCoeffs:
    return tuple(Fraction(x) for x in a)


def fmt_class(form: IntersectionForm, a: Sequence) -> str:
    """Human-readable rendering, e.g. 'l - e1 - e2'."""
    parts = []
    for name, c in zip(form.basis_names, a):
        if c == 0:
            continue
        c = Fraction(c)
        if not parts:
            if c == 1:
                parts.append(name)
            elif c == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{c}*{name}")
        else:
            sign = "+" if c > 0 else "-"
            c = abs(c)
            parts.append(f"{sign} {name}" if c == 1 else f"{sign} {c}*{name}")
    return " ".join(parts) if parts else "0"
