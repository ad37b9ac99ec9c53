"""Small exact linear algebra over Z and Q.

Everything in this package is integer or rational; there is no floating
point and no tolerance anywhere.  Matrices are tuples of tuples (rows),
vectors are tuples.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Vec = tuple[int, ...]
QVec = tuple[Fraction, ...]
Mat = tuple[tuple[int, ...], ...]


def mat(rows: Sequence[Sequence[int]]) -> Mat:
    return tuple(tuple(int(x) for x in r) for r in rows)


def identity(n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a, b):
    bt = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_vec(a, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def transpose(a):
    return tuple(zip(*a))


def bareiss_det(rows: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant (fraction-free Bareiss elimination)."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def solve_qq(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> QVec:
    """Solve the square system a x = b exactly; raises on singular input."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular system")
        m[col], m[piv] = m[piv], m[col]
        inv = m[col][col]
        m[col] = [x / inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(m[i][n] for i in range(n))


def rank_qq(rows: Sequence[Sequence[Fraction]]) -> int:
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    col = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = m[rank][col]
        m[rank] = [x / inv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def kernel_zz(a: Sequence[Sequence[int]]) -> list[Vec]:
    """Basis of {x in Z^n : x A = 0} for an integer matrix A (n rows).

    Integer row reduction of [A | I]: rows whose A-part vanishes give a
    basis of the integer kernel (which is saturated by construction).
    """
    n = len(a)
    ncols = len(a[0]) if n else 0
    work = [list(a[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    row = 0
    for col in range(ncols):
        # gcd-reduce column `col` below `row` into a single pivot
        while True:
            nz = [r for r in range(row, n) if work[r][col] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda r: abs(work[r][col]))
            work[row], work[piv] = work[piv], work[row]
            done = True
            for r in range(row + 1, n):
                if work[r][col] != 0:
                    q = work[r][col] // work[row][col]
                    work[r] = [x - q * y for x, y in zip(work[r], work[row])]
                    if work[r][col] != 0:
                        done = False
            if done:
                break
        if any(work[r][col] != 0 for r in range(row, n)):
            row += 1
    return [tuple(w[ncols:]) for w in work if all(x == 0 for x in w[:ncols])]


def invert_qq(a: Sequence[Sequence[Fraction]]) -> tuple[QVec, ...]:
    n = len(a)
    cols = []
    for j in range(n):
        e = [Fraction(1 if i == j else 0) for i in range(n)]
        cols.append(solve_qq(a, e))
    return tuple(zip(*cols))


def is_integral(m) -> bool:
    return all(Fraction(x).denominator == 1 for row in m for x in row)


def to_int_mat(m) -> Mat:
    return tuple(tuple(int(x) for x in row) for row in m)
