"""Enumeration of root classes and line classes, and dual graphs.

Roots are the classes D with D^2 = -2 and D.K = 0; lines are the classes
with D^2 = -1 and D.K = -1.  Both sets are finite and are enumerated by a
bounded backtracking search over coefficients, pruned with the
Cauchy-Schwarz inequality on every prefix.  A second, independent strategy
is provided for each set (reflection closure for roots, shape-pattern
expansion for lines) so the counts can be cross-checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import isqrt
from typing import Iterable, Literal, Sequence

from .lattice import Coeffs, IntersectionForm, hirzebruch_lattice, pair, standard_lattice


@dataclass(frozen=True)
class CurveSet:
    form: IntersectionForm
    classes: tuple[Coeffs, ...]
    kind: Literal["root", "line"]


@dataclass(frozen=True)
class DualGraph:
    """Incidence multigraph of a curve configuration.

    Vertices carry their self-intersection as label; an edge (i, j, m)
    records pairing m >= 1 between distinct classes i and j.
    """

    vertices: tuple[Coeffs, ...]
    edges: tuple[tuple[int, int, int], ...]
    labels: tuple[int, ...]

    def neighbors(self, i: int) -> list[int]:
        out = []
        for a, b, _ in self.edges:
            if a == i:
                out.append(b)
            elif b == i:
                out.append(a)
        return sorted(out)

    def degree(self, i: int) -> int:
        return sum(1 for a, b, _ in self.edges if i in (a, b))


def _search_vectors(m: int, x: int, target_sum: int, target_sq: int) -> Iterable[tuple[int, ...]]:
    """All integer y in Z^m with sum(y) = target_sum, sum(y^2) = target_sq.

    Backtracks coordinate by coordinate; a prefix is cut when the
    Cauchy-Schwarz bound (remaining sum)^2 <= (slots left) * (square budget)
    fails or when the square budget is exceeded.
    """
    out: list[tuple[int, ...]] = []

    def rec(idx: int, acc: list[int], s: int, q: int):
        if idx == m:
            if s == 0 and q == 0:
                out.append(tuple(acc))
            return
        slots = m - idx
        if s * s > slots * q:
            return
        bound = isqrt(q)
        for y in range(-bound, bound + 1):
            q2 = q - y * y
            if q2 < 0:
                continue
            s2 = s - y
            if s2 * s2 > (slots - 1) * q2 if slots > 1 else (s2 != 0 or q2 != 0):
                continue
            acc.append(y)
            rec(idx + 1, acc, s2, q2)
            acc.pop()

    rec(0, [], target_sum, target_sq)
    return out


def _enumerate_standard(form: IntersectionForm, square: int, k_value: int) -> list[Coeffs]:
    """Classes D = x*l + sum y_i e_i with D^2 = square, D.K = k_value."""
    m = form.rank - 1
    found = []
    # D.K = -3x - sum(y); D^2 = x^2 - sum(y^2)
    # Cauchy-Schwarz on the whole vector bounds x.
    xs = []
    for x in range(-20, 21):
        s = -k_value - 3 * x
        q = x * x - square
        if q < 0:
            continue
        if s * s <= m * q:
            xs.append((x, s, q))
    for x, s, q in xs:
        for y in _search_vectors(m, x, s, q):
            found.append((x,) + y)
    return sorted(found)


@lru_cache(maxsize=None)
def _roots_cached(rank: int, degree: int) -> tuple[Coeffs, ...]:
    form = form_for_degree(degree)
    if degree == 8:
        return ((1, 0), (-1, 0))
    return tuple(_enumerate_standard(form, -2, 0))


@lru_cache(maxsize=None)
def _lines_cached(rank: int, degree: int) -> tuple[Coeffs, ...]:
    form = form_for_degree(degree)
    if degree == 8:
        # a*M + b*F: -2a^2 + 2ab = -1 has no integer solutions.
        return ()
    return tuple(_enumerate_standard(form, -1, -1))


def form_for_degree(d: int) -> IntersectionForm:
    return hirzebruch_lattice() if d == 8 else standard_lattice(d)


def roots(form: IntersectionForm) -> CurveSet:
    """All classes D with D^2 = -2 and D.K = 0, in lexicographic order."""
    return CurveSet(form, _roots_cached(form.rank, form.degree), "root")


def line_classes(form: IntersectionForm) -> CurveSet:
    """All classes D with D^2 = -1 and D.K = -1, in lexicographic order."""
    return CurveSet(form, _lines_cached(form.rank, form.degree), "line")


def reflect(form: IntersectionForm, alpha: Coeffs, x: Coeffs) -> Coeffs:
    """Reflection of x in the root alpha: x + (x.alpha) alpha."""
    c = pair(form, x, alpha)
    return tuple(xi + c * ai for xi, ai in zip(x, alpha))


def simple_roots(form: IntersectionForm) -> list[Coeffs]:
    if form.degree == 8:
        return [(1, 0)]
    m = form.rank - 1
    out = []
    if m >= 3:
        out.append((1, -1, -1, -1) + (0,) * (m - 3))
    for i in range(1, m):
        v = [0] * form.rank
        v[i] = 1
        v[i + 1] = -1
        out.append(tuple(v))
    return out


def roots_by_reflection(form: IntersectionForm) -> tuple[Coeffs, ...]:
    """Independent root enumeration: close the simple roots under reflections."""
    seeds = simple_roots(form)
    seen = set(seeds) | {tuple(-x for x in s) for s in seeds}
    frontier = list(seen)
    while frontier:
        nxt = []
        for alpha in list(seen):
            for x in frontier:
                y = reflect(form, alpha, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(seen))


def _line_shapes(d: int) -> Iterable[tuple[int, tuple[int, ...]]]:
    """Sorted multiplicity patterns (a; m_1 >= ... >= m_k) of line classes.

    A line a*l - sum m_i e_i satisfies sum m = 3a - 1 and sum m^2 = a^2 + 1.
    Patterns are enumerated as non-increasing integer tuples, which is a
    genuinely different search shape from the coordinate backtracking used
    by `line_classes`.
    """
    m = 9 - d
    for a in range(0, 8):
        s, q = 3 * a - 1, a * a + 1
        if s * s > m * q and a > 0:
            continue

        def rec(parts: list[int], s_left: int, q_left: int, hi: int, slots: int):
            if slots == 0:
                if s_left == 0 and q_left == 0:
                    yield tuple(parts)
                return
            lo = -1  # only the exceptional classes themselves dip below 0
            for v in range(min(hi, s_left + slots), lo - 1, -1):
                if v * v > q_left:
                    continue
                s2, q2 = s_left - v, q_left - v * v
                if s2 * s2 > (slots - 1) * max(q2, 0) and slots > 1:
                    continue
                if slots == 1 and (s2 != 0 or q2 != 0):
                    continue
                parts.append(v)
                yield from rec(parts, s2, q2, v, slots - 1)
                parts.pop()

        for patt in rec([], s, q, max(a, 1), m):
            yield a, patt


def line_classes_by_patterns(form: IntersectionForm) -> tuple[Coeffs, ...]:
    """Independent line enumeration via shape patterns and permutations."""
    if form.degree == 8:
        out = []
        for a in range(-2, 3):
            for b in range(-5, 6):
                v = (a, b)
                if pair(form, v, v) == -1 and pair(form, v, form.canonical) == -1:
                    out.append(v)
        return tuple(sorted(out))
    m = 9 - form.degree
    seen = set()
    for a, patt in _line_shapes(form.degree):
        for perm in set(permutations(patt)):
            seen.add((a,) + tuple(-x for x in perm))
    return tuple(sorted(seen))


def lines_on_surface(profile) -> CurveSet:
    """Line classes pairing >= 0 with every root of the profile.

    The size of this set is the '#Lines' entry of the surface type.
    """
    form = profile.form
    kept = tuple(
        d
        for d in line_classes(form).classes
        if all(pair(form, d, r) >= 0 for r in profile.simple_roots)
    )
    return CurveSet(form, kept, "line")


def dual_graph(classes: Sequence[Coeffs], form: IntersectionForm) -> DualGraph:
    """Multiplicity-weighted incidence graph of distinct curve classes."""
    edges = []
    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            p = pair(form, classes[i], classes[j])
            if p < 0:
                raise ValueError(
                    f"negative pairing {p} between distinct classes {i} and {j}: "
                    "not a reduced curve configuration"
                )
            if p > 0:
                edges.append((i, j, p))
    labels = tuple(pair(form, c, c) for c in classes)
    return DualGraph(tuple(classes), tuple(edges), labels)


def has_cycle(g: DualGraph) -> bool:
    """Cycle test for the multigraph; a multiplicity >= 2 edge is a cycle."""
    if any(m >= 2 for _, _, m in g.edges):
        return True
    parent = list(range(len(g.vertices)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b, _ in g.edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return True
        parent[ra] = rb
    return False


def render_graph(g: DualGraph) -> str:
    """ASCII rendering: one vertex per line with its incidences.

    Follows the usual pictogram vocabulary: a (-2)-class prints as a small
    circle, a (-1)-class as a filled dot.
    """
    sym = {-2: "o", -1: "*"}
    lines = []
    for i, lab in enumerate(g.labels):
        mark = sym.get(lab, f"[{lab}]")
        nbrs = []
        for a, b, m in g.edges:
            if i in (a, b):
                other = b if a == i else a
                nbrs.append(f"{other}" + ("" if m == 1 else f"(x{m})"))
        lines.append(f"  {i}: {mark} -- {', '.join(nbrs) if nbrs else '(isolated)'}")
    return "\n".join(lines)
