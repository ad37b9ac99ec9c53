"""Validation and classification of Du Val root configurations.

A configuration is a list of effective simple roots whose dual graph is a
disjoint union of ADE Dynkin diagrams with at most 9 - d vertices.  Each
connected component is classified and put into a canonical order:

* A_n: chain order M_1 .. M_n, ties broken lexicographically;
* D_n: the two short-arm leaves M_1, M_2 attached to the branch vertex
  M_3, then the tail M_4 .. M_n;
* E_6: arms M_1 - M_3 - M_5 and M_2 - M_4 - M_5 into the branch vertex
  M_5, tail leaf M_6 (E_7 and E_8 extend the same walk tail-first).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .curves import dual_graph, lines_on_surface
from .lattice import Coeffs, IntersectionForm, is_negative_definite, k_pair, pair, self_pair


class ConfigError(ValueError):
    """Raised when a root list is not a valid Du Val configuration."""


@dataclass(frozen=True)
class SingularPointData:
    family: str  # "A", "D" or "E"
    n: int
    ordered: tuple[int, ...]  # indices into profile.simple_roots, canonical order

    @property
    def label(self) -> str:
        return f"{self.family}{self.n}"


@dataclass(frozen=True)
class SingularityProfile:
    form: IntersectionForm
    simple_roots: tuple[Coeffs, ...]
    points: tuple[SingularPointData, ...]

    @property
    def degree(self) -> int:
        return self.form.degree

    def component_of(self, root_index: int) -> int:
        for ci, pt in enumerate(self.points):
            if root_index in pt.ordered:
                return ci
        raise KeyError(root_index)

    def point_id(self, ci: int) -> str:
        pt = self.points[ci]
        same = [i for i, p in enumerate(self.points) if p.label == pt.label]
        return f"{pt.label}.{same.index(ci)}"

    def point_by_id(self, pid: str) -> int:
        for ci in range(len(self.points)):
            if self.point_id(ci) == pid:
                return ci
        raise KeyError(pid)

    def ordered_roots(self, ci: int) -> tuple[Coeffs, ...]:
        return tuple(self.simple_roots[i] for i in self.points[ci].ordered)


@dataclass(frozen=True)
class TypeTriplet:
    degree: int
    singularities: tuple[str, ...]  # sorted ADE labels, e.g. ("A5", "A2")
    num_lines: int

    @property
    def sing_string(self) -> str:
        from collections import Counter

        counts = Counter(self.singularities)

        def key(lab):
            return (-int(lab[1:]), lab[0])

        parts = []
        for lab in sorted(counts, key=key):
            c = counts[lab]
            parts.append(lab if c == 1 else f"{c}{lab}")
        return "+".join(parts) if parts else "smooth"


def _component_partition(adj: list[list[int]], n: int) -> list[list[int]]:
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        comp, stack = [], [s]
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _classify_tree(comp: list[int], adj: list[list[int]], roots: Sequence[Coeffs]) -> SingularPointData:
    """Classify one connected component; raises ConfigError if not ADE."""
    n = len(comp)
    deg = {v: len([w for w in adj[v] if w in comp]) for v in comp}
    edge_count = sum(deg.values()) // 2
    if edge_count != n - 1:
        raise ConfigError("component contains a cycle")
    if any(d > 3 for d in deg.values()):
        raise ConfigError("vertex of valence > 3")
    branches = [v for v in comp if deg[v] == 3]
    if len(branches) > 1:
        raise ConfigError("more than one branch vertex")

    if not branches:
        # chain: fix the lexicographically smaller orientation
        if n == 1:
            order = (comp[0],)
        else:
            ends = [v for v in comp if deg[v] <= 1]
            walk = _walk_chain(ends[0], adj, comp)
            a = tuple(walk)
            b = tuple(reversed(walk))
            order = min(a, b, key=lambda o: tuple(roots[i] for i in o))
        return SingularPointData("A", n, order)

    b = branches[0]
    arms = []
    for first in sorted(adj[b], key=lambda i: roots[i]):
        arm = [first]
        prev, cur = b, first
        while True:
            nxt = [w for w in adj[cur] if w != prev and w in comp]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            arm.append(cur)
        arms.append(arm)
    arms.sort(key=lambda arm: (len(arm), tuple(roots[i] for i in arm)))
    lens = tuple(len(a) for a in arms)
    if lens == (1, 1, n - 3):
        # D_n: two leaves, branch, then the tail outward
        order = (arms[0][0], arms[1][0], b) + tuple(arms[2])
        return SingularPointData("D", n, order)
    if lens in ((1, 2, 2), (1, 2, 3), (1, 2, 4)):
        fam_n = {(1, 2, 2): 6, (1, 2, 3): 7, (1, 2, 4): 8}[lens]
        short, mid, long_ = arms
        # leaves of the two long arms first, then their inner vertices, the
        # branch vertex, the short leaf, and any remaining tail inward.
        order = [mid[-1], long_[-1], mid[-2], long_[-2], b, short[0]]
        order.extend(reversed(long_[:-2]))
        return SingularPointData("E", fam_n, tuple(order))
    raise ConfigError(f"component with arm lengths {lens} is not an ADE diagram")


def _walk_chain(start: int, adj: list[list[int]], comp: list[int]) -> list[int]:
    walk = [start]
    prev = None
    cur = start
    while True:
        nxt = [w for w in adj[cur] if w != prev and w in comp]
        if not nxt:
            return walk
        prev, cur = cur, nxt[0]
        walk.append(cur)


def validate_config(form: IntersectionForm, root_list: Sequence[Coeffs]) -> SingularityProfile:
    """Check a root list and return the classified profile.

    Errors: a class that is not a root, a pairing outside {0, 1}, a
    component that is not an ADE diagram, or more than 9 - d roots.
    """
    roots_t = tuple(tuple(r) for r in root_list)
    if len(set(roots_t)) != len(roots_t):
        raise ConfigError("duplicate root")
    for r in roots_t:
        if len(r) != form.rank:
            raise ConfigError("coefficient length does not match lattice rank")
        if self_pair(form, r) != -2 or k_pair(form, r) != 0:
            raise ConfigError(f"class {r} is not a root (needs square -2, K-pairing 0)")
    n = len(roots_t)
    if n > 9 - form.degree:
        raise ConfigError(f"{n} roots exceed the bound {9 - form.degree} for degree {form.degree}")
    adj: list[list[int]] = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            p = pair(form, roots_t[i], roots_t[j])
            if p not in (0, 1):
                raise ConfigError(f"pairing {p} between roots {i} and {j} (must be 0 or 1)")
            if p == 1:
                adj[i].append(j)
                adj[j].append(i)
    comps = _component_partition(adj, n)
    points = [_classify_tree(c, adj, roots_t) for c in comps]
    points.sort(key=lambda p: (-p.n, p.family, tuple(roots_t[i] for i in p.ordered)))
    profile = SingularityProfile(form, roots_t, tuple(points))
    if roots_t:
        assert is_negative_definite(form, roots_t)
    return profile


def classify_component(profile: SingularityProfile, component: int) -> SingularPointData:
    return profile.points[component]


def surface_type(profile: SingularityProfile) -> TypeTriplet:
    labels = tuple(sorted(p.label for p in profile.points))
    n_lines = len(lines_on_surface(profile).classes)
    return TypeTriplet(profile.degree, labels, n_lines)


PRIME = "prime"
DOUBLE_PRIME = "double_prime"


def central_vertex_variant(profile: SingularityProfile, component: int) -> str:
    """Prime/double-prime split of a maximal chain point.

    Only defined for an A_{9-2d} chain (A_5 in degree 2, A_7 in degree 1):
    'prime' iff some line of the surface meets the chain's central root.
    """
    pt = profile.points[component]
    d = profile.degree
    if d not in (1, 2) or pt.family != "A" or pt.n != 9 - 2 * d:
        raise ValueError(
            f"variant is only defined for an A{9 - 2 * profile.degree} point in degree {profile.degree}"
        )
    central = profile.simple_roots[pt.ordered[pt.n // 2]]
    for line in lines_on_surface(profile).classes:
        if pair(profile.form, line, central) > 0:
            return PRIME
    return DOUBLE_PRIME


def construction_case(degree: int, triplet: TypeTriplet) -> Optional[int]:
    """Construction-recipe label (1..10) for rank-one types of degree >= 3.

    The lookup matches on degree, singularity multiset and line count; it
    returns None for types that have no such recipe.
    """
    if degree < 3:
        raise ValueError("construction cases exist only for degree >= 3")
    from .catalog import construction_case_table

    for (d, sing, lines), case in construction_case_table().items():
        if d == degree and sing == triplet.sing_string and lines == triplet.num_lines:
            return case
    return None
