"""Search for root configurations of a prescribed Dynkin shape.

Given a degree and a multiset of ADE labels, the search walks the root
list of the lattice and picks simple roots component by component, vertex
by vertex, constraining every new root's pairings against all previously
chosen ones (1 along a diagram edge, 0 otherwise).  All pairings are
looked up in precomputed integer tables indexed by root number.

Because the isometry group fixing K acts transitively on roots in the
lattices of degree <= 5, the first root of the first component may be
pinned to a fixed representative without losing any isomorphism class;
that cuts the search by two orders of magnitude.  For sampling purposes
the candidate order at every level can be shuffled by a seeded RNG.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Callable, Iterator, Optional, Sequence

from .curves import form_for_degree, line_classes, roots
from .lattice import IntersectionForm, pair
from .singularities import (
    DOUBLE_PRIME,
    PRIME,
    SingularityProfile,
    central_vertex_variant,
    validate_config,
)


@lru_cache(maxsize=None)
def system_data(degree: int):
    """Roots, lines and their pairing tables for one degree, cached."""
    form = form_for_degree(degree)
    rts = roots(form).classes
    lns = line_classes(form).classes
    rr = [[pair(form, a, b) for b in rts] for a in rts]
    lr = [[pair(form, l, r) for r in rts] for l in lns]
    return form, rts, lns, rr, lr


def _diagram_edges(family: str, n: int) -> list[tuple[int, int]]:
    """Edges of the canonically ordered ADE diagram on vertices 0..n-1."""
    if family == "A":
        return [(i, i + 1) for i in range(n - 1)]
    if family == "D":
        return [(0, 2), (1, 2)] + [(i, i + 1) for i in range(2, n - 1)]
    if family == "E":
        # matches the canonical order from singularity classification:
        # two long arms walked leaf-first, branch, short leaf, tail inward
        if n == 6:
            return [(0, 2), (2, 4), (1, 3), (3, 4), (4, 5)]
        if n == 7:
            return [(0, 2), (2, 4), (1, 3), (3, 6), (6, 4), (4, 5)]
        if n == 8:
            return [(0, 2), (2, 4), (1, 3), (3, 6), (6, 7), (7, 4), (4, 5)]
    raise ValueError(f"{family}{n}")


def parse_components(sing: str) -> list[tuple[str, int]]:
    """Parse '2A3+A1' into [('A', 3), ('A', 3), ('A', 1)] (largest first)."""
    comps: list[tuple[str, int]] = []
    if sing in ("", "smooth"):
        return comps
    for part in sing.split("+"):
        part = part.strip()
        mult = 1
        i = 0
        while part[i].isdigit():
            i += 1
        if i:
            mult = int(part[:i])
            part = part[i:]
        fam, n = part[0], int(part[1:])
        comps.extend([(fam, n)] * mult)
    comps.sort(key=lambda c: (-c[1], c[0]))
    return comps


def iter_embeddings_idx(
    degree: int,
    components: Sequence[tuple[str, int]],
    rng: Optional[random.Random] = None,
    pin_first_root: bool = True,
) -> Iterator[tuple[int, ...]]:
    """Yield index tuples of valid embeddings (flat, component-major)."""
    form, rts, _, rr, _ = system_data(degree)
    comps = sorted(components, key=lambda c: (-c[1], c[0]))
    total = sum(n for _, n in comps)
    if total > 9 - degree:
        return
    pin = pin_first_root and degree <= 5 and rng is None

    plan = []
    offset = 0
    for fam, n in comps:
        edges = _diagram_edges(fam, n)
        for v in range(n):
            wants = {offset + (a if b == v else b): 1 for a, b in edges if v in (a, b) and max(a, b) == v}
            plan.append((offset, fam, n, v, wants))
        offset += n
    starts = []
    off = 0
    for fam, n in comps:
        starts.append(off)
        off += n

    nroots = len(rts)
    chosen: list[int] = []
    base_order = list(range(nroots))
    if rng is not None:
        rng.shuffle(base_order)

    def rec(level: int) -> Iterator[tuple[int, ...]]:
        if level == len(plan):
            yield tuple(chosen)
            return
        offset, fam, n, v, wants = plan[level]
        if pin and level == 0:
            candidates = [0]
        else:
            candidates = base_order
        comp_index = starts.index(offset)
        for cand in candidates:
            row = rr[cand]
            ok = True
            for j, prev in enumerate(chosen):
                if row[prev] != wants.get(j, 0):
                    ok = False
                    break
            if ok and cand not in chosen:
                # duplicate-component dedup: order equal components by first root
                if v == 0 and comp_index > 0 and comps[comp_index - 1] == comps[comp_index]:
                    if chosen[starts[comp_index - 1]] > cand:
                        continue
                chosen.append(cand)
                yield from rec(level + 1)
                chosen.pop()

    yield from rec(0)


def indices_to_profile(degree: int, idx: Sequence[int]) -> SingularityProfile:
    form, rts, _, _, _ = system_data(degree)
    return validate_config(form, [rts[i] for i in idx])


def line_count_idx(degree: int, idx: Sequence[int]) -> int:
    _, _, lns, _, lr = system_data(degree)
    count = 0
    for li in range(len(lns)):
        row = lr[li]
        if all(row[i] >= 0 for i in idx):
            count += 1
    return count


def embeddings(
    degree: int,
    components: Sequence[tuple[str, int]],
    pin_first_root: bool = True,
) -> Iterator[SingularityProfile]:
    for idx in iter_embeddings_idx(degree, components, pin_first_root=pin_first_root):
        yield indices_to_profile(degree, idx)


def find_profile(
    degree: int,
    sing: str,
    predicate: Optional[Callable[[SingularityProfile], bool]] = None,
    limit: int = 500_000,
    seed: Optional[int] = None,
) -> SingularityProfile:
    """First profile of the given singularity string satisfying a predicate."""
    comps = parse_components(sing)
    rng = random.Random(seed) if seed is not None else None
    count = 0
    for idx in iter_embeddings_idx(degree, comps, rng=rng):
        count += 1
        if count > limit:
            break
        prof = indices_to_profile(degree, idx)
        if predicate is None or predicate(prof):
            return prof
    raise LookupError(f"no embedding of {sing} in degree {degree} matching the constraint")


def line_count(profile: SingularityProfile) -> int:
    from .curves import lines_on_surface

    return len(lines_on_surface(profile).classes)


def line_count_values(degree: int, sing: str, cap: int = 20_000, seed: int = 7) -> list[int]:
    """Distinct #Lines values over embeddings, stopping once two are seen.

    Embeddings are sampled in seeded-random order (the classification
    guarantees at most two values, so the early stop is exact once both
    witnesses appear).
    """
    values: list[int] = []
    comps = parse_components(sing)
    rng = random.Random(seed)
    count = 0
    for idx in iter_embeddings_idx(degree, comps, rng=rng):
        count += 1
        v = line_count_idx(degree, idx)
        if v not in values:
            values.append(v)
            if len(values) == 2:
                break
        if count >= cap:
            break
    return sorted(values)


def profile_with_lines(degree: int, sing: str, num_lines: int, seed: int = 7) -> SingularityProfile:
    comps = parse_components(sing)
    rng = random.Random(seed)
    for idx in iter_embeddings_idx(degree, comps, rng=rng):
        if line_count_idx(degree, idx) == num_lines:
            return indices_to_profile(degree, idx)
    raise LookupError(f"no {sing} embedding with {num_lines} lines in degree {degree}")


def profile_with_variant(degree: int, sing: str, variant: str, seed: int = 7) -> SingularityProfile:
    """Profile whose maximal chain has the requested prime variant."""
    target_n = 9 - 2 * degree

    def pred(prof: SingularityProfile) -> bool:
        for ci, pt in enumerate(prof.points):
            if pt.family == "A" and pt.n == target_n:
                return central_vertex_variant(prof, ci) == variant
        return False

    return find_profile(degree, sing, pred, seed=seed)
