"""Construction of integral lattice isometries with prescribed behavior.

A Galois action on the lattice of a rank-one surface is pinned down by
what it does to the configuration's simple roots.  Such a map is built
here by prescription: images are fixed on the roots and on K, and on the
orthogonal complement of their span (a negative definite sublattice, so
its isometry group is finite) every isometry is tried in turn; each
choice determines a unique rational extension to the whole lattice, and
exactly the integral ones are kept.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Optional, Sequence

from .exact import identity, invert_qq, is_integral, kernel_zz, mat_mul, mat_vec, rank_qq, to_int_mat
from .lattice import Coeffs, IntersectionForm, pair
from .singularities import SingularityProfile


def orthogonal_complement(form: IntersectionForm, classes: Sequence[Coeffs]) -> list[Coeffs]:
    """Saturated integer basis of the sublattice pairing to zero with all inputs."""
    a = [[sum(form.gram[i][k] * c[k] for k in range(form.rank)) for c in classes] for i in range(form.rank)]
    return kernel_zz(a)


def _lagrange_decomposition(p):
    """Positive definite rational P as sum d_i (x_i + sum u_ij x_j)^2."""
    c = len(p)
    a = [[Fraction(p[i][j]) for j in range(c)] for i in range(c)]
    ds, us = [], []
    for i in range(c):
        d = a[i][i]
        assert d > 0, "form is not positive definite"
        u = [a[i][j] / d for j in range(c)]
        for j in range(i + 1, c):
            for k in range(i + 1, c):
                a[j][k] -= a[i][j] * a[i][k] / d
        ds.append(d)
        us.append(u)
    return ds, us


def vectors_of_norm(gram, norm: int) -> list[tuple[int, ...]]:
    """All integer vectors with v^T G v = norm for negative definite G."""
    c = len(gram)
    if c == 0:
        return []
    target = Fraction(-norm)
    if target < 0:
        return []
    ds, us = _lagrange_decomposition([[-gram[i][j] for j in range(c)] for i in range(c)])
    out: list[tuple[int, ...]] = []
    vec = [0] * c

    def rec(i: int, remaining: Fraction):
        if i < 0:
            if remaining == 0:
                out.append(tuple(vec))
            return
        center = sum(us[i][j] * vec[j] for j in range(i + 1, c))
        bound2 = remaining / ds[i]
        # integer t with (t + center)^2 <= bound2, checked exactly
        approx = int(-center)
        t = approx
        while ds[i] * (Fraction(t) + center) ** 2 <= remaining:
            t -= 1
        lo = t + 1
        t = approx + 1
        while ds[i] * (Fraction(t) + center) ** 2 <= remaining:
            t += 1
        hi = t - 1
        for t in range(lo, hi + 1):
            used = ds[i] * (Fraction(t) + center) ** 2
            if used <= remaining:
                vec[i] = t
                rec(i - 1, remaining - used)
        vec[i] = 0

    rec(c - 1, target)
    return sorted(out)


def complement_isometries(gram) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All U with U^T G U = G, for negative definite G, lazily.

    -I and +I come first since they are by far the most common choices.
    """
    c = len(gram)
    neg = tuple(tuple(-1 if i == j else 0 for j in range(c)) for i in range(c))
    ident = identity(c)
    yield neg
    if c == 0:
        return
    yield ident
    by_norm = {}
    for i in range(c):
        n = gram[i][i]
        if n not in by_norm:
            by_norm[n] = vectors_of_norm(gram, n)

    def pr(u, v):
        return sum(u[i] * gram[i][j] * v[j] for i in range(c) for j in range(c))

    cols: list[tuple[int, ...]] = []

    def rec(i: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if i == c:
            u = tuple(zip(*cols))  # rows of U, whose columns are the images
            if u != neg and u != ident:
                yield u
            return
        for w in by_norm[gram[i][i]]:
            if all(pr(w, cols[j]) == gram[i][j] for j in range(i)):
                cols.append(w)
                yield from rec(i + 1)
                cols.pop()

    yield from rec(0)


def extend_prescribed(
    form: IntersectionForm,
    domain: Sequence[Coeffs],
    images: Sequence[Sequence],
) -> Optional[tuple[tuple[int, ...], ...]]:
    """The unique linear map sending domain[i] -> images[i], if integral.

    The domain must be a Q-basis of the whole lattice.  Returns the
    integer matrix acting on coefficient columns, or None.
    """
    dom_cols = tuple(zip(*[tuple(Fraction(x) for x in v) for v in domain]))
    img_cols = tuple(zip(*[tuple(Fraction(x) for x in v) for v in images]))
    dom_inv = invert_qq(dom_cols)
    t = mat_mul(img_cols, dom_inv)
    if not is_integral(t):
        return None
    return to_int_mat(t)


def is_isometry(form: IntersectionForm, t) -> bool:
    tt = tuple(zip(*t))
    return mat_mul(mat_mul(tt, form.gram), t) == tuple(tuple(row) for row in form.gram)


def fixed_rank(form: IntersectionForm, generators: Sequence) -> int:
    """Rank of the common fixed sublattice of the generators."""
    rows = []
    n = form.rank
    for t in generators:
        for i in range(n):
            rows.append([Fraction(t[i][j] - (1 if i == j else 0)) for j in range(n)])
    if not rows:
        return n
    return n - rank_qq(rows)


def group_closure(generators: Sequence, cap: int = 1_000_000) -> set:
    """All products of the generators; raises if the cap is exceeded."""
    gens = [tuple(tuple(row) for row in g) for g in generators]
    n = len(gens[0]) if gens else 0
    ident = identity(n)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                p = mat_mul(g, m)
                if p not in seen:
                    if len(seen) >= cap:
                        raise ValueError(f"group closure exceeds cap {cap}")
                    seen.add(p)
                    nxt.append(p)
        frontier = nxt
    return seen


def diagram_autos(family: str, n: int) -> list[tuple[int, ...]]:
    """Automorphisms of a canonically ordered ADE diagram, as index maps."""
    ident = tuple(range(n))
    if family == "A":
        return [ident] if n == 1 else [ident, tuple(reversed(ident))]
    if family == "D":
        if n == 4:
            out = []
            for p in ((0, 1, 3), (0, 3, 1), (1, 0, 3), (1, 3, 0), (3, 0, 1), (3, 1, 0)):
                m = list(range(4))
                m[0], m[1], m[3] = p
                out.append(tuple(m))
            return out
        return [ident, (1, 0) + tuple(range(2, n))]
    if family == "E" and n == 6:
        return [ident, (1, 0, 3, 2, 4, 5)]
    return [ident]


def _op_maps(profile: SingularityProfile, op) -> list[dict[int, int]]:
    """Root-index maps (over the profile's root indices) realizing one op.

    Ops: ('fix', i), ('flip', i), ('swap', i, j), ('cycle', [i, j, ...]).
    Each returned dict is one orientation choice.
    """
    kind = op[0]
    pts = profile.points
    if kind == "fix":
        i = op[1]
        return [{r: r for r in pts[i].ordered}]
    if kind == "flip":
        i = op[1]
        pt = pts[i]
        out = []
        for auto in diagram_autos(pt.family, pt.n):
            if auto == tuple(range(pt.n)):
                continue
            out.append({pt.ordered[a]: pt.ordered[auto[a]] for a in range(pt.n)})
        return out
    if kind == "swap":
        i, j = op[1], op[2]
        a, b = pts[i], pts[j]
        assert (a.family, a.n) == (b.family, b.n)
        out = []
        for auto1 in diagram_autos(a.family, a.n):
            for auto2 in diagram_autos(a.family, a.n):
                m = {}
                for v in range(a.n):
                    m[a.ordered[v]] = b.ordered[auto1[v]]
                    m[b.ordered[v]] = a.ordered[auto2[v]]
                out.append(m)
        return out
    if kind == "cycle":
        comps = op[1]
        shapes = {(pts[i].family, pts[i].n) for i in comps}
        assert len(shapes) == 1
        fam, n = shapes.pop()
        autos = diagram_autos(fam, n)
        out = []
        for combo in product(autos, repeat=len(comps)):
            m = {}
            for k, ci in enumerate(comps):
                cj = comps[(k + 1) % len(comps)]
                auto = combo[k]
                for v in range(n):
                    m[pts[ci].ordered[v]] = pts[cj].ordered[auto[v]]
            out.append(m)
        return out
    raise ValueError(op)


def generator_candidates(
    profile: SingularityProfile, ops: Sequence, max_complements: int = 4000
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Integral isometries realizing the given component ops, lazily."""
    form = profile.form
    covered = set()
    for op in ops:
        covered.update([op[1]] if op[0] in ("fix", "flip") else (op[1], op[2]) if op[0] == "swap" else op[1])
    full_ops = list(ops) + [("fix", i) for i in range(len(profile.points)) if i not in covered]

    comp_basis = orthogonal_complement(form, list(profile.simple_roots) + [form.canonical])
    comp_gram = [[pair(form, a, b) for b in comp_basis] for a in comp_basis]
    domain = list(profile.simple_roots) + [form.canonical] + comp_basis

    maps_per_op = [_op_maps(profile, op) for op in full_ops]
    seen = set()
    for combo in product(*maps_per_op):
        perm: dict[int, int] = {}
        for m in combo:
            perm.update(m)
        key = tuple(sorted(perm.items()))
        if key in seen:
            continue
        seen.add(key)
        root_images = [profile.simple_roots[perm[i]] for i in range(len(profile.simple_roots))]
        count = 0
        for u in complement_isometries(comp_gram):
            count += 1
            if count > max_complements:
                break
            imgs = []
            for col in range(len(comp_basis)):
                # image of comp_basis[col] under u, expressed in the ambient lattice
                vec = [0] * form.rank
                for cidx in range(len(comp_basis)):
                    cf = u[cidx][col]
                    if cf:
                        for k in range(form.rank):
                            vec[k] += cf * comp_basis[cidx][k]
                imgs.append(tuple(vec))
            t = extend_prescribed(form, domain, root_images + [form.canonical] + imgs)
            if t is not None:
                yield t


def _combo_ok(profile, combo, rho_target) -> bool:
    if fixed_rank(profile.form, combo) != rho_target:
        return False
    return rho_target - len(orbit_partition(profile, combo)) == 1


def find_action(
    profile: SingularityProfile,
    gen_specs: Sequence[Sequence],
    rho_target: int,
    per_gen_limit: int = 60,
) -> list[tuple[tuple[int, ...], ...]]:
    """Generator matrices whose group hits the target fixed rank.

    gen_specs is a list of op lists, one per generator.  Single
    generators are scanned first; when the gap to the target cannot be
    closed by one matrix, pairs drawn from the same candidate stream are
    tried (two commuting-on-the-roots generators can kill more of the
    orthogonal complement than any single one).
    """
    if not gen_specs:
        gen_specs = [[("fix", i) for i in range(len(profile.points))]]
    pools = []
    for ops in gen_specs:
        pool = []
        for t in generator_candidates(profile, ops):
            pool.append(t)
            if len(pool) >= per_gen_limit:
                break
        if not pool:
            raise LookupError(f"no integral isometry realizes ops {ops}")
        pools.append(pool)
    if len(pools) == 1:
        for t in pools[0]:
            if _combo_ok(profile, (t,), rho_target):
                return [t]
        for i, t1 in enumerate(pools[0]):
            for t2 in pools[0][i + 1 :]:
                if _combo_ok(profile, (t1, t2), rho_target):
                    return [t1, t2]
    else:
        for combo in product(*pools):
            if _combo_ok(profile, combo, rho_target):
                return list(combo)
    raise LookupError(
        f"no generator combination reaches fixed rank {rho_target} with model rank one"
    )


def orbit_partition(profile: SingularityProfile, generators: Sequence) -> list[list[int]]:
    """Orbits of the profile's roots under the generated group."""
    n = len(profile.simple_roots)
    index = {r: i for i, r in enumerate(profile.simple_roots)}
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for t in generators:
        for i, r in enumerate(profile.simple_roots):
            img = tuple(mat_vec(t, r))
            j = index.get(img)
            if j is None:
                raise ValueError("generator does not permute the configuration's roots")
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())
