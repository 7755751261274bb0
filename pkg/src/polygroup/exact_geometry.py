"""Exact rational geometry: affine rank, convex hulls, facets and face lattices.

Coordinates are Python ints where integral and :class:`fractions.Fraction`
otherwise; nothing in here ever touches a float.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, reduce
from math import factorial, gcd
from operator import mul
from typing import Iterable, Sequence, Union

import numpy as np

Number = Union[int, Fraction]
Point = tuple  # tuple of Number


class PolytopeError(ValueError):
    """Raised for every domain error in the package."""


def normalize_number(x) -> Number:
    if isinstance(x, bool):
        raise PolytopeError(f"not a coordinate: {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, str):
        try:
            return normalize_number(Fraction(x.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise PolytopeError(f"malformed coordinate {x!r}") from exc
    raise PolytopeError(f"not an exact coordinate: {x!r}")


def as_point(coords: Iterable) -> Point:
    return tuple(normalize_number(c) for c in coords)


def dot(u: Sequence, v: Sequence) -> Number:
    return sum(map(mul, u, v))


def sub(u: Sequence, v: Sequence) -> Point:
    return tuple(normalize_number(a - b) for a, b in zip(u, v))


def add(u: Sequence, v: Sequence) -> Point:
    return tuple(normalize_number(a + b) for a, b in zip(u, v))


def primitive(vec: Sequence[Number]) -> tuple[int, ...]:
    """Scale a nonzero rational vector to a primitive integer vector (same direction)."""
    if all(type(x) is int for x in vec):
        g = gcd(*vec)
        if g == 0:
            raise PolytopeError("zero vector has no primitive direction")
        return tuple(x // g for x in vec)
    den = reduce(lambda a, b: a * b // gcd(a, b), (Fraction(x).denominator for x in vec), 1)
    ints = [int(Fraction(x) * den) for x in vec]
    g = reduce(gcd, (abs(x) for x in ints), 0)
    if g == 0:
        raise PolytopeError("zero vector has no primitive direction")
    return tuple(x // g for x in ints)


def _common_denominator(points: Sequence[Point]) -> int:
    den = 1
    for p in points:
        for x in p:
            if isinstance(x, Fraction):
                d = x.denominator
                den = den * d // gcd(den, d)
    return den


def _integerize(points: Sequence[Point]) -> list[tuple[int, ...]]:
    den = _common_denominator(points)
    if den == 1:
        return [tuple(int(x) for x in p) for p in points]
    return [tuple(int(x * den) for x in p) for p in points]


def _echelon(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (nonzero rows, pivot columns)."""
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    ncols = len(rows[0]) if rows else 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][c]
        rows[r] = [Fraction(x) / lead for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _int_echelon(vectors: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form of integer vectors: (nonzero rows, pivot columns)."""
    rows = [list(v) for v in vectors if any(v)]
    pivots: list[int] = []
    ncols = len(rows[0]) if rows else 0
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        for i in range(rank + 1, len(rows)):
            a = rows[i][c]
            if a:
                b = pr[c]
                row = [b * x - a * y for x, y in zip(rows[i], pr)]
                g = reduce(gcd, row, 0)
                rows[i] = [x // g for x in row] if g > 1 else row
        pivots.append(c)
        rank += 1
        if rank == len(rows):
            break
    return rows[:rank], pivots


def _int_rank(vectors: list[list[int]]) -> int:
    """Rank of integer vectors by fraction-free elimination."""
    rows = [list(v) for v in vectors if any(v)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        for i in range(rank + 1, len(rows)):
            a = rows[i][c]
            if a:
                b = pr[c]
                rows[i] = [b * x - a * y for x, y in zip(rows[i], pr)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def affine_rank(points: Sequence[Sequence]) -> int:
    """Dimension of the affine hull of ``points``."""
    if not points:
        raise PolytopeError("empty point set")
    pts = _integerize([as_point(p) for p in points])
    if len({len(p) for p in pts}) != 1:
        raise PolytopeError("points of mixed dimension")
    p0 = pts[0]
    return _int_rank([[a - b for a, b in zip(p, p0)] for p in pts[1:]])


def _det(m: list[list[int]]) -> int:
    """Integer determinant (Bareiss)."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def integer_nullspace(rows: Sequence[Sequence[Number]], n: int) -> list[tuple[int, ...]]:
    """Primitive integer vectors spanning {y in Q^n : <r, y> = 0 for all rows r}."""
    rows = [[Fraction(x) for x in r] for r in rows if any(r)]
    if not rows:
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    ech, pivots = _echelon(rows)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        y = [Fraction(0)] * n
        y[f] = Fraction(1)
        for r, pc in zip(ech, pivots):
            y[pc] = -r[f]
        basis.append(primitive(y))
    return basis


# --------------------------------------------------------------------------- LP


def lp_is_convex_combination(target: Sequence, generators: Sequence[Sequence]) -> bool:
    """Decide whether ``target`` is a convex combination of ``generators``.

    Exact phase-1 simplex over the rationals with Bland's rule.
    """
    if not generators:
        return False
    t = [Fraction(x) for x in target]
    gens = [[Fraction(x) for x in g] for g in generators]
    d, m = len(t), len(gens)
    if any(len(g) != d for g in gens):
        raise PolytopeError("points of mixed dimension")
    # rows: sum_j lam_j g_j[i] = t[i], sum_j lam_j = 1 ; one artificial per row
    nrows = d + 1
    tab = []
    for i in range(nrows):
        coeffs = [g[i] for g in gens] if i < d else [Fraction(1)] * m
        rhs = t[i] if i < d else Fraction(1)
        if rhs < 0:
            coeffs = [-c for c in coeffs]
            rhs = -rhs
        art = [Fraction(int(k == i)) for k in range(nrows)]
        tab.append(coeffs + art + [rhs])
    ncols = m + nrows
    basis = [m + i for i in range(nrows)]
    # objective: minimise sum of artificials -> reduced costs
    cost = [Fraction(0)] * (ncols + 1)
    for row in tab:
        for j in range(m):
            cost[j] -= row[j]
        cost[-1] -= row[-1]
    while True:
        enter = next((j for j in range(ncols) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i, row in enumerate(tab):
            if row[enter] > 0:
                ratio = row[-1] / row[enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:  # unbounded cannot happen in phase 1
            break
        r = best[1]
        piv = tab[r][enter]
        tab[r] = [x / piv for x in tab[r]]
        for i in range(nrows):
            if i != r and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [a - f * b for a, b in zip(tab[i], tab[r])]
        f = cost[enter]
        cost = [a - f * b for a, b in zip(cost, tab[r])]
        basis[r] = enter
    return cost[-1] == 0


# ------------------------------------------------------------------ quickhull


class _QFacet:
    __slots__ = ("verts", "normal", "offset", "outside", "alive")

    def __init__(self, verts, normal, offset):
        self.verts = verts
        self.normal = normal
        self.offset = offset
        self.outside: list[int] = []
        self.alive = True


def _plane_through(pts: list[tuple[int, ...]]) -> tuple[list[int], int]:
    d = len(pts[0])
    v = [[a - b for a, b in zip(p, pts[0])] for p in pts[1:]]
    normal = [(-1) ** j * _det([row[:j] + row[j + 1:] for row in v]) for j in range(d)]
    return normal, sum(a * b for a, b in zip(normal, pts[0]))


def _initial_simplex(pts: list[tuple[int, ...]]) -> list[int]:
    d = len(pts[0])
    lo = min(range(len(pts)), key=pts.__getitem__)
    hi = max(range(len(pts)), key=pts.__getitem__)
    chosen = [lo, hi]
    base = pts[lo]
    diffs = [[a - b for a, b in zip(pts[hi], base)]]
    for i in range(len(pts)):
        if len(chosen) == d + 1:
            break
        if i in chosen:
            continue
        cand = diffs + [[a - b for a, b in zip(pts[i], base)]]
        if _int_rank(cand) == len(cand):
            chosen.append(i)
            diffs = cand
    if len(chosen) != d + 1:
        raise PolytopeError("point set is not full-dimensional")
    return chosen


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull2d(pts: list[tuple[int, ...]]) -> list[tuple[tuple[int, ...], int]]:
    """Edge lines of a full-dimensional planar point set (monotone chain)."""
    p = sorted(set(pts))
    lower: list = []
    for q in p:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], q) <= 0:
            lower.pop()
        lower.append(q)
    upper: list = []
    for q in reversed(p):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], q) <= 0:
            upper.pop()
        upper.append(q)
    ring = lower[:-1] + upper[:-1]  # counter-clockwise
    planes = set()
    for a, b in zip(ring, ring[1:] + ring[:1]):
        nx, ny = b[1] - a[1], a[0] - b[0]  # outward for a ccw ring
        g = gcd(nx, ny)
        nx, ny = nx // g, ny // g
        planes.add(((nx, ny), nx * a[0] + ny * a[1]))
    return sorted(planes)


def _quickhull(pts: list[tuple[int, ...]]) -> list[tuple[tuple[int, ...], int]]:
    """Supporting facet hyperplanes (primitive normal, offset) of a full-dimensional
    integer point set; the hull satisfies <normal, x> <= offset."""
    d = len(pts[0])
    simplex = _initial_simplex(pts)
    csum = [sum(pts[i][k] for i in simplex) for k in range(d)]
    scale = d + 1
    facets: list[_QFacet] = []
    ridges: dict[tuple[int, ...], list[int]] = {}

    def make(verts: tuple[int, ...]) -> int:
        normal, off = _plane_through([pts[i] for i in verts])
        if sum(a * b for a, b in zip(normal, csum)) > scale * off:
            normal = [-a for a in normal]
            off = -off
        facets.append(_QFacet(verts, normal, off))
        fid = len(facets) - 1
        for k in range(d):
            r = tuple(sorted(verts[:k] + verts[k + 1:]))
            ridges.setdefault(r, []).append(fid)
        return fid

    for k in range(d + 1):
        make(tuple(simplex[:k] + simplex[k + 1:]))

    def assign(candidates: Iterable[int], fids: list[int]) -> None:
        for i in candidates:
            p = pts[i]
            for fid in fids:
                f = facets[fid]
                if sum(a * b for a, b in zip(f.normal, p)) > f.offset:
                    f.outside.append(i)
                    break

    in_simplex = set(simplex)
    assign((i for i in range(len(pts)) if i not in in_simplex), list(range(d + 1)))
    stack = [fid for fid in range(d + 1) if facets[fid].outside]
    while stack:
        fid = stack.pop()
        f = facets[fid]
        if not f.alive or not f.outside:
            continue
        far = max(f.outside, key=lambda i: sum(a * b for a, b in zip(f.normal, pts[i])) - f.offset)
        p = pts[far]
        visible = {fid}
        seen = {fid}
        queue = [fid]
        horizon = []
        while queue:
            g = queue.pop()
            gv = facets[g].verts
            for k in range(d):
                r = tuple(sorted(gv[:k] + gv[k + 1:]))
                h = next(x for x in ridges[r] if x != g)
                if h in visible:
                    continue
                if h in seen:
                    horizon.append(r)
                    continue
                hf = facets[h]
                if sum(a * b for a, b in zip(hf.normal, p)) > hf.offset:
                    visible.add(h)
                    seen.add(h)
                    queue.append(h)
                else:
                    seen.add(h)
                    horizon.append(r)
        orphans = []
        for g in visible:
            gf = facets[g]
            gf.alive = False
            orphans.extend(i for i in gf.outside if i != far)
            gf.outside = []
            gv = gf.verts
            for k in range(d):
                r = tuple(sorted(gv[:k] + gv[k + 1:]))
                ridges[r].remove(g)
                if not ridges[r]:
                    del ridges[r]
        new = [make(r + (far,)) for r in horizon]
        assign(orphans, new)
        stack.extend(n for n in new if facets[n].outside)
    planes = set()
    for f in facets:
        if f.alive:
            g = reduce(gcd, (abs(a) for a in f.normal), 0)
            planes.add((tuple(a // g for a in f.normal), f.offset // g))
    return sorted(planes)


# ------------------------------------------------------------------ hull data


@dataclass(frozen=True)
class Facet:
    """A facet: outer normal (primitive, integer), offset, and vertex indices."""

    normal: tuple[int, ...]
    offset: Number
    vertices: frozenset


@dataclass(frozen=True)
class _HullData:
    vertices: tuple[Point, ...]
    dim: int
    facets: tuple[Facet, ...]
    equations: tuple[tuple[tuple[int, ...], Number], ...]
    chart: tuple[int, ...]  # coordinates on which projection is injective


_INT64_SAFE = 1 << 62
_PREFILTER_MIN = 256


def _incidence_py(proj, planes) -> list[list[int]]:
    return [
        [k for k, (nv, off) in enumerate(planes) if sum(map(mul, nv, q)) == off]
        for q in proj
    ]


def _incidence(proj: list[tuple[int, ...]], planes) -> list[list[int]]:
    """For each point, the indices of the planes it lies on."""
    if len(proj) * len(planes) < 2048:
        return _incidence_py(proj, planes)
    # the int64 product is exact while every partial sum stays below 2^62
    big_p = max(abs(c) for q in proj for c in q)
    big_n = max(max(abs(c) for c in nv) for nv, _ in planes)
    big_o = max(abs(off) for _, off in planes)
    if len(proj[0]) * big_p * big_n >= _INT64_SAFE or big_o >= _INT64_SAFE:
        return _incidence_py(proj, planes)
    A = np.array(proj, dtype=np.int64)
    N = np.array([nv for nv, _ in planes], dtype=np.int64)
    offs = np.array([off for _, off in planes], dtype=np.int64)
    hit = (A @ N.T) == offs
    rows, cols = np.nonzero(hit)
    out: list[list[int]] = [[] for _ in proj]
    for i, k in zip(rows.tolist(), cols.tolist()):
        out[i].append(k)
    return out


def _prefilter(proj: list[tuple[int, ...]], r: int):
    """Indices of points not strictly inside the hull of the extremes along {-1,0,1}^r.

    Exact: the seed hull lies inside the full hull, so its strict interior holds
    no point of the full hull's boundary. None when not worth it or unsafe.
    """
    if len(proj) < _PREFILTER_MIN:
        return None
    big = max(abs(c) for q in proj for c in q)
    if r * big >= _INT64_SAFE:
        return None
    A = np.array(proj, dtype=np.int64)
    dirs = np.array([d for d in itertools.product((-1, 0, 1), repeat=r) if any(d)], dtype=np.int64)
    seed = sorted({int(i) for i in np.argmax(A @ dirs.T, axis=0)})
    seed_pts = [proj[i] for i in seed]
    if _int_rank([[a - b for a, b in zip(p, seed_pts[0])] for p in seed_pts[1:]]) < r:
        return None
    planes = _quickhull(seed_pts)
    big_n = max(max(abs(c) for c in nv) for nv, _ in planes)
    if r * big * big_n >= _INT64_SAFE:
        return None
    N = np.array([nv for nv, _ in planes], dtype=np.int64)
    offs = np.array([off for _, off in planes], dtype=np.int64)
    inside = ((A @ N.T) < offs).all(axis=1)
    return np.flatnonzero(~inside).tolist()


def _compute_hull(points: Sequence[Point]) -> _HullData:
    pts = sorted(set(points))
    n = len(pts[0])
    ipts = _integerize(pts)
    den = _common_denominator(pts)
    base = ipts[0]
    ech, pivots = _int_echelon([[a - b for a, b in zip(p, base)] for p in ipts[1:]])
    r = len(pivots)
    equations = tuple(
        (nv, normalize_number(dot(nv, pts[0]))) for nv in integer_nullspace(ech, n)
    ) if r < n else ()
    if r == 0:
        return _HullData((pts[0],), 0, (), equations, ())
    chart = tuple(pivots)
    proj = [tuple(p[c] for c in chart) for p in ipts]
    if r == 1:
        lo = min(range(len(proj)), key=proj.__getitem__)
        hi = max(range(len(proj)), key=proj.__getitem__)
        planes = [((1,), proj[hi][0]), ((-1,), -proj[lo][0])]
    elif r == 2:
        planes = _hull2d(proj)
    else:
        keep = _prefilter(proj, r)
        if keep is not None:
            pts = [pts[i] for i in keep]
            proj = [proj[i] for i in keep]
        planes = _quickhull(proj)
    hits = _incidence(proj, planes)
    on = [set() for _ in planes]
    extreme = []
    for i, ks in enumerate(hits):
        for k in ks:
            on[k].add(i)
        if len(ks) >= r and _int_rank([list(planes[k][0]) for k in ks]) == r:
            extreme.append(i)
    verts = tuple(pts[i] for i in extreme)
    pos = {i: j for j, i in enumerate(extreme)}
    facets = []
    for (normal, off), members in zip(planes, on):
        full = [0] * n
        for c, a in zip(chart, normal):
            full[c] = a
        g = reduce(gcd, (abs(a) for a in full), 0)
        full_t = tuple(a // g for a in full)
        offset = normalize_number(Fraction(off, den * g))
        facets.append(Facet(full_t, offset, frozenset(pos[i] for i in members if i in pos)))
    facets.sort(key=lambda f: (f.normal, f.offset))
    return _HullData(verts, r, tuple(facets), equations, chart)


@dataclass(frozen=True)
class Polytope:
    """Convex hull of finitely many exact points, stored by its sorted extreme points.

    Construct through :func:`extreme_points`; the constructor only sorts its
    input and trusts that every listed point is extreme.
    """

    vertices: tuple

    def __post_init__(self):
        vs = tuple(sorted(as_point(v) for v in self.vertices))
        if vs != self.vertices:
            object.__setattr__(self, "vertices", vs)

    @property
    def ambient_dim(self) -> int:
        return len(self.vertices[0])

    @cached_property
    def _hull(self) -> _HullData:
        return _compute_hull(self.vertices)

    @cached_property
    def dim(self) -> int:
        return self._hull.dim

    @property
    def facets(self) -> tuple[Facet, ...]:
        return self._hull.facets

    @property
    def equations(self):
        return self._hull.equations

    @cached_property
    def is_integral(self) -> bool:
        return all(isinstance(x, int) for v in self.vertices for x in v)

    def contains(self, point: Sequence) -> bool:
        for normal, off in self.equations:
            if dot(normal, point) != off:
                return False
        return all(dot(f.normal, point) <= f.offset for f in self.facets)

    def contains_polytope(self, other: "Polytope") -> bool:
        return all(self.contains(v) for v in other.vertices)

    def lexmin(self) -> Point:
        return self.vertices[0]

    def translate(self, v: Sequence) -> "Polytope":
        v = as_point(v)
        # lexicographic order is translation invariant, so facet index sets carry over
        moved = Polytope(tuple(add(p, v) for p in self.vertices))
        data = self.__dict__.get("_hull")
        if data is not None:
            moved.__dict__["_hull"] = _HullData(
                moved.vertices,
                data.dim,
                tuple(
                    Facet(f.normal, normalize_number(f.offset + dot(f.normal, v)), f.vertices)
                    for f in data.facets
                ),
                tuple((a, normalize_number(b + dot(a, v))) for a, b in data.equations),
                data.chart,
            )
        return moved

    def normalized(self) -> "Polytope":
        """Translate so the lexicographically smallest vertex sits at the origin."""
        m = self.vertices[0]
        return self.translate(tuple(-x for x in m))

    def subpolytope(self, indices: Iterable[int]) -> "Polytope":
        return Polytope(tuple(self.vertices[i] for i in sorted(indices)))

    def __repr__(self) -> str:
        def fmt(x):
            return str(x)
        body = ", ".join("(" + ",".join(fmt(x) for x in v) + ")" for v in self.vertices)
        return f"Polytope[{body}]"

    @cached_property
    def faces(self) -> tuple["Face", ...]:
        return tuple(_face_lattice(self))


def extreme_points(points: Iterable[Sequence]) -> Polytope:
    """Canonical polytope whose vertices are the extreme points of ``points``."""
    pts = [as_point(p) for p in points]
    if not pts:
        raise PolytopeError("empty point set")
    if len({len(p) for p in pts}) != 1:
        raise PolytopeError("points of mixed dimension")
    data = _compute_hull(pts)
    poly = Polytope(data.vertices)
    poly.__dict__["_hull"] = data
    return poly


def point(coords: Sequence) -> Polytope:
    return Polytope((as_point(coords),))


# ------------------------------------------------------------------ faces


@dataclass(frozen=True)
class Face:
    polytope: Polytope
    witness_direction: tuple[int, ...]
    vertex_indices: frozenset = field(compare=False)

    @property
    def dim(self) -> int:
        return self.polytope.dim


def _face_lattice(P: Polytope) -> list[Face]:
    n = P.ambient_dim
    facets = P.facets
    sets: dict[frozenset, None] = {}
    queue = [f.vertices for f in facets]
    for s in queue:
        sets.setdefault(s, None)
    i = 0
    while i < len(queue):
        s = queue[i]
        i += 1
        for f in facets:
            t = s & f.vertices
            if t and t != s and t not in sets:
                sets[t] = None
                queue.append(t)
    faces = [Face(P, (0,) * n, frozenset(range(len(P.vertices))))]
    r = P.dim
    for s in sets:
        direction = [0] * n
        normals = []
        for f in facets:
            if s <= f.vertices:
                direction = [a + b for a, b in zip(direction, f.normal)]
                normals.append(list(f.normal))
        direction = tuple(direction)
        vals = [dot(direction, v) for v in P.vertices]
        top = max(vals)
        argmax = frozenset(j for j, val in enumerate(vals) if val == top)
        assert argmax == s, "face witness does not select the face"
        sub = P.subpolytope(s)
        # a face has codimension equal to the rank of the facet normals containing it
        sub.__dict__["dim"] = r - _int_rank(normals)
        faces.append(Face(sub, primitive(direction), s))
    faces.sort(key=lambda f: (-f.dim, f.polytope.vertices))
    return faces


def face_lattice(P: Polytope) -> list[Face]:
    """All faces of ``P``, including ``P`` itself (zero witness direction)."""
    return list(P.faces)


def facets_bruteforce(P: Polytope) -> set[frozenset]:
    """Facet vertex sets by enumerating vertex subsets spanning a hyperplane of aff(P).

    Slow; kept as an independent check on :attr:`Polytope.facets`.
    """
    k = P.dim
    if k == 0:
        return set()
    verts = P.vertices
    base = verts[0]
    dirs = [sub(v, base) for v in verts[1:]]
    ech, _ = _echelon([[Fraction(x) for x in d] for d in dirs if any(d)])
    found: set[frozenset] = set()
    for combo in itertools.combinations(range(len(verts)), k):
        if any(set(combo) <= s for s in found):
            continue
        pts = [verts[i] for i in combo]
        if affine_rank(pts) != k - 1:
            continue
        # functional in span(dir P) vanishing on the subset's directions
        sdirs = [sub(p, pts[0]) for p in pts[1:]]
        coeff_rows = [[dot(b, s) for b in ech] for s in sdirs]
        null = integer_nullspace(coeff_rows, k) if coeff_rows else [tuple(int(i == 0) for i in range(k))]
        c = null[0]
        phi = [sum(ci * Fraction(b[j]) for ci, b in zip(c, ech)) for j in range(P.ambient_dim)]
        vals = [dot(phi, v) for v in verts]
        ref = dot(phi, pts[0])
        if all(v <= ref for v in vals) or all(v >= ref for v in vals):
            found.add(frozenset(i for i, v in enumerate(vals) if v == ref))
    return found


# ------------------------------------------------------------------ volume


def triangulate(P: Polytope) -> list[tuple[Point, ...]]:
    """Pulling (fan) triangulation from the lexicographically minimal vertex."""
    if P.dim == 0:
        return [(P.vertices[0],)]
    apex = P.vertices[0]
    out = []
    for f in P.facets:
        if 0 in f.vertices:
            continue
        for simplex in triangulate(P.subpolytope(f.vertices)):
            out.append((apex,) + simplex)
    return out


def volume(P: Polytope, chart: Sequence[int] | None = None) -> Fraction:
    """Volume of ``P`` measured in the coordinates ``chart`` (default: its own chart).

    Passing the chart of a parent polytope makes volumes of its full-dimensional
    subpolytopes comparable.
    """
    if chart is None:
        chart = P._hull.chart
    r = len(chart)
    if P.dim != r:
        return Fraction(0)
    if r == 0:
        return Fraction(1)
    total = Fraction(0)
    for simplex in triangulate(P):
        base = simplex[0]
        m = [[Fraction(p[c] - base[c]) for c in chart] for p in simplex[1:]]
        den = _common_denominator([tuple(row) for row in m])
        im = [[int(x * den) for x in row] for row in m]
        total += Fraction(abs(_det(im)), den ** r)
    return total / factorial(r)
