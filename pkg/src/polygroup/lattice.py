"""Integer lattice helpers: Hermite normal form, saturated kernels, elementary divisors."""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Sequence

from .exact_geometry import PolytopeError, _det


def _reduce_rows(rows: list[list[int]], aux: list[list[int]] | None = None):
    """Row-style HNF by unimodular row operations, applied to ``aux`` in lockstep.

    Returns (rows, aux) with the nonzero rows first, pivots strictly increasing
    and positive, entries above each pivot reduced into [0, pivot).
    """
    a = [list(r) for r in rows]
    b = [list(r) for r in aux] if aux is not None else [[] for _ in rows]
    ncols = len(a[0]) if a else 0
    top = 0
    pivots = []
    for c in range(ncols):
        # Euclid on column c among rows top..end
        while True:
            nz = [i for i in range(top, len(a)) if a[i][c] != 0]
            if not nz:
                break
            i = min(nz, key=lambda j: abs(a[j][c]))
            a[top], a[i] = a[i], a[top]
            b[top], b[i] = b[i], b[top]
            done = True
            for j in range(top + 1, len(a)):
                if a[j][c]:
                    q = a[j][c] // a[top][c]
                    a[j] = [x - q * y for x, y in zip(a[j], a[top])]
                    b[j] = [x - q * y for x, y in zip(b[j], b[top])]
                    if a[j][c]:
                        done = False
            if done:
                break
        if top < len(a) and a[top][c] != 0:
            if a[top][c] < 0:
                a[top] = [-x for x in a[top]]
                b[top] = [-x for x in b[top]]
            for j in range(top):
                q = a[j][c] // a[top][c]
                if q:
                    a[j] = [x - q * y for x, y in zip(a[j], a[top])]
                    b[j] = [x - q * y for x, y in zip(b[j], b[top])]
            pivots.append(c)
            top += 1
            if top == len(a):
                break
    return a, b, top


def hnf(rows: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Nonzero rows of the row-style Hermite normal form (a canonical lattice basis)."""
    rows = [list(map(int, r)) for r in rows]
    if not rows:
        return []
    a, _, rank = _reduce_rows(rows)
    return [tuple(r) for r in a[:rank]]


def integer_kernel(rows: Sequence[Sequence[int]], n: int) -> list[tuple[int, ...]]:
    """A lattice basis of {y in Z^n : <r, y> = 0 for every row r}."""
    rows = [list(map(int, r)) for r in rows if any(r)]
    if not rows:
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    cols = [[r[j] for r in rows] for j in range(n)]
    ident = [[int(i == j) for j in range(n)] for i in range(n)]
    _, b, rank = _reduce_rows(cols, ident)
    return [tuple(v) for v in b[rank:]]


def determinantal_divisors(rows: Sequence[Sequence[int]]) -> list[int]:
    """d_k = gcd of all k x k minors, k = 1..rank."""
    m = [list(map(int, r)) for r in rows]
    if not m:
        return []
    out = []
    for k in range(1, min(len(m), len(m[0])) + 1):
        g = 0
        for rs in itertools.combinations(range(len(m)), k):
            for cs in itertools.combinations(range(len(m[0])), k):
                g = gcd(g, _det([[m[r][c] for c in cs] for r in rs]))
        if g == 0:
            break
        out.append(g)
    return out


def elementary_divisors(rows: Sequence[Sequence[int]]) -> list[int]:
    """Diagonal of the Smith normal form (nonzero part)."""
    d = determinantal_divisors(rows)
    return [x // y for x, y in zip(d, [1] + d[:-1])]


def is_saturated(rows: Sequence[Sequence[int]]) -> bool:
    return all(e == 1 for e in elementary_divisors(rows))


def saturate(vectors: Sequence[Sequence[int]], n: int) -> list[tuple[int, ...]]:
    """HNF basis of span(vectors) cap Z^n: the kernel of the kernel, which is saturated."""
    vecs = [list(map(int, v)) for v in vectors if any(v)]
    if not vecs:
        return []
    return hnf(integer_kernel(integer_kernel(vecs, n), n))


def chart_coordinates(basis: Sequence[Sequence[int]], x: Sequence) -> tuple[int, ...]:
    """c with x = sum c_i basis_i for an HNF basis; raises if x is not in the lattice."""
    c = []
    rest = [Fraction(v) for v in x]
    for row in basis:
        p = next(j for j, v in enumerate(row) if v)
        coef = rest[p] / row[p]
        if coef.denominator != 1:
            raise PolytopeError("point is not in the subgroup")
        c.append(int(coef))
        rest = [r - coef * v for r, v in zip(rest, row)]
    if any(rest):
        raise PolytopeError("point is not in the subgroup")
    return tuple(c)


def from_chart(basis: Sequence[Sequence[int]], c: Sequence, n: int) -> tuple:
    out = [0] * n
    for coef, row in zip(c, basis):
        for j, v in enumerate(row):
            out[j] += coef * v
    return tuple(out)


def content(v: Sequence[int]) -> int:
    return reduce(gcd, (abs(int(x)) for x in v), 0)
