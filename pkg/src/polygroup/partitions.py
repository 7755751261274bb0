"""Partitions of polytopes and the two partition relations."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .exact_geometry import Polytope, PolytopeError, dot, extreme_points, volume
from .group import FormalSum, element, eq, formal_sum_is_zero, is_zero
from .polytope_ops import (
    Hyperplane,
    cut,
    height,
    is_grounded,
    minkowski_sum,
    reflect,
    scale,
    shadow,
    top_faces,
    unit_vertical,
)


class PartitionError(PolytopeError):
    pass


def in_boundary(Q: Polytope, P: Polytope) -> bool:
    """Q lies in the relative boundary of P iff it lies in a facet of P."""
    return any(all(dot(f.normal, v) == f.offset for v in Q.vertices) for f in P.facets)


def codim(Q: Polytope, P: Polytope) -> int:
    return P.dim - Q.dim


@dataclass(frozen=True)
class Partition:
    parent: Polytope
    cells: tuple

    @property
    def boundary_cells(self) -> tuple:
        """Cells not contained in the boundary of the parent."""
        return tuple(Q for Q in self.cells if not in_boundary(Q, self.parent))

    @property
    def pieces(self) -> tuple:
        return tuple(Q for Q in self.cells if Q.dim == self.parent.dim)


def _make(parent: Polytope, cells: Iterable[Polytope]) -> Partition:
    return Partition(parent, tuple(sorted(set(cells), key=lambda q: (-q.dim, q.vertices))))


def _with_faces(pieces: Iterable[Polytope]) -> set:
    out = set()
    for Q in pieces:
        out.update(f.polytope for f in Q.faces)
    return out


# ------------------------------------------------------------------ validation


def _solve(rows: list[list[Fraction]], rhs: list[Fraction]) -> Optional[list[Fraction]]:
    """Unique solution of a square system, or None if singular."""
    n = len(rows)
    a = [list(r) + [b] for r, b in zip(rows, rhs)]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return None
        a[c], a[piv] = a[piv], a[c]
        lead = a[c][c]
        a[c] = [x / lead for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [a[i][n] for i in range(n)]


def intersection(P: Polytope, Q: Polytope) -> Optional[Polytope]:
    """P cap Q by exact vertex enumeration over the joint H-representation."""
    n = P.ambient_dim
    eqs = [(list(a), b) for a, b in P.equations + Q.equations]
    ineqs = [(list(f.normal), f.offset) for f in P.facets + Q.facets]

    def feasible(x):
        return all(dot(a, x) == b for a, b in eqs) and all(dot(a, x) <= b for a, b in ineqs)

    if n == 0:
        return P
    found = set()
    pool = eqs + ineqs
    for combo in itertools.combinations(range(len(pool)), n):
        rows = [[Fraction(x) for x in pool[i][0]] for i in combo]
        sol = _solve(rows, [Fraction(pool[i][1]) for i in combo])
        if sol is not None and feasible(sol):
            found.add(tuple(sol))
    if not found:
        return None
    return extreme_points(found)


def _is_face_of(F: Polytope, P: Polytope) -> bool:
    return any(f.polytope == F for f in P.faces)


def validate_partition(parent: Polytope, cells: Iterable[Polytope]) -> Partition:
    cells = list(dict.fromkeys(cells))
    if not cells:
        raise PartitionError("condition (1) violated: no cells")
    for Q in cells:
        if not parent.contains_polytope(Q):
            raise PartitionError(f"condition (1) violated: {Q!r} is not inside the parent")
    cellset = set(cells)
    for Q in cells:
        for f in Q.faces:
            if f.polytope not in cellset:
                raise PartitionError(f"condition (2) violated: face {f.polytope!r} missing")
    # pairwise condition among cells that are not faces of other cells suffices:
    # faces of properly meeting cells meet properly.
    maximal = [Q for Q in cells if not any(Q != R and _is_face_of(Q, R) for R in cells)]
    for A, B in itertools.combinations(maximal, 2):
        inter = intersection(A, B)
        if inter is not None and not (_is_face_of(inter, A) and _is_face_of(inter, B)):
            raise PartitionError("condition (3) violated: cells overlap improperly")
    chart = parent._hull.chart
    covered = sum((volume(Q, chart) for Q in cells if Q.dim == parent.dim), Fraction(0))
    if covered != volume(parent, chart):
        raise PartitionError("condition (1) violated: pieces do not cover the parent")
    return _make(parent, cells)


# ------------------------------------------------------------------ constructions


def trivial_partition(P: Polytope) -> Partition:
    return _make(P, (f.polytope for f in P.faces))


def _split(pieces: list[Polytope], H: Hyperplane, dim: int) -> list[Polytope]:
    out = []
    for Q in pieces:
        c = cut(Q, H)
        if (
            c.upper is not None
            and c.lower is not None
            and c.upper.dim == dim
            and c.lower.dim == dim
            and c.upper != Q
            and c.lower != Q
        ):
            out.extend([c.upper, c.lower])
        else:
            out.append(Q)
    return out


def partition_from_hyperplanes(P: Polytope, planes: Sequence[Hyperplane]) -> Partition:
    """Pieces are the closures of the components of P minus the planes; plus all faces."""
    pieces = [P]
    for H in planes:
        pieces = _split(pieces, H, P.dim)
    return _make(P, _with_faces(pieces))


def shadow_partition_pieces(P: Polytope) -> list[tuple[Polytope, Polytope]]:
    """Pairs (F, P(F)) over the top faces F, P(F) = Sh(F) + (h(F) - h(P)) * (*Z)."""
    if not is_grounded(P):
        raise PolytopeError("shadow partition requires a grounded polytope")
    down = reflect(unit_vertical(P.ambient_dim))
    out = []
    for F in top_faces(P):
        out.append((F, minkowski_sum(shadow(F), scale(down, height(F) - height(P)))))
    return out


def partition_from_pieces(parent: Polytope, pieces: Iterable[Polytope]) -> Partition:
    """The face closure of full pieces, unvalidated."""
    return _make(parent, _with_faces(pieces))


def shadow_partition(P: Polytope) -> Partition:
    return partition_from_pieces(P, (piece for _, piece in shadow_partition_pieces(P)))


# ------------------------------------------------------------------ relations


def partition_relation_terms(part: Partition) -> FormalSum:
    return FormalSum.of((Q, (-1) ** codim(Q, part.parent)) for Q in part.boundary_cells)


def check_partition_relation(part: Partition, method: str = "support") -> bool:
    """P == sum over non-boundary cells of (-1)^codim Q.

    ``method="collapse"`` Minkowski-sums both sides and runs the cancellation
    test; ``"support"`` compares support functions on the fan rays instead,
    which stays cheap when the collapsed sums would have thousands of vertices.
    """
    n = part.parent.ambient_dim
    terms = partition_relation_terms(part)
    if method == "collapse":
        return eq(terms.collapse(n), element(part.parent))
    terms.add(part.parent, -1)
    return formal_sum_is_zero(terms, n)


def _is_zero(acc: FormalSum, n: int, method: str) -> bool:
    if method == "collapse":
        return is_zero(acc.collapse(n))
    return formal_sum_is_zero(acc, n)


def _euler_terms(Q: Polytope, sign: int, acc: FormalSum) -> None:
    for f in Q.faces:
        acc.add(f.polytope, sign * (-1) ** f.dim)


def check_face_euler_partition_relation(part: Partition, method: str = "support") -> bool:
    """chi_F(P) == sum over non-boundary cells of (-1)^codim chi_F(Q)."""
    acc = FormalSum()
    _euler_terms(part.parent, -1, acc)
    for Q in part.boundary_cells:
        _euler_terms(Q, (-1) ** codim(Q, part.parent), acc)
    return _is_zero(acc, part.parent.ambient_dim, method)


def check_cutting_euler_relation(P: Polytope, H: Hyperplane, method: str = "support") -> bool:
    """chi_F(P) + chi_F(P cap H) == chi_F(P_+) + chi_F(P_-)."""
    c = cut(P, H)
    if c.upper is None or c.lower is None:
        raise PolytopeError("hyperplane does not meet the polytope")
    acc = FormalSum()
    _euler_terms(P, 1, acc)
    _euler_terms(c.section, 1, acc)
    _euler_terms(c.upper, -1, acc)
    _euler_terms(c.lower, -1, acc)
    return _is_zero(acc, P.ambient_dim, method)


def check_cutting_relation(P: Polytope, H: Hyperplane) -> bool:
    """P_+ + P_- == P + (P cap H)."""
    c = cut(P, H)
    if c.upper is None or c.lower is None:
        raise PolytopeError("hyperplane does not meet the polytope")
    return minkowski_sum(c.upper, c.lower) == minkowski_sum(P, c.section)
