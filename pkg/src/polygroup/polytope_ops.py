"""Geometric operations on polytopes: sums, reflection, faces, shadows, cuts,
vertical stretching and gluing."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from functools import reduce
from typing import Optional, Sequence

from .exact_geometry import (
    Face,
    Number,
    Polytope,
    PolytopeError,
    as_point,
    dot,
    extreme_points,
    normalize_number,
)


# ------------------------------------------------------------------ basics


def minkowski_sum(P: Polytope, Q: Polytope) -> Polytope:
    if P.ambient_dim != Q.ambient_dim:
        raise PolytopeError(f"dimension mismatch: {P.ambient_dim} vs {Q.ambient_dim}")
    if len(Q.vertices) == 1:
        return P.translate(Q.vertices[0])
    if len(P.vertices) == 1:
        return Q.translate(P.vertices[0])
    return extreme_points(
        tuple(a + b for a, b in zip(p, q)) for p in P.vertices for q in Q.vertices
    )


def scale(P: Polytope, k: Number) -> Polytope:
    """k-fold Minkowski multiple, i.e. the dilation k*P (k >= 0)."""
    if k < 0:
        raise PolytopeError("negative Minkowski multiple")
    if k == 0:
        return origin(P.ambient_dim)
    return Polytope(tuple(tuple(normalize_number(k * x) for x in v) for v in P.vertices))


def reflect(P: Polytope) -> Polytope:
    return Polytope(tuple(sorted(tuple(-x for x in v) for v in P.vertices)))


def origin(n: int) -> Polytope:
    return Polytope(((0,) * n,))


def unit_vertical(n: int) -> Polytope:
    """The segment from 0 to z = (0,...,0,1)."""
    return Polytope(((0,) * n, (0,) * (n - 1) + (1,)))


def symmetric_vertical(n: int) -> Polytope:
    """Z + *Z, the segment from -z to z."""
    return Polytope(((0,) * (n - 1) + (-1,), (0,) * (n - 1) + (1,)))


def face_in_direction(P: Polytope, phi: Sequence[int]) -> Polytope:
    if len(phi) != P.ambient_dim:
        raise PolytopeError("direction has wrong length")
    vals = [dot(phi, v) for v in P.vertices]
    top = max(vals)
    return Polytope(tuple(v for v, x in zip(P.vertices, vals) if x == top))


# ------------------------------------------------------------------ heights


def height(P: Polytope) -> Number:
    return min(v[-1] for v in P.vertices)


def upper_height(P: Polytope) -> Number:
    return max(v[-1] for v in P.vertices)


def compress(P: Polytope, h: Number) -> Polytope:
    h = normalize_number(h)
    return extreme_points(v[:-1] + (h,) for v in P.vertices)


def shadow(P: Polytope) -> Polytope:
    h = height(P)
    return extreme_points(list(P.vertices) + [v[:-1] + (h,) for v in P.vertices])


def upper_shadow(P: Polytope) -> Polytope:
    h = upper_height(P)
    return extreme_points(list(P.vertices) + [v[:-1] + (h,) for v in P.vertices])


def is_flat(P: Polytope) -> bool:
    return all(v[-1] == P.vertices[0][-1] for v in P.vertices)


# ------------------------------------------------------------------ codim-1 faces


def _require_full(P: Polytope) -> None:
    if P.dim != P.ambient_dim:
        raise PolytopeError("full-dimensional input required")


def _facet_kind(normal: Sequence[int]) -> str:
    z = normal[-1]
    return "bottom" if z < 0 else ("top" if z > 0 else "vertical")


def classify_codim1_face(P: Polytope, F: Face | Polytope) -> str:
    """'bottom', 'vertical' or 'top' by the sign of the outer normal's last entry."""
    _require_full(P)
    face = F.polytope if isinstance(F, Face) else F
    if P.dim - face.dim != 1:
        raise PolytopeError("codimension-1 face required")
    for f in P.facets:
        if P.subpolytope(f.vertices) == face:
            return _facet_kind(f.normal)
    raise PolytopeError("not a face of the polytope")


def facets_of_kind(P: Polytope, kind: str) -> list[Polytope]:
    _require_full(P)
    return [P.subpolytope(f.vertices) for f in P.facets if _facet_kind(f.normal) == kind]


def bottom_faces(P: Polytope) -> list[Polytope]:
    return facets_of_kind(P, "bottom")


def top_faces(P: Polytope) -> list[Polytope]:
    return facets_of_kind(P, "top")


def is_grounded(P: Polytope) -> bool:
    bottoms = bottom_faces(P)
    return len(bottoms) == 1 and is_flat(bottoms[0])


def ground(P: Polytope) -> Polytope:
    if not is_grounded(P):
        raise PolytopeError("polytope is not grounded")
    return bottom_faces(P)[0]


def is_almost_pillar(P: Polytope) -> bool:
    return len(bottom_faces(P)) == 1 and len(top_faces(P)) == 1


def is_pillar(P: Polytope) -> Optional[tuple[Polytope, Number]]:
    """(Q, k) with P = Q + k*Z for a flat Q and k > 0, or None."""
    _require_full(P)
    base = compress(P, height(P))
    k = upper_height(P) - height(P)
    if k > 0 and minkowski_sum(base, scale(unit_vertical(P.ambient_dim), k)) == P:
        return base, k
    return None


def grounding_map(P: Polytope) -> Polytope:
    G = ground(P)
    image = compress(P, height(G))
    assert image == G, "grounding map image differs from the ground"
    return image


# ------------------------------------------------------------------ hyperplanes and cuts


@dataclass(frozen=True)
class Hyperplane:
    """{x : <normal, x> = offset} with a primitive integer normal."""

    normal: tuple[int, ...]
    offset: Number

    @classmethod
    def make(cls, normal: Sequence, offset) -> "Hyperplane":
        vec = [Fraction(x) for x in as_point(normal)]
        if not any(vec):
            raise PolytopeError("hyperplane normal must be nonzero")
        den = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in vec), 1)
        ints = [int(x * den) for x in vec]
        g = reduce(gcd, (abs(x) for x in ints), 0)
        return cls(
            tuple(x // g for x in ints),
            normalize_number(Fraction(normalize_number(offset)) * den / g),
        )

    @classmethod
    def flat(cls, n: int, h: Number) -> "Hyperplane":
        return cls((0,) * (n - 1) + (1,), normalize_number(h))

    @property
    def is_flat(self) -> bool:
        return all(x == 0 for x in self.normal[:-1])

    def value(self, p: Sequence) -> Number:
        return dot(self.normal, p) - self.offset


@dataclass(frozen=True)
class CutResult:
    upper: Optional[Polytope]
    lower: Optional[Polytope]
    section: Optional[Polytope]


def _edge_crossings(P: Polytope, H: Hyperplane, vals) -> list[tuple]:
    if P.dim == 0:
        return []
    out = []
    for face in P.faces:
        if face.dim != 1:
            continue
        i, j = sorted(face.vertex_indices)
        a, b = vals[i], vals[j]
        if (a > 0 > b) or (a < 0 < b):
            t = Fraction(a) / (a - b)
            u, w = P.vertices[i], P.vertices[j]
            out.append(tuple(normalize_number(x + t * (y - x)) for x, y in zip(u, w)))
    return out


def cut(P: Polytope, H: Hyperplane) -> CutResult:
    """Upper half <a,x> >= c, lower half <a,x> <= c and section P cap H."""
    if len(H.normal) != P.ambient_dim:
        raise PolytopeError("hyperplane has wrong dimension")
    vals = [H.value(v) for v in P.vertices]
    crossings = _edge_crossings(P, H, vals)
    up = [v for v, x in zip(P.vertices, vals) if x >= 0] + crossings
    lo = [v for v, x in zip(P.vertices, vals) if x <= 0] + crossings
    on = [v for v, x in zip(P.vertices, vals) if x == 0] + crossings
    return CutResult(
        extreme_points(up) if any(x >= 0 for x in vals) else None,
        extreme_points(lo) if any(x <= 0 for x in vals) else None,
        extreme_points(on) if on else None,
    )


def section(P: Polytope, h: Number) -> Optional[Polytope]:
    return cut(P, Hyperplane.flat(P.ambient_dim, h)).section


# ------------------------------------------------------------------ stretching and gluing


@dataclass(frozen=True)
class StretchResult:
    k: int
    stretched: Polytope


def stretch_amount(P: Polytope, h: Number) -> Number:
    return max(abs(v[-1] - h) for v in P.vertices)


def vertical_stretch(P: Polytope, h: int) -> StretchResult:
    """Q = P + k*(Z + *Z) with k = max |p_n - h| over the vertices.

    Works for lower-dimensional P as well; the flat section at height h is then
    the full compression c_h(Q).
    """
    if not P.is_integral:
        raise PolytopeError("requires integral polytope")
    k = stretch_amount(P, h)
    return StretchResult(k, minkowski_sum(P, scale(symmetric_vertical(P.ambient_dim), k)))


def vertical_glue(P: Polytope, Q: Polytope, H: Hyperplane) -> Polytope:
    """The polytope P_+ cup Q_- for a flat H along which both have equal compressions."""
    if not H.is_flat:
        raise PolytopeError("gluing requires a flat hyperplane")
    h = Fraction(H.offset) / H.normal[-1]
    cp, cq = cut(P, H), cut(Q, H)
    if not (
        cp.section is not None
        and cp.section == compress(P, h) == compress(Q, h) == cq.section
    ):
        raise PolytopeError("gluing assumption violated")
    upper = cp.upper if H.normal[-1] > 0 else cp.lower
    lower = cq.lower if H.normal[-1] > 0 else cq.upper
    return extreme_points(list(upper.vertices) + list(lower.vertices))


def gluing_identities(P: Polytope) -> bool:
    """At H = z-perp: (P+*P) cap H = (P cap H) + (*P cap H), (P+*P)+ = P+ + *(P-),
    (P+*P)- = P- + *(P+).  Needs P cap H = c_0(P)."""
    H = Hyperplane.flat(P.ambient_dim, 0)
    R = reflect(P)
    c, cr, cs = cut(P, H), cut(R, H), cut(minkowski_sum(P, R), H)
    if c.section is None or c.section != compress(P, 0):
        raise PolytopeError("gluing assumption violated")
    return (
        cs.section == minkowski_sum(c.section, cr.section)
        and cs.upper == minkowski_sum(c.upper, reflect(c.lower))
        and cs.lower == minkowski_sum(c.lower, reflect(c.upper))
    )


def pillar_complete(P: Polytope) -> tuple[Polytope, Polytope, Polytope]:
    """(Q, F, S): a pillar Q, the bottom face F of P and a grounded almost-pillar S
    with P + S = Q + F."""
    R = reflect(P)
    if not (is_grounded(R) and is_almost_pillar(R)):
        raise PolytopeError("reflected polytope must be a grounded almost-pillar")
    F = bottom_faces(P)[0]
    if is_pillar(P) is not None:
        return P, F, F
    S = shadow(F)
    Q = extreme_points(list(S.vertices) + list(P.vertices))
    assert is_pillar(Q) is not None, "completion is not a pillar"
    assert minkowski_sum(P, S) == minkowski_sum(Q, F), "pillar completion identity fails"
    return Q, F, S
