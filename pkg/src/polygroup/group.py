"""Elements of the polytope group P(H) and its translation quotient P_T(H)."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .exact_geometry import Number, Polytope, PolytopeError, _det, dot, primitive
from .polytope_ops import minkowski_sum, origin, reflect, scale


@dataclass(frozen=True, eq=False)
class GroupElement:
    """The formal difference ``positive - negative``.

    ``quotient`` selects P_T (translation classes) instead of P.  Use :func:`eq`
    (or ``==``) for group equality; the stored pair is not a reduced form.
    """

    positive: Polytope
    negative: Polytope
    quotient: bool = False

    @property
    def ambient_dim(self) -> int:
        return self.positive.ambient_dim

    def _check(self, other: "GroupElement") -> None:
        if self.ambient_dim != other.ambient_dim or self.quotient != other.quotient:
            raise PolytopeError("group elements live in different groups")

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return GroupElement(
            minkowski_sum(self.positive, other.positive),
            minkowski_sum(self.negative, other.negative),
            self.quotient,
        )

    def __neg__(self) -> "GroupElement":
        return GroupElement(self.negative, self.positive, self.quotient)

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-other)

    def __rmul__(self, k: int) -> "GroupElement":
        if k < 0:
            return (-k) * (-self)
        return GroupElement(scale(self.positive, k), scale(self.negative, k), self.quotient)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return eq(self, other)

    __hash__ = None  # type: ignore[assignment]

    def to_quotient(self) -> "GroupElement":
        return GroupElement(self.positive, self.negative, True)

    def lift(self) -> "GroupElement":
        return GroupElement(self.positive, self.negative, False)

    def __repr__(self) -> str:
        tag = "P_T" if self.quotient else "P"
        return f"<{tag}: {self.positive!r} - {self.negative!r}>"


def element(P: Polytope, Q: Polytope | None = None, quotient: bool = False) -> GroupElement:
    if Q is None:
        Q = origin(P.ambient_dim)
    if P.ambient_dim != Q.ambient_dim:
        raise PolytopeError("dimension mismatch")
    return GroupElement(P, Q, quotient)


def zero(n: int, quotient: bool = False) -> GroupElement:
    return GroupElement(origin(n), origin(n), quotient)


def add(x: GroupElement, y: GroupElement) -> GroupElement:
    return x + y


def negate(x: GroupElement) -> GroupElement:
    return -x


def eq(x: GroupElement, y: GroupElement) -> bool:
    """Cancellation test: A - B == C - D iff A + D == C + B (up to translation in P_T)."""
    x._check(y)
    left = minkowski_sum(x.positive, y.negative)
    right = minkowski_sum(y.positive, x.negative)
    if x.quotient:
        return left.normalized() == right.normalized()
    return left == right


def is_zero(x: GroupElement) -> bool:
    return eq(x, zero(x.ambient_dim, x.quotient))


def involution(x: GroupElement) -> GroupElement:
    return GroupElement(reflect(x.positive), reflect(x.negative), x.quotient)


def width(P: Polytope, phi: Sequence[int]) -> Number:
    vals = [dot(phi, v) for v in P.vertices]
    return max(vals) - min(vals)


def seminorm(x: GroupElement, phi: Sequence[int]) -> Number:
    """||phi||_positive - ||phi||_negative."""
    if len(phi) != x.ambient_dim:
        raise PolytopeError("functional has wrong length")
    return width(x.positive, phi) - width(x.negative, phi)


def sym(x: GroupElement) -> GroupElement:
    """P_T -> P, P - Q |-> (P + *P) - (Q + *Q)."""
    if not x.quotient:
        raise PolytopeError("sym is defined on the translation quotient")
    return GroupElement(
        minkowski_sum(x.positive, reflect(x.positive)),
        minkowski_sum(x.negative, reflect(x.negative)),
        False,
    )


@dataclass
class FormalSum:
    """A finite integer combination of polytopes."""

    terms: Counter = field(default_factory=Counter)

    @classmethod
    def of(cls, pairs: Iterable[tuple[Polytope, int]]) -> "FormalSum":
        c: Counter = Counter()
        for P, k in pairs:
            c[P] += k
        return cls(c)

    def add(self, P: Polytope, k: int = 1) -> None:
        self.terms[P] += k

    def collapse(self, n: int, quotient: bool = False) -> GroupElement:
        pos, neg = origin(n), origin(n)
        for P in sorted(self.terms, key=lambda p: p.vertices):
            k = self.terms[P]
            if k > 0:
                pos = minkowski_sum(pos, scale(P, k))
            elif k < 0:
                neg = minkowski_sum(neg, scale(P, -k))
        return GroupElement(pos, neg, quotient)


def _generalized_cross(vectors: list[tuple[int, ...]], n: int) -> tuple[int, ...]:
    return tuple(
        (-1) ** j * _det([list(v[:j] + v[j + 1:]) for v in vectors]) for j in range(n)
    )


def _edge_directions(P: Polytope) -> set:
    out = set()
    for f in P.faces:
        if f.dim == 1:
            a, b = f.polytope.vertices
            d = primitive([y - x for x, y in zip(a, b)])
            out.add(d if d > tuple(-x for x in d) else tuple(-x for x in d))
    return out


def probe_directions(polytopes: Iterable[Polytope], n: int) -> list[tuple[int, ...]]:
    """Directions containing every ray of a pointed common refinement of the normal fans.

    Each wall of a normal fan lies in a hyperplane orthogonal to an edge, so the
    rays are generalized cross products of n-1 edge directions.  The coordinate
    axes are added to make the refinement pointed.
    """
    dirs = {tuple(int(i == j) for j in range(n)) for i in range(n)}
    for P in polytopes:
        dirs |= _edge_directions(P)
    dirs = sorted(dirs)
    out = set()
    for combo in itertools.combinations(dirs, n - 1):
        c = _generalized_cross(list(combo), n)
        if any(c):
            p = primitive(c)
            out.add(p)
            out.add(tuple(-x for x in p))
    return sorted(out)


def support(P: Polytope, phi: Sequence[int]) -> Number:
    return max(dot(phi, v) for v in P.vertices)


def formal_sum_is_zero(terms: FormalSum, n: int, quotient: bool = False) -> bool:
    """Exact zero test for a signed sum of polytopes via support functions.

    The support function of the sum is linear on every cone of the common
    refinement, so it vanishes (is linear, in P_T) iff it does so on all rays.
    """
    items = [(P, k) for P, k in terms.terms.items() if k]
    if not items:
        return True
    polys = [P for P, _ in items]

    def h(phi):
        return sum(k * support(P, phi) for P, k in items)

    axes = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    lin = [h(e) for e in axes] if quotient else [0] * n
    return all(h(d) == dot(lin, d) for d in probe_directions(polys, n))


def face_euler_characteristic(P: Polytope) -> GroupElement:
    """Sum over all faces F of (-1)^dim(F) F, collapsed to a group element."""
    terms = FormalSum.of((f.polytope, (-1) ** f.dim) for f in P.faces)
    return terms.collapse(P.ambient_dim)


def translation_split(x: GroupElement) -> tuple[tuple, GroupElement]:
    """Split x in P(H) as {v} + x', x' built from origin-normalized polytopes."""
    a, b = x.positive.lexmin(), x.negative.lexmin()
    v = tuple(p - q for p, q in zip(a, b))
    return v, GroupElement(x.positive.normalized(), x.negative.normalized(), x.quotient)


# ------------------------------------------------------------------ rank one model


def interval(m: int, n: int) -> Polytope:
    if n < m:
        raise PolytopeError("empty interval")
    return Polytope(((m,),) if m == n else ((m,), (n,)))


def to_z2(x: GroupElement) -> tuple[int, int]:
    """P(Z) -> Z^2, [m, n] |-> (m, n - m)."""
    if x.ambient_dim != 1 or x.quotient:
        raise PolytopeError("model applies to P(Z)")

    def coords(P):
        m, n = P.vertices[0][0], P.vertices[-1][0]
        return m, n - m

    a, b = coords(x.positive), coords(x.negative)
    return a[0] - b[0], a[1] - b[1]


def from_z2(k: int, l: int) -> GroupElement:
    """Z^2 -> P(Z): (1, 0) is the point {1}, (0, 1) the interval [0, 1]."""
    pos = interval(max(k, 0), max(k, 0) + max(l, 0))
    neg = interval(max(-k, 0), max(-k, 0) + max(-l, 0))
    return GroupElement(pos, neg, False)


def to_z(x: GroupElement) -> int:
    """P_T(Z) -> Z, [m, n] |-> n - m."""
    if x.ambient_dim != 1:
        raise PolytopeError("model applies to P_T(Z)")

    def length(P):
        return P.vertices[-1][0] - P.vertices[0][0]

    return length(x.positive) - length(x.negative)


def involution_z2(k: int, l: int) -> tuple[int, int]:
    return -l - k, l
