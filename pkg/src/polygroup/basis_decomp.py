"""A basis of P_T(Z^n) built from primitive segments and iterated shadows, and the
recursive decomposition of classes into it (n <= 3).

Every polytope lives in a translate of a pure subgroup G.  Inside G we work in
the chart given by the canonical HNF basis of G; the last basis vector plays the
role of the vertical direction z, so shadows and heights are taken in chart
coordinates.  Keys are stored in ambient coordinates.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

from .exact_geometry import Polytope, PolytopeError, as_point, primitive, sub
from .group import FormalSum, GroupElement, element, formal_sum_is_zero
from .lattice import chart_coordinates, content, elementary_divisors, from_chart, saturate
from .partitions import partition_from_pieces, shadow_partition_pieces, codim
from .polytope_ops import (
    Hyperplane,
    cut,
    height,
    is_pillar,
    pillar_complete,
    reflect,
    shadow,
    stretch_amount,
    vertical_stretch,
)

MAX_RANK = 3


# ------------------------------------------------------------------ pure subgroups


@dataclass(frozen=True)
class PureSubgroup:
    ambient_dim: int
    lattice_basis: tuple

    @property
    def rank(self) -> int:
        return len(self.lattice_basis)

    @property
    def vertical(self) -> tuple[int, ...]:
        return self.lattice_basis[-1]

    def to_chart(self, x: Sequence) -> tuple[int, ...]:
        return chart_coordinates(self.lattice_basis, x)

    def from_chart(self, c: Sequence) -> tuple:
        return from_chart(self.lattice_basis, c, self.ambient_dim)

    def chart_polytope(self, P: Polytope) -> Polytope:
        """Chart image of P; P must lie in G itself (not a translate)."""
        return Polytope(tuple(sorted(self.to_chart(v) for v in P.vertices)))

    def ambient_polytope(self, C: Polytope) -> Polytope:
        return Polytope(tuple(sorted(self.from_chart(c) for c in C.vertices)))

    def shadow(self, P: Polytope) -> Polytope:
        """Sh of P taken in chart coordinates, translation-normalized."""
        C = self.chart_polytope(P.normalized())
        return self.ambient_polytope(shadow(C)).normalized()

    def is_saturated(self) -> bool:
        return all(e == 1 for e in elementary_divisors(self.lattice_basis))


def pure_closure(vectors: Iterable[Sequence[int]], n: Optional[int] = None) -> PureSubgroup:
    vecs = [as_point(v) for v in vectors]
    if n is None:
        if not vecs:
            raise PolytopeError("ambient dimension unknown for empty input")
        n = len(vecs[0])
    if any(len(v) != n for v in vecs):
        raise PolytopeError("dimension mismatch")
    if any(not isinstance(x, int) for v in vecs for x in v):
        raise PolytopeError("integer vectors required")
    return PureSubgroup(n, tuple(saturate(vecs, n)))


def direction_subgroup(P: Polytope) -> PureSubgroup:
    v0 = P.vertices[0]
    return pure_closure([sub(v, v0) for v in P.vertices], P.ambient_dim)


# ------------------------------------------------------------------ keys


def _canonical_sign(d: tuple[int, ...]) -> tuple[int, ...]:
    lead = next(x for x in d if x)
    return d if lead > 0 else tuple(-x for x in d)


@dataclass(frozen=True)
class SegmentKey:
    direction: tuple[int, ...]

    @classmethod
    def of(cls, vec: Sequence[int]) -> "SegmentKey":
        if not any(vec):
            raise PolytopeError("segment direction must be nonzero")
        return cls(_canonical_sign(primitive(vec)))

    @property
    def ambient_dim(self) -> int:
        return len(self.direction)

    @property
    def sort_key(self) -> tuple:
        return (0, self.direction)

    def __str__(self) -> str:
        return "segment" + _tuple_str(self.direction)


@dataclass(frozen=True)
class ShadowKey:
    chart: tuple  # HNF basis of the pure subgroup the shadow is taken in
    inner: "BasisKey"

    @property
    def ambient_dim(self) -> int:
        return len(self.chart[0])

    @property
    def sort_key(self) -> tuple:
        return (1, len(self.chart), self.chart, self.inner.sort_key)

    def __str__(self) -> str:
        n = self.ambient_dim
        ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        tag = "" if self.chart == ident else "{" + ",".join(map(_tuple_str, self.chart)) + "}"
        inner = _tuple_str(self.inner.direction) if isinstance(self.inner, SegmentKey) else str(self.inner)
        return f"shadow{tag}[{inner}]"


BasisKey = Union[SegmentKey, ShadowKey]


def _tuple_str(t) -> str:
    return "(" + ",".join(str(x) for x in t) + ")"


def key_to_json(key: BasisKey):
    if isinstance(key, SegmentKey):
        return {"segment": list(key.direction)}
    return {"shadow": {"chart": [list(r) for r in key.chart], "inner": key_to_json(key.inner)}}


def key_from_json(doc) -> BasisKey:
    try:
        if "segment" in doc:
            d = tuple(int(x) for x in doc["segment"])
            key = SegmentKey.of(d)
            if key.direction != d:
                raise PolytopeError(f"segment direction {list(d)} is not canonical")
            return key
        body = doc["shadow"]
        chart = tuple(tuple(int(x) for x in r) for r in body["chart"])
        key = ShadowKey(chart, key_from_json(body["inner"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise PolytopeError(f"malformed basis key: {doc!r}") from exc
    validate_key(key)
    return key


def validate_key(key: BasisKey) -> None:
    if isinstance(key, SegmentKey):
        if not any(key.direction) or SegmentKey.of(key.direction) != key:
            raise PolytopeError("malformed segment key")
        return
    if not key.chart or len({len(r) for r in key.chart}) != 1:
        raise PolytopeError("malformed shadow chart")
    G = PureSubgroup(len(key.chart[0]), tuple(key.chart))
    if saturate(key.chart, G.ambient_dim) != list(key.chart):
        raise PolytopeError("shadow chart is not a canonical pure-subgroup basis")
    if key.inner.ambient_dim != G.ambient_dim:
        raise PolytopeError("shadow key dimension mismatch")
    validate_key(key.inner)
    B = basis_polytope(key.inner)
    try:
        S = G.shadow(B)
    except PolytopeError as exc:
        raise PolytopeError("inner basis polytope is not in the chart subgroup") from exc
    if S.dim != G.rank:
        raise PolytopeError("shadow is not full-dimensional in its subgroup")


def basis_polytope(key: BasisKey) -> Polytope:
    """Translation-normalized representative of the basis element."""
    if isinstance(key, SegmentKey):
        return Polytope(tuple(sorted([(0,) * key.ambient_dim, key.direction])))
    if isinstance(key, ShadowKey):
        G = PureSubgroup(key.ambient_dim, tuple(key.chart))
        return G.shadow(basis_polytope(key.inner))
    raise PolytopeError(f"malformed basis key: {key!r}")


# ------------------------------------------------------------------ decompositions


@dataclass(frozen=True)
class Decomposition:
    ambient_dim: int
    coefficients: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {k: c for k, c in self.coefficients.items() if c}
        object.__setattr__(self, "coefficients", dict(sorted(clean.items(), key=lambda kv: kv[0].sort_key)))

    def __add__(self, other: "Decomposition") -> "Decomposition":
        return Decomposition(self.ambient_dim, _combine(self.coefficients, other.coefficients, 1))

    def __neg__(self) -> "Decomposition":
        return Decomposition(self.ambient_dim, {k: -c for k, c in self.coefficients.items()})

    def __sub__(self, other: "Decomposition") -> "Decomposition":
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Decomposition):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.coefficients == other.coefficients

    def __str__(self) -> str:
        return "{" + ", ".join(f"{k}: {c}" for k, c in self.coefficients.items()) + "}"

    def to_json(self) -> dict:
        return {
            "ambient_dim": self.ambient_dim,
            "terms": [{"key": key_to_json(k), "coefficient": c} for k, c in self.coefficients.items()],
        }

    @classmethod
    def from_json(cls, doc) -> "Decomposition":
        if isinstance(doc, str):
            doc = json.loads(doc)
        n = int(doc["ambient_dim"])
        coeffs: dict = {}
        for t in doc.get("terms", []):
            key = key_from_json(t["key"])
            if key.ambient_dim != n:
                raise PolytopeError("basis key dimension mismatch")
            coeffs[key] = coeffs.get(key, 0) + int(t["coefficient"])
        return cls(n, coeffs)


def _combine(a: dict, b: dict, factor: int) -> dict:
    out = dict(a)
    for k, c in b.items():
        out[k] = out.get(k, 0) + factor * c
    return {k: c for k, c in out.items() if c}


def _sum_terms(target: dict, terms: dict, factor: int) -> None:
    for k, c in terms.items():
        target[k] = target.get(k, 0) + factor * c
        if not target[k]:
            del target[k]


def formal_basis_sum(coefficients: dict, n: int) -> FormalSum:
    return FormalSum.of((basis_polytope(k), c) for k, c in coefficients.items())


class _Decomposer:
    """One decomposition run.  The memo tables live and die with the instance."""

    def __init__(self, verify: bool = True):
        self.verify = verify
        self.polytopes: dict = {}
        self.shadows: dict = {}
        self.involutions: dict = {}
        self.bases: dict = {}

    def basis(self, key: BasisKey) -> Polytope:
        hit = self.bases.get(key)
        if hit is None:
            hit = self.bases[key] = basis_polytope(key)
        return hit

    def check(self, terms: dict, target: Polytope) -> bool:
        acc = FormalSum.of((self.basis(k), c) for k, c in terms.items())
        acc.add(target, -1)
        return formal_sum_is_zero(acc, target.ambient_dim, quotient=True)

    # -- polytopes
    def polytope(self, P: Polytope) -> dict:
        P = P.normalized()
        hit = self.polytopes.get(P)
        if hit is not None:
            return hit
        if not P.is_integral:
            raise PolytopeError("requires integral polytope")
        if P.dim == 0:
            terms: dict = {}
        elif P.dim == 1:
            d = sub(P.vertices[1], P.vertices[0])
            terms = {SegmentKey.of(d): content(d)}
        else:
            G = direction_subgroup(P)
            terms = self.full(G, G.chart_polytope(P))
        if self.verify and not self.check(terms, P):
            raise AssertionError(f"decomposition failed to reassemble {P!r}")
        self.polytopes[P] = terms
        return terms

    def full(self, G: PureSubgroup, C: Polytope) -> dict:
        """C is full-dimensional in the chart of G and contains the chart origin."""
        m = G.rank
        k = stretch_amount(C, 0)
        Q = vertical_stretch(C, 0).stretched
        halves = cut(Q, Hyperplane.flat(m, 0))
        terms: dict = {}
        # C = Q+ + Q- - (Q cap H) - 2k Z in P_T
        _sum_terms(terms, self.grounded(G, halves.upper), 1)
        for key, c in self.grounded(G, reflect(halves.lower)).items():
            _sum_terms(terms, self.involution(key), c)
        _sum_terms(terms, self.polytope(G.ambient_polytope(halves.section)), -1)
        _sum_terms(terms, {SegmentKey(G.vertical): 2 * k}, -1)
        return terms

    def grounded(self, G: PureSubgroup, Q: Polytope) -> dict:
        """Shadow-partition decomposition of a grounded chart polytope."""
        pairs = shadow_partition_pieces(Q)
        top_of = {piece: F for F, piece in pairs}
        part = partition_from_pieces(Q, top_of)
        base = height(Q)
        terms: dict = {}
        for cell in part.boundary_cells:
            sign = (-1) ** codim(cell, Q)
            F = top_of.get(cell)
            if F is None:
                _sum_terms(terms, self.polytope(G.ambient_polytope(cell)), sign)
                continue
            # P(F) = Sh(F) + (h(F) - h(Q)) *Z
            _sum_terms(terms, self.shadow_terms(G, G.ambient_polytope(F)), sign)
            _sum_terms(terms, {SegmentKey(G.vertical): height(F) - base}, sign)
        return terms

    # -- shadows of decomposed polytopes
    def shadow_terms(self, G: PureSubgroup, F: Polytope) -> dict:
        terms: dict = {}
        for key, c in self.polytope(F).items():
            _sum_terms(terms, self.shadow_of_key(G, key), c)
        return terms

    def shadow_of_key(self, G: PureSubgroup, key: BasisKey) -> dict:
        hit = self.shadows.get((G, key))
        if hit is not None:
            return hit
        S = G.shadow(self.basis(key))
        terms = {ShadowKey(G.lattice_basis, key): 1} if S.dim == G.rank else self.polytope(S)
        self.shadows[(G, key)] = terms
        return terms

    # -- the involution on basis elements
    def involution(self, key: BasisKey) -> dict:
        if isinstance(key, SegmentKey):
            return {key: 1}
        hit = self.involutions.get(key)
        if hit is not None:
            return hit
        G = PureSubgroup(key.ambient_dim, tuple(key.chart))
        R = reflect(G.chart_polytope(self.basis(key)))
        # *B + S = Q + F with Q a pillar, F the bottom face of *B and S = Sh(F)
        Q, F, S = pillar_complete(R)
        base, t = is_pillar(Q)
        terms: dict = {}
        _sum_terms(terms, self.polytope(G.ambient_polytope(base)), 1)
        _sum_terms(terms, {SegmentKey(G.vertical): t}, 1)
        _sum_terms(terms, self.polytope(G.ambient_polytope(F)), 1)
        _sum_terms(terms, self.shadow_terms(G, G.ambient_polytope(F)), -1)
        if self.verify and not self.check(terms, G.ambient_polytope(R)):
            raise AssertionError(f"involution of {key} failed to reassemble")
        self.involutions[key] = terms
        return terms


def _check_rank(n: int) -> None:
    if n > MAX_RANK:
        raise PolytopeError("rank beyond desk-scale recursion")


def decompose_polytope(P: Polytope) -> Decomposition:
    return decompose(element(P, quotient=True))


def decompose(x: Union[GroupElement, Polytope, FormalSum], n: Optional[int] = None) -> Decomposition:
    """Coordinates of a class of P_T(Z^n) in the shadow basis.

    ``x`` may be a group element, a single polytope, or a signed formal sum of
    polytopes; the last form is decomposed term by term (linearity), which
    avoids Minkowski-summing the terms first.
    """
    if isinstance(x, Polytope):
        x = element(x, quotient=True)
    if isinstance(x, GroupElement):
        if not x.quotient:
            raise PolytopeError("decompose expects a class in P_T")
        terms = FormalSum.of([(x.positive, 1), (x.negative, -1)])
        n = x.ambient_dim
    else:
        terms = x
        if n is None:
            if not terms.terms:
                raise PolytopeError("ambient dimension unknown for an empty sum")
            n = next(iter(terms.terms)).ambient_dim
    _check_rank(n)
    run = _Decomposer()
    coeffs: dict = {}
    for P, c in terms.terms.items():
        if P.ambient_dim != n:
            raise PolytopeError("dimension mismatch")
        if c:
            _sum_terms(coeffs, run.polytope(P), c)
    result = Decomposition(n, coeffs)
    acc = formal_basis_sum(result.coefficients, n)
    for P, c in terms.terms.items():
        acc.add(P, -c)
    if not formal_sum_is_zero(acc, n, quotient=True):
        raise AssertionError("decomposition failed to reassemble")
    return result


def reassemble(d: Decomposition) -> GroupElement:
    return formal_basis_sum(d.coefficients, d.ambient_dim).collapse(d.ambient_dim, quotient=True)


def reassemble_terms(d: Decomposition) -> FormalSum:
    """Reassembly left as a signed formal sum of basis polytopes (no Minkowski sums)."""
    return formal_basis_sum(d.coefficients, d.ambient_dim)


def equivalent(d: Decomposition, x: Union[GroupElement, FormalSum]) -> bool:
    """Exact test of reassemble(d) == x in P_T via support functions.

    Agrees with eq(reassemble(d), x) but never forms the collapsed sums, whose
    vertex counts explode in Z^3.
    """
    acc = reassemble_terms(d)
    if isinstance(x, GroupElement):
        x = FormalSum.of([(x.positive, 1), (x.negative, -1)])
    for P, c in x.terms.items():
        acc.add(P, -c)
    return formal_sum_is_zero(acc, d.ambient_dim, quotient=True)
