"""Seminorm kernel and antisymmetric witnesses: x + *x = 0 implies x = T - *T."""

from __future__ import annotations

from dataclasses import dataclass

from .basis_decomp import pure_closure
from .exact_geometry import Polytope, PolytopeError
from .group import GroupElement, element, eq, involution, sym, zero
from .polytope_ops import (
    Hyperplane,
    compress,
    cut,
    gluing_identities,
    minkowski_sum,
    origin,
    reflect,
    scale,
    stretch_amount,
    symmetric_vertical,
    vertical_glue,
)


def in_plus_kernel(x: GroupElement) -> bool:
    """x + *x == 0, i.e. P + *P = Q + *Q; equivalent to all seminorms agreeing."""
    return eq(x + involution(x), zero(x.ambient_dim, x.quotient))


@dataclass(frozen=True)
class WitnessResult:
    witness: GroupElement
    certificate: tuple  # (left, right) polytopes, equal iff T - *T == x

    def check(self) -> bool:
        return self.certificate[0] == self.certificate[1]


def _certificate(T: GroupElement, x: GroupElement) -> tuple[Polytope, Polytope]:
    # T - *T = (T+ + *T-) - (T- + *T+);  a - b == c - d  iff  a + d == c + b
    a = minkowski_sum(T.positive, reflect(T.negative))
    b = minkowski_sum(T.negative, reflect(T.positive))
    left, right = minkowski_sum(a, x.negative), minkowski_sum(x.positive, b)
    if x.quotient:
        return left.normalized(), right.normalized()
    return left, right


def _stretch(P: Polytope, k: int) -> Polytope:
    return minkowski_sum(P, scale(symmetric_vertical(P.ambient_dim), k))


def _witness(P: Polytope, Q: Polytope) -> tuple[Polytope, Polytope]:
    """(T+, T-) with T - *T = P - Q for T = T+ - T-, given P + *P = Q + *Q."""
    n = P.ambient_dim
    # matched stretching leaves P - Q literally unchanged
    k = max(stretch_amount(P, 0), stretch_amount(Q, 0))
    P1, Q1 = _stretch(P, k), _stretch(Q, k)
    H = Hyperplane.flat(n, 0)
    sp, sq = cut(P1, H).section, cut(Q1, H).section
    assert sp == compress(P1, 0) and sq == compress(Q1, 0), "stretching left the section short"
    if n == 1:
        R = origin(1)
    else:
        G = pure_closure([tuple(int(i == j) for j in range(n)) for i in range(n - 1)], n)
        Tp, Tm = _witness(G.chart_polytope(sp), G.chart_polytope(sq))
        r = minkowski_sum(Tp, reflect(Tm))  # sp + *r = sq + r
        R = G.ambient_polytope(r)
    A = minkowski_sum(P1, reflect(R))
    B = minkowski_sum(Q1, R)
    S = vertical_glue(A, B, H)
    assert gluing_identities(A) and gluing_identities(B), "gluing identities fail"
    # T - *T = A - B and P - Q = (A - B) + (R - *R), so the witness is S + R - B
    return minkowski_sum(S, R), B


def witness_antisymmetric(x: GroupElement) -> WitnessResult:
    if x.quotient:
        raise PolytopeError("use witness_antisymmetric_pt for P_T")
    if not (x.positive.is_integral and x.negative.is_integral):
        raise PolytopeError("requires integral polytope")
    if not in_plus_kernel(x):
        raise PolytopeError("not in ker(id+*)")
    S, B = _witness(x.positive, x.negative)
    T = GroupElement(S, B, False)
    result = WitnessResult(T, _certificate(T, x))
    if not result.check():
        raise AssertionError("witness failed verification")
    return result


def witness_antisymmetric_pt(x: GroupElement) -> WitnessResult:
    if not x.quotient:
        raise PolytopeError("expects a class in P_T")
    if not eq(sym(x), zero(x.ambient_dim)):
        raise PolytopeError("not in ker(id+*)")
    # P + *P is centred at the origin, so sym(x) = 0 already holds in P for the lift
    lift = GroupElement(x.positive.normalized(), x.negative.normalized(), False)
    T = witness_antisymmetric(lift).witness.to_quotient()
    result = WitnessResult(T, _certificate(T, x))
    if not result.check():
        raise AssertionError("witness failed verification")
    return result


def witness_same_norm(P: Polytope, Q: Polytope) -> Polytope:
    """An integral R with P + *R = Q + R."""
    T = witness_antisymmetric(element(P, Q)).witness
    # T - *T = P - Q rearranges to P + *R = Q + R for R = T+ + *T-
    R = minkowski_sum(T.positive, reflect(T.negative))
    if minkowski_sum(P, reflect(R)) != minkowski_sum(Q, R):
        raise AssertionError("same-norm witness failed verification")
    return R
