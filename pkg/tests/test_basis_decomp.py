import itertools

import pytest
from hypothesis import given, settings, strategies as st

from polygroup.basis_decomp import (
    Decomposition,
    SegmentKey,
    ShadowKey,
    basis_polytope,
    decompose,
    equivalent,
    key_from_json,
    key_to_json,
    pure_closure,
    reassemble,
    reassemble_terms,
    validate_key,
)
from polygroup.exact_geometry import PolytopeError, point
from polygroup.group import FormalSum, element, eq, is_zero
from polygroup.polytope_ops import minkowski_sum, reflect

from conftest import SQUARE, T, poly, polytopes

I2 = ((1, 0), (0, 1))


def cls(P):
    return element(P, quotient=True)


def test_pure_closure_examples():
    assert pure_closure([(2, 0)]).lattice_basis == ((1, 0),)
    assert pure_closure([(1, 0), (0, 1)]).rank == 2
    G = pure_closure([(2, 2, 0)])
    assert G.lattice_basis == ((1, 1, 0),) and G.is_saturated()
    assert pure_closure([(0, 0)], 2).rank == 0


def test_basis_polytope_examples():
    assert basis_polytope(SegmentKey.of((1, 0))) == poly((0, 0), (1, 0))
    assert basis_polytope(ShadowKey(I2, SegmentKey.of((1, -1)))) == T
    assert basis_polytope(ShadowKey(I2, SegmentKey.of((1, 1)))) == poly((0, 0), (1, 0), (1, 1))


def test_segment_keys_are_canonical():
    assert SegmentKey.of((-2, 4)) == SegmentKey.of((1, -2))
    with pytest.raises(PolytopeError):
        SegmentKey.of((0, 0))


def test_decompose_examples():
    assert decompose(poly((0, 0), (3, 0))) == Decomposition(2, {SegmentKey.of((1, 0)): 3})
    assert decompose(T) == Decomposition(2, {ShadowKey(I2, SegmentKey.of((1, -1))): 1})
    sq = decompose(SQUARE)
    assert sq == Decomposition(2, {SegmentKey.of((1, 0)): 1, SegmentKey.of((0, 1)): 1})
    assert str(sq) == "{segment(0,1): 1, segment(1,0): 1}"
    assert str(decompose(T)) == "{shadow[(1,-1)]: 1}"


def test_reassemble_examples():
    assert is_zero(reassemble(Decomposition(2, {})))
    d = Decomposition(2, {SegmentKey.of((1, 0)): 2})
    assert eq(reassemble(d), cls(poly((0, 0), (2, 0))))


def test_non_quotient_and_high_rank_rejected():
    with pytest.raises(PolytopeError):
        decompose(element(T))
    with pytest.raises(PolytopeError, match="desk-scale"):
        decompose(point((0, 0, 0, 0)))


def test_json_round_trip():
    d = decompose(minkowski_sum(T, reflect(SQUARE)))
    assert Decomposition.from_json(d.to_json()) == d
    for k in d.coefficients:
        assert key_from_json(key_to_json(k)) == k
        validate_key(k)


def test_distinct_keys_give_distinct_classes():
    keys = set()
    for P in (T, reflect(T), SQUARE, poly((0, 0), (2, 1), (1, 3)), poly((0, 0), (1, 2), (3, 1), (2, -1))):
        keys.update(decompose(P).coefficients)
    keys.update(decompose(reflect(poly((0, 0), (2, 1), (1, 3)))).coefficients)
    for a, b in itertools.combinations(sorted(keys, key=lambda k: k.sort_key), 2):
        assert not eq(cls(basis_polytope(a)), cls(basis_polytope(b)))


def test_three_dimensional_examples():
    cube = poly(*itertools.product((0, 1), repeat=3))
    d = decompose(cube)
    assert set(d.coefficients.values()) == {1} and len(d.coefficients) == 3
    simplex = poly((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1))
    d = decompose(simplex)
    assert eq(reassemble(d), cls(simplex))
    assert equivalent(d, cls(simplex))


@given(polytopes(n=2, bound=3).filter(lambda P: P.dim == 1))
def test_segment_has_one_key_with_lattice_length(P):
    (key, c), = decompose(P).coefficients.items()
    a, b = P.vertices
    assert isinstance(key, SegmentKey)
    assert c == max(abs(x - y) for x, y in zip(a, b)) // max(abs(x) for x in key.direction)


@given(st.lists(st.tuples(polytopes(n=2, bound=3), st.sampled_from((1, -1))), min_size=1, max_size=4))
def test_round_trip_2d(pairs):
    terms = FormalSum.of(pairs)
    d = decompose(terms, 2)
    x = terms.collapse(2, quotient=True)
    assert eq(reassemble(d), x)
    assert equivalent(d, x)
    assert decompose(x) == d


@given(polytopes(n=2, bound=3), polytopes(n=2, bound=3))
def test_additive(P, Q):
    assert decompose(minkowski_sum(P, Q)) == decompose(P) + decompose(Q)
    assert decompose(cls(P) - cls(Q)) == decompose(P) - decompose(Q)


@given(polytopes(n=3, bound=2, max_points=5))
@settings(max_examples=8)
def test_round_trip_3d(P):
    d = decompose(P)
    assert eq(reassemble(d), cls(P))


def test_equivalent_detects_a_wrong_decomposition():
    d = decompose(T) + Decomposition(2, {SegmentKey.of((1, 0)): 1})
    assert not equivalent(d, cls(T))
    assert isinstance(reassemble_terms(d), FormalSum)
