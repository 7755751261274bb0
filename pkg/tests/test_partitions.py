import pytest
from hypothesis import given, strategies as st

from polygroup.exact_geometry import PolytopeError
from polygroup.partitions import (
    PartitionError,
    check_cutting_euler_relation,
    check_cutting_relation,
    check_face_euler_partition_relation,
    check_partition_relation,
    codim,
    in_boundary,
    partition_from_hyperplanes,
    shadow_partition,
    shadow_partition_pieces,
    trivial_partition,
    validate_partition,
)
from polygroup.polytope_ops import Hyperplane, cut, is_grounded, reflect, vertical_stretch

from conftest import SQUARE, T, full_polytopes, poly, polytopes

DIAG = Hyperplane.make((1, -1), 0)
ANTI = Hyperplane.make((1, 1), 1)


def faces_of(*pieces):
    return {f.polytope for P in pieces for f in P.faces}


def test_two_triangles_partition_the_square():
    lower, upper = poly((0, 0), (1, 0), (1, 1)), poly((0, 0), (0, 1), (1, 1))
    part = validate_partition(SQUARE, faces_of(lower, upper))
    assert len(part.pieces) == 2
    assert check_partition_relation(part)


def test_overlapping_cells_rejected():
    a, b = poly((0, 0), (1, 0), (1, 1)), poly((0, 0), (1, 0), (0, 1))
    with pytest.raises(PartitionError, match=r"\(3\)"):
        validate_partition(SQUARE, faces_of(a, b))


def test_missing_volume_rejected():
    with pytest.raises(PartitionError):
        validate_partition(SQUARE, faces_of(poly((0, 0), (1, 0), (1, 1))))


def test_hyperplane_partitions():
    assert len(partition_from_hyperplanes(SQUARE, [DIAG]).pieces) == 2
    part = partition_from_hyperplanes(SQUARE, [DIAG, ANTI])
    assert len(part.pieces) == 4
    validate_partition(SQUARE, part.cells)
    far = Hyperplane.make((1, 0), 7)
    assert set(partition_from_hyperplanes(SQUARE, [far]).cells) == set(trivial_partition(SQUARE).cells)


def test_boundary_and_codim():
    edge, corner = poly((0, 0), (1, 0)), poly((1, 1))
    assert in_boundary(edge, SQUARE) and in_boundary(corner, SQUARE)
    assert not in_boundary(poly((0, 0), (1, 1)), SQUARE)
    assert codim(edge, SQUARE) == 1 and codim(corner, SQUARE) == 2


def test_shadow_partition_examples():
    assert [piece for _, piece in shadow_partition_pieces(SQUARE)] == [SQUARE]
    assert [piece for _, piece in shadow_partition_pieces(T)] == [T]
    P = poly((0, 0), (4, 0), (0, 2), (2, 3), (4, 2))
    pairs = shadow_partition_pieces(P)
    assert len(pairs) == 2
    part = validate_partition(P, shadow_partition(P).cells)
    assert check_partition_relation(part)
    with pytest.raises(PolytopeError):
        shadow_partition(reflect(T))


def test_trivial_partition_relation():
    for P in (SQUARE, T, poly((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1))):
        assert check_partition_relation(trivial_partition(P))


def test_cut_relations_on_examples():
    P = poly((0, 0), (2, 0), (0, 2))
    H = Hyperplane.make((0, 1), 1)
    assert check_cutting_relation(P, H)
    assert check_cutting_euler_relation(P, H)


@st.composite
def planes(draw, n=2):
    normal = draw(st.tuples(*[st.integers(-2, 2)] * n).filter(any))
    return Hyperplane.make(normal, draw(st.integers(-3, 3)))


@given(full_polytopes(n=2), st.lists(planes(), min_size=1, max_size=3))
def test_hyperplane_partition_is_valid(P, Hs):
    part = partition_from_hyperplanes(P, Hs)
    validate_partition(P, part.cells)
    assert check_partition_relation(part)
    assert check_partition_relation(part, method="collapse")
    assert check_face_euler_partition_relation(part)


@given(full_polytopes(n=3, bound=2), st.lists(planes(3), min_size=1, max_size=2))
def test_hyperplane_partition_relation_3d(P, Hs):
    part = partition_from_hyperplanes(P, Hs)
    assert check_partition_relation(part)


@given(polytopes(n=2), planes())
def test_cutting_relation(P, H):
    c = cut(P, H)
    if c.upper is None or c.lower is None:
        with pytest.raises(PolytopeError):
            check_cutting_relation(P, H)
        return
    assert check_cutting_relation(P, H)
    assert check_cutting_euler_relation(P, H)
    assert check_cutting_euler_relation(P, H, method="collapse")


@given(full_polytopes(n=2), planes())
def test_cells_of_recursive_split(P, H):
    # cells off the cut come from exactly one of the halves or from the section
    c = cut(P, H)
    part = partition_from_hyperplanes(P, [H])
    halves = [Q for Q in (c.upper, c.lower, c.section) if Q is not None]
    assert set(part.cells) == faces_of(*halves)


@given(full_polytopes(n=2), st.integers(-2, 2))
def test_shadow_partition_of_grounded(P, h):
    R = vertical_stretch(P, h).stretched
    G = cut(R, Hyperplane.flat(2, h)).upper
    assert is_grounded(G)
    part = validate_partition(G, shadow_partition(G).cells)
    assert all(Q.is_integral for Q in part.cells)
    assert check_partition_relation(part)
