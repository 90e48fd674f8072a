from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from equidissect.errors import PreconditionError
from equidissect.geometry import (
    BrokenLine,
    Polygon,
    Vector,
    generalized_area,
    point,
    triangle_polygon_intersection_area,
    triangle_signed_area,
    triangles_interior_disjoint,
    triangulate,
    wedge,
)

from oracles import convex_clip_area, shoelace

small = st.fractions(min_value=-20, max_value=20, max_denominator=8)
pts = st.tuples(small, small)
HEXAGON = [(0, 0), (2, 0), (3, 1), (3, 2), (1, 2), (0, 1)]
UNIT_SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]
L_SHAPE = [(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]


def test_wedge_examples():
    assert wedge((1, 0), (0, 1)) == 1
    assert wedge((2, 1), (4, 2)) == 0
    assert wedge((3, 1), (1, 2)) == 5


@given(pts, pts, pts, small)
def test_wedge_antisymmetric_bilinear(v, w, u, k):
    assert wedge(v, w) == -wedge(w, v)
    vw = (v[0] + k * u[0], v[1] + k * u[1])
    assert wedge(vw, w) == wedge(v, w) + k * wedge(u, w)


def test_triangle_signed_area_examples():
    assert triangle_signed_area((0, 0), (1, 0), (0, 1)) == Fraction(1, 2)
    assert triangle_signed_area((0, 0), (2, 0), (1, 0)) == 0
    assert triangle_signed_area((0, 0), (2, 1), (1, 3)) == Fraction(5, 2)


@given(pts, pts, pts)
def test_triangle_area_is_half_wedge(a, b, c):
    ab = (b[0] - a[0], b[1] - a[1])
    ac = (c[0] - a[0], c[1] - a[1])
    assert triangle_signed_area(a, b, c) == wedge(ab, ac) / 2


def test_generalized_area_examples():
    assert generalized_area(UNIT_SQUARE) == 1
    assert generalized_area(HEXAGON) == 5 == shoelace(HEXAGON)
    back_and_forth = HEXAGON + HEXAGON[::-1]
    assert generalized_area(back_and_forth) == 0


@given(st.lists(pts, min_size=1, max_size=9), st.integers(0, 8))
def test_generalized_area_rotation_and_reversal(line, k):
    k %= len(line)
    assert generalized_area(line[k:] + line[:k]) == generalized_area(line)
    assert generalized_area(line[::-1]) == -generalized_area(line)


@given(st.lists(pts, min_size=2, max_size=9), st.integers(0, 8),
       st.fractions(min_value=0, max_value=1, max_denominator=16))
def test_generalized_area_subdivision_invariant(line, k, t):
    k %= len(line)
    a, b = line[k], line[(k + 1) % len(line)]
    mid = (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))
    assert generalized_area(line[:k + 1] + [mid] + line[k + 1:]) == generalized_area(line)


def test_intersection_area_examples():
    sq = Polygon(tuple(UNIT_SQUARE))
    inside = [(Fraction(1, 4), Fraction(1, 4)), (Fraction(3, 4), Fraction(1, 4)), (Fraction(1, 2), Fraction(3, 4))]
    assert triangle_polygon_intersection_area(inside, sq) == abs(shoelace(inside))
    assert triangle_polygon_intersection_area([(5, 5), (6, 5), (5, 6)], sq) == 0
    big = [(0, 0), (2, 0), (0, 2)]
    assert convex_clip_area(big, UNIT_SQUARE) == 1
    assert triangle_polygon_intersection_area(big, sq) == 1


@given(pts, pts, pts)
def test_intersection_with_nonconvex_polygon_matches_oracle(a, b, c):
    t = [a, b, c]
    if shoelace(t) < 0:
        t = [a, c, b]
    # L-shape = two convex rectangles meeting along a segment
    expected = (convex_clip_area(t, [(0, 0), (2, 0), (2, 1), (0, 1)])
                + convex_clip_area(t, [(0, 1), (1, 1), (1, 2), (0, 2)]))
    assert triangle_polygon_intersection_area(t, Polygon(tuple(L_SHAPE))) == expected


def test_interior_disjoint_examples():
    t1 = [(0, 0), (1, 0), (0, 1)]
    t2 = [(1, 0), (1, 1), (0, 1)]
    assert triangles_interior_disjoint(t1, t2)
    assert not triangles_interior_disjoint(t1, t1)
    big = [(0, 0), (2, 0), (0, 2)]
    touching = [(1, 1), (2, 2), (0, 2)]
    assert convex_clip_area(touching, big) == 0
    assert triangles_interior_disjoint(big, touching)
    poking = [(Fraction(1, 2), Fraction(1, 2)), (2, 2), (0, 2)]
    assert convex_clip_area(poking, big) > 0
    assert not triangles_interior_disjoint(big, poking)


def test_polygon_rejects_self_intersection():
    with pytest.raises(PreconditionError):
        Polygon(((0, 0), (1, 1), (1, 0), (0, 1)))
    with pytest.raises(PreconditionError):
        Polygon(((0, 0), (2, 0), (1, 0), (1, 1)))  # folds back along the x-axis
    with pytest.raises(PreconditionError):
        Polygon(((0, 0), (1, 0), (2, 0)))
    Polygon(tuple(L_SHAPE))
    Polygon(((0, 0), (1, 0), (2, 0), (2, 2)))  # straight-through vertex is fine


def test_polygon_containment_and_convexity():
    L = Polygon(tuple(L_SHAPE))
    assert L.contains((Fraction(1, 2), Fraction(3, 2)))
    assert L.contains((1, 1)) and L.contains((2, 0))
    assert not L.contains((Fraction(3, 2), Fraction(3, 2)))
    assert not L.is_convex()
    assert Polygon(tuple(HEXAGON)).is_convex()


@pytest.mark.parametrize("verts", [UNIT_SQUARE, HEXAGON, L_SHAPE,
                                   [(0, 0), (4, 0), (4, 4), (2, 1), (0, 4)],
                                   [(0, 0), (1, 0), (2, 0), (2, 2), (0, 2), (0, 1)]])
def test_triangulation_covers_polygon(verts):
    P = Polygon(tuple(verts))
    tris = triangulate(P)
    assert sum(abs(shoelace(t)) for t in tris) == abs(shoelace(verts))
    for t in tris:
        assert triangle_polygon_intersection_area(t, P) == abs(shoelace(t))


def test_broken_line_basics():
    L = BrokenLine(tuple(point(x, y) for x, y in HEXAGON))
    assert L.side_vectors()[0] == Vector(2, 0)
    assert L.area() == 5 and L.reversed().area() == -5
    assert L.is_lattice()
    assert not BrokenLine(((Fraction(1, 2), 0),)).is_lattice()
