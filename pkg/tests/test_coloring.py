import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from equidissect.coloring import E, U, V, AffineMap, Color, color, color_under, is_rainbow, lattice_color, lattice_color_under
from equidissect.dyadic import val2
from equidissect.errors import NotLattice, PreconditionError
from equidissect.geometry import triangle_signed_area

from gen import rand_integral_map, rand_point, rand_rainbow_triangle, rand_rational_map

rationals = st.fractions(min_value=-64, max_value=64, max_denominator=64)


@pytest.mark.parametrize("p, expected", [
    ((0, 0), "A"), ((0, 1), "B"), ((1, 0), "C"), ((1, 1), "C"),
    ((Fraction(1, 2), Fraction(1, 3)), "C"),
    ((2, 4), "A"),
])
def test_color_examples(p, expected):
    assert color(p) == Color(expected)


def test_color_under_examples():
    assert color_under(E, (1, 0)) == Color.C
    assert U((1, 1)) == (2, 1) and color_under(U, (1, 1)) == Color.B
    assert V((0, 0)) == (1, 0) and color_under(V, (0, 0)) == Color.C


def test_is_rainbow_examples():
    assert is_rainbow((0, 0), (0, 1), (1, 0), E)
    assert not is_rainbow((0, 0), (2, 0), (0, 2), E)
    assert not is_rainbow((0, 0), (1, 0), (3, 0), E)


def test_lattice_color_table():
    assert lattice_color((0, 0)) == Color.A
    assert lattice_color((0, 1)) == Color.B
    assert lattice_color((1, 0)) == Color.C
    assert lattice_color((1, 1)) == Color.C


def test_lattice_color_matches_color_on_random_lattice_points():
    rng = random.Random(3)
    for _ in range(100):
        x, y = rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6)
        assert color((x, y)) == lattice_color((x % 2, y % 2))


@given(rationals, rationals)
def test_exactly_one_clause(x, y):
    vx, vy = val2(x), val2(y)
    clauses = [vx > 0 and vy > 0, vy <= 0 and vx > vy, vx <= 0 and vy >= vx]
    assert sum(clauses) == 1
    assert color((x, y)) == [Color.A, Color.B, Color.C][clauses.index(True)]


def test_rainbow_area_bound_by_rejection():
    rng = random.Random(11)
    seen = 0
    for _ in range(3000):
        m = rand_integral_map(rng) if rng.random() < 0.5 else rand_rational_map(rng)
        a, b, c = rand_point(rng), rand_point(rng), rand_point(rng)
        if is_rainbow(a, b, c, m):
            seen += 1
            area = triangle_signed_area(a, b, c)
            assert area != 0
            assert val2(abs(area)) <= -1
    assert seen > 10


def test_rainbow_area_bound_constructed():
    rng = random.Random(12)
    for _ in range(300):
        m = rand_rational_map(rng)
        a, b, c = rand_rainbow_triangle(rng, m)
        assert is_rainbow(a, b, c, m)
        assert val2(abs(triangle_signed_area(a, b, c))) <= -1


def test_inverse_map_roundtrip():
    rng = random.Random(4)
    for _ in range(50):
        m = rand_rational_map(rng)
        p = rand_point(rng)
        assert m.inverse()(m(p)) == p
        assert m(m.inverse()(p)) == p


def test_lattice_reduction_under_integral_maps():
    rng = random.Random(5)
    for _ in range(500):
        m = rand_integral_map(rng)
        p = (rng.randint(-50, 50), rng.randint(-50, 50))
        assert color_under(m, p) == lattice_color_under(m, p)
        # the mod-2 action permutes the four residues
        assert sorted(m.on_residue(r) for r in [(0, 0), (0, 1), (1, 0), (1, 1)]) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_affine_map_validation():
    with pytest.raises(PreconditionError):
        AffineMap(((2, 0), (0, 1)))
    with pytest.raises(PreconditionError):
        AffineMap(((Fraction(1, 2), 0), (0, 2)))  # rational entries need AffineMap.rational
    m = AffineMap.rational(((Fraction(1, 2), 0), (0, 2)), (Fraction(1, 3), 0))
    assert m((2, 1)) == (Fraction(4, 3), 2)
    assert V.determinant == -1 and U.determinant == 1
    with pytest.raises(PreconditionError):
        m.on_residue((0, 1))
    with pytest.raises(NotLattice):
        lattice_color_under(E, (Fraction(1, 2), 0))
