import random
from fractions import Fraction

import pytest

from equidissect.balanced import (
    apply_permutation,
    certify,
    pair_edges,
    parallelogram_class,
    random_balanced_polygon,
    side_vectors,
    swap_parallelogram,
    transposition,
    transposition_class_delta,
)
from equidissect.cycles import ODD_PARALLELOGRAM_CLASSES, class_of_lattice_line, decompose_mu
from equidissect.errors import NotLattice, NotParallelogram
from equidissect.geometry import Polygon, generalized_area, wedge

SQ = ((0, 0), (1, 0), (1, 1), (0, 1))
HEX = ((0, 0), (2, 0), (3, 1), (3, 2), (1, 2), (0, 1))


def test_pair_edges_examples():
    assert pair_edges(Polygon(SQ)).pairs == ((1, 3), (2, 4))
    assert pair_edges(Polygon(((0, 0), (1, 0), (0, 1)))) is None
    pairing = pair_edges(Polygon(HEX))
    vs = side_vectors(HEX)
    assert [vs[a - 1] for a, _ in pairing.pairs] == [(2, 0), (1, 1), (0, 1)]
    for a, b in pairing.pairs:
        assert vs[b - 1] == -vs[a - 1]


def test_pair_edges_iff_symmetric_multiset():
    rng = random.Random(1)
    for _ in range(300):
        n = rng.randint(3, 8)
        vs = [(rng.randint(-2, 2), rng.randint(-2, 2)) for _ in range(n)]
        pts = [(0, 0)]
        for v in vs[:-1]:
            pts.append((pts[-1][0] + v[0], pts[-1][1] + v[1]))
        closing = (-sum(v[0] for v in vs[:-1]), -sum(v[1] for v in vs[:-1]))
        sides = vs[:-1] + [closing]
        symmetric = sorted(sides) == sorted((-x, -y) for x, y in sides)
        if any(s == (0, 0) for s in sides):
            continue
        result = pair_edges(pts)
        assert (result is not None) == symmetric
        if result is not None:
            got = side_vectors(pts)
            assert all(got[b - 1] == -got[a - 1] for a, b in result.pairs)


def test_identity_permutation():
    assert apply_permutation(HEX, [1, 2, 3, 4, 5, 6]).vertices == tuple(Polygon(HEX).vertices)


def test_transposition_on_unit_square():
    swapped = apply_permutation(SQ, transposition(4, 1))
    assert swapped.vertices == ((0, 0), (0, 1), (1, 1), (0, 1))
    v1, v2 = side_vectors(SQ)[:2]
    assert generalized_area(SQ) == 1
    assert generalized_area(swapped.vertices) == 0
    # counterclockwise-positive area gains v2 ^ v1 = -1; measured clockwise it loses it
    assert generalized_area(swapped.vertices) == generalized_area(SQ) + wedge(v2, v1)
    assert -generalized_area(swapped.vertices) == -generalized_area(SQ) - wedge(v2, v1)


def test_sorting_permutation_kills_area_and_class():
    for verts in (SQ, HEX):
        sigma = pair_edges(verts).sorting_permutation()
        sorted_line = apply_permutation(verts, sigma)
        assert generalized_area(sorted_line.vertices) == 0
        assert class_of_lattice_line(sorted_line.vertices) == (0, 0, 0)


def test_transposition_class_delta_examples():
    straight = ((0, 0), (1, 0), (2, 0), (2, 1), (0, 1))
    assert transposition_class_delta(straight, 1) == (0, 0, 0)
    delta = transposition_class_delta(SQ, 1)
    assert delta == class_of_lattice_line(swap_parallelogram(SQ, 1))
    assert delta == class_of_lattice_line(SQ) - class_of_lattice_line(apply_permutation(SQ, [2, 1, 3, 4]).vertices)
    doubled = ((0, 0), (4, 0), (6, 2), (2, 4))
    assert transposition_class_delta(doubled, 2) == (0, 0, 0)
    with pytest.raises(NotLattice):
        transposition_class_delta(((0, 0), (Fraction(1, 2), 0), (0, 1)), 1)


def test_parallelogram_class_examples():
    assert parallelogram_class(SQ) in ODD_PARALLELOGRAM_CLASSES
    assert parallelogram_class(((0, 0), (2, 0), (2, 1), (0, 1))) == (0, 0, 0)
    assert parallelogram_class(((0, 0), (1, 0), (2, 1), (1, 1))) in ODD_PARALLELOGRAM_CLASSES
    with pytest.raises(NotParallelogram):
        parallelogram_class(((0, 0), (2, 0), (2, 1), (0, 2)))


@pytest.mark.parametrize("verts, conclusion, reason", [
    (SQ, "NoOddEquidissection", None),
    (HEX, "NoOddEquidissection", None),
    (((0, 0), (2, 0), (2, 1), (0, 1)), "NotApplicable", "evenArea"),
    (((0, 0), (1, 0), (0, 1)), "NotApplicable", "unbalanced"),
    (((0, 0), (Fraction(1, 2), 0), (Fraction(1, 2), Fraction(1, 2)), (0, Fraction(1, 2))),
     "NotApplicable", "notLattice"),
])
def test_certify_examples(verts, conclusion, reason):
    c = certify(Polygon(verts))
    assert c.conclusion == conclusion and c.reason == reason


def test_certify_hexagon_fields():
    c = certify(Polygon(HEX))
    assert c.area == 5 and c.is_lattice
    assert c.mu.recompose() == c.class_lambda
    assert sum(c.mu) % 2 == 1
    assert "Theorem 2" in c.trace_refs


def test_random_balanced_polygons_satisfy_parity():
    rng = random.Random(21)
    made = 0
    for _ in range(60):
        P = random_balanced_polygon(rng, pairs=rng.randint(2, 4))
        if P is None:
            continue
        made += 1
        assert pair_edges(P) is not None
        mu = decompose_mu(class_of_lattice_line(P.vertices))
        assert (abs(P.area()) - sum(mu)) % 2 == 0
        c = certify(P)
        if c.conclusion == "NoOddEquidissection":
            assert not c.class_lambda.is_zero()
        else:
            assert c.reason == "evenArea"
    assert made >= 50
