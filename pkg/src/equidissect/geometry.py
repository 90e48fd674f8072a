"""Exact planar geometry over Fractions.

Sign convention: a counterclockwise boundary has positive area.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .dyadic import RationalLike, rational
from .errors import PreconditionError


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    def __add__(self, v):  # Point + Vector
        return Point(self.x + v[0], self.y + v[1])

    def __sub__(self, other):  # Point - Point
        return Vector(self.x - other[0], self.y - other[1])


class Vector(NamedTuple):
    dx: Fraction
    dy: Fraction

    def __neg__(self):
        return Vector(-self.dx, -self.dy)

    def __add__(self, other):
        return Vector(self.dx + other[0], self.dy + other[1])

    def scale(self, k) -> "Vector":
        return Vector(self.dx * k, self.dy * k)


Triangle = tuple  # (Point, Point, Point)


def point(x: RationalLike, y: RationalLike) -> Point:
    return Point(rational(x), rational(y))


def as_point(p) -> Point:
    if isinstance(p, Point):
        return p
    x, y = p
    return point(x, y)


def as_triangle(t) -> tuple[Point, Point, Point]:
    a, b, c = t
    return (as_point(a), as_point(b), as_point(c))


def wedge(v, w) -> Fraction:
    return v[0] * w[1] - v[1] * w[0]


def orient(a, b, c) -> Fraction:
    """Twice the signed area of abc; > 0 when counterclockwise."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def triangle_signed_area(p1, p2, p3) -> Fraction:
    return Fraction(orient(p1, p2, p3)) / 2


def generalized_area(vertices: Sequence) -> Fraction:
    """Half the cyclic sum of O L_i ^ O L_{i+1}; valid for self-intersecting lines."""
    n = len(vertices)
    total = Fraction(0)
    for i in range(n):
        total += wedge(vertices[i], vertices[(i + 1) % n])
    return total / 2


@dataclass(frozen=True)
class BrokenLine:
    """Closed broken line L_1 ... L_n; the edge L_n -> L_1 is implicit."""

    vertices: tuple

    def __post_init__(self):
        verts = tuple(as_point(p) for p in self.vertices)
        if not verts:
            raise PreconditionError("a broken line needs at least one vertex")
        object.__setattr__(self, "vertices", verts)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]

    def side_vectors(self) -> list[Vector]:
        n = len(self.vertices)
        return [self.vertices[(i + 1) % n] - self.vertices[i] for i in range(n)]

    def area(self) -> Fraction:
        return generalized_area(self.vertices)

    def reversed(self) -> "BrokenLine":
        return BrokenLine(self.vertices[::-1])

    def is_lattice(self) -> bool:
        return all(c.denominator == 1 for p in self.vertices for c in p)


class Polygon(BrokenLine):
    """Simple closed polygon. Construction fails on self-intersection."""

    def __post_init__(self):
        super().__post_init__()
        reason = simplicity_violation(self.vertices)
        if reason:
            raise PreconditionError(f"polygon is not simple: {reason}")

    @property
    def boundary(self) -> BrokenLine:
        return BrokenLine(self.vertices)

    def edges(self):
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def contains(self, p) -> bool:
        """Closed containment (boundary counts as inside)."""
        return point_in_polygon(p, self.vertices) >= 0

    def is_convex(self) -> bool:
        verts = self.vertices
        n = len(verts)
        sign = 1 if generalized_area(verts) > 0 else -1
        return all(
            orient(verts[i], verts[(i + 1) % n], verts[(i + 2) % n]) * sign >= 0
            for i in range(n)
        )


def on_segment(p, a, b) -> bool:
    """p lies on the closed segment ab."""
    if orient(a, b, p) != 0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def segments_intersect(a, b, c, d) -> bool:
    """Closed segments ab and cd share at least one point."""
    d1, d2 = orient(c, d, a), orient(c, d, b)
    d3, d4 = orient(a, b, c), orient(a, b, d)
    if ((d1 > 0 > d2) or (d1 < 0 < d2)) and ((d3 > 0 > d4) or (d3 < 0 < d4)):
        return True
    return (on_segment(a, c, d) or on_segment(b, c, d)
            or on_segment(c, a, b) or on_segment(d, a, b))


def simplicity_violation(vertices: Sequence) -> str | None:
    n = len(vertices)
    if n < 3:
        return "fewer than 3 vertices"
    for i in range(n):
        if vertices[i] == vertices[(i + 1) % n]:
            return f"repeated consecutive vertex at index {i}"
    if generalized_area(vertices) == 0:
        return "zero area"
    for i in range(n):
        a, b, c = vertices[i - 1], vertices[i], vertices[(i + 1) % n]
        u, v = b - a, c - b
        if wedge(u, v) == 0 and u[0] * v[0] + u[1] * v[1] < 0:
            return f"edges meeting at vertex {i} fold back"
    for i in range(n):
        a, b = vertices[i], vertices[(i + 1) % n]
        for j in range(i + 1, n):
            c, d = vertices[j], vertices[(j + 1) % n]
            if j == i + 1 or (i == 0 and j == n - 1):
                continue
            if segments_intersect(a, b, c, d):
                return f"edges {i} and {j} intersect"
    return None


def point_in_polygon(p, vertices: Sequence) -> int:
    """1 inside, 0 on the boundary, -1 outside (crossing-number test)."""
    n = len(vertices)
    inside = False
    for i in range(n):
        a, b = vertices[i], vertices[(i + 1) % n]
        if on_segment(p, a, b):
            return 0
        if (a[1] > p[1]) != (b[1] > p[1]):
            # x-coordinate of the crossing, compared exactly
            cross = orient(a, b, p)
            if (cross > 0) == (b[1] > a[1]):
                inside = not inside
    return 1 if inside else -1


def ccw(poly: Sequence) -> list:
    poly = list(poly)
    if generalized_area(poly) < 0:
        poly.reverse()
    return poly


def _line_cross(p, q, a, b) -> Point:
    # intersection of segment pq with the line through ab; caller guarantees a crossing
    op, oq = orient(a, b, p), orient(a, b, q)
    t = op / (op - oq)
    return Point(p[0] + (q[0] - p[0]) * t, p[1] + (q[1] - p[1]) * t)


def clip_convex(subject: Sequence, clip: Sequence) -> list:
    """Sutherland-Hodgman: subject polygon clipped by a convex ccw polygon."""
    output = list(subject)
    m = len(clip)
    for i in range(m):
        if not output:
            break
        a, b = clip[i], clip[(i + 1) % m]
        source, output = output, []
        k = len(source)
        for j in range(k):
            p, q = source[j], source[(j + 1) % k]
            op, oq = orient(a, b, p), orient(a, b, q)
            if op >= 0:
                output.append(p)
                if oq < 0 and op > 0:
                    output.append(_line_cross(p, q, a, b))
            elif oq > 0:
                output.append(_line_cross(p, q, a, b))
    return output


def convex_intersection_area(poly1: Sequence, poly2: Sequence) -> Fraction:
    """Area of the intersection of two convex polygons (either orientation)."""
    p1, p2 = ccw(poly1), ccw(poly2)
    if generalized_area(p1) == 0 or generalized_area(p2) == 0:
        return Fraction(0)
    piece = clip_convex(p1, p2)
    if len(piece) < 3:
        return Fraction(0)
    return generalized_area(piece)


def triangle_polygon_intersection_area(t, polygon) -> Fraction:
    """Exact area of triangle t intersected with a simple polygon.

    The polygon is fan-decomposed into signed triangles from its first vertex;
    their signed indicators sum to the polygon's indicator.
    """
    verts = polygon.vertices if isinstance(polygon, BrokenLine) else [as_point(p) for p in polygon]
    t = as_triangle(t)
    if orient(*t) == 0:
        return Fraction(0)
    sign = 1 if generalized_area(verts) > 0 else -1
    total = Fraction(0)
    v0 = verts[0]
    for i in range(1, len(verts) - 1):
        fan = (v0, verts[i], verts[i + 1])
        o = orient(*fan)
        if o == 0:
            continue
        part = convex_intersection_area(t, fan)
        total += part if o > 0 else -part
    return total * sign


def triangles_interior_disjoint(t1, t2) -> bool:
    return convex_intersection_area(as_triangle(t1), as_triangle(t2)) == 0


def triangulate(polygon) -> list[tuple]:
    """Ear-clipping triangulation of a simple polygon, triangles ccw."""
    verts = ccw(polygon.vertices if isinstance(polygon, BrokenLine) else polygon)
    idx = list(range(len(verts)))
    out = []
    while len(idx) > 3:
        m = len(idx)
        for k in range(m):
            a, b, c = verts[idx[k - 1]], verts[idx[k]], verts[idx[(k + 1) % m]]
            if orient(a, b, c) <= 0:
                continue
            blocked = False
            for j in idx:
                p = verts[j]
                if p in (a, b, c):
                    continue
                if orient(a, b, p) >= 0 and orient(b, c, p) >= 0 and orient(c, a, p) >= 0:
                    blocked = True
                    break
            if not blocked:
                out.append((a, b, c))
                del idx[k]
                break
        else:
            # only collinear vertices left to clip; remove one straight vertex
            for k in range(m):
                a, b, c = verts[idx[k - 1]], verts[idx[k]], verts[idx[(k + 1) % m]]
                if orient(a, b, c) == 0:
                    del idx[k]
                    break
            else:
                raise PreconditionError("ear clipping failed; polygon not simple?")
    a, b, c = (verts[i] for i in idx)
    if orient(a, b, c) != 0:
        out.append((a, b, c))
    return out
