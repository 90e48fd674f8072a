"""Cuts of a polygon into triangles: exact validation and the Lemma 2 check."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .coloring import AffineMap, E
from .cycles import degree_of_line
from .dyadic import INF, val2
from .errors import PreconditionError, UnequalAreas
from .geometry import (
    Polygon,
    as_triangle,
    convex_intersection_area,
    generalized_area,
    on_segment,
    orient,
    triangle_polygon_intersection_area,
)


@dataclass(frozen=True)
class Dissection:
    polygon: Polygon
    triangles: tuple

    def __post_init__(self):
        if not isinstance(self.polygon, Polygon):
            object.__setattr__(self, "polygon", Polygon(tuple(self.polygon)))
        object.__setattr__(self, "triangles", tuple(as_triangle(t) for t in self.triangles))

    def areas(self) -> list[Fraction]:
        return [abs(orient(*t)) / 2 for t in self.triangles]

    def key(self) -> tuple:
        """Order-free identity: each triangle's vertices sorted, then the list sorted."""
        return tuple(sorted(tuple(sorted(t)) for t in self.triangles))


@dataclass(frozen=True)
class Verdict:
    kind: str  # OK | DegenerateTriangle | OverlappingInteriors | TriangleOutsidePolygon | AreaMismatch
    indices: tuple = ()
    detail: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.kind == "OK"


OK = Verdict("OK")


def _bbox(t):
    xs = [p[0] for p in t]
    ys = [p[1] for p in t]
    return min(xs), max(xs), min(ys), max(ys)


def _boxes_overlap(b1, b2) -> bool:
    return b1[0] < b2[1] and b2[0] < b1[1] and b1[2] < b2[3] and b2[2] < b1[3]


def validate(d: Dissection) -> Verdict:
    """First violated condition, in this order: degenerate piece, overlapping
    interiors, piece leaving the polygon, total area mismatch."""
    tris = d.triangles
    for i, t in enumerate(tris):
        if orient(*t) == 0:
            return Verdict("DegenerateTriangle", (i,))
    boxes = [_bbox(t) for t in tris]
    for i, j in combinations(range(len(tris)), 2):
        if not _boxes_overlap(boxes[i], boxes[j]):
            continue
        overlap = convex_intersection_area(tris[i], tris[j])
        if overlap != 0:
            return Verdict("OverlappingInteriors", (i, j), {"overlapArea": overlap})
    for i, t in enumerate(tris):
        area = abs(orient(*t)) / 2
        inside = triangle_polygon_intersection_area(t, d.polygon)
        if inside != area:
            return Verdict("TriangleOutsidePolygon", (i,),
                           {"triangleArea": area, "areaInside": inside})
    total = sum(d.areas(), Fraction(0))
    target = abs(generalized_area(d.polygon.vertices))
    if total != target:
        return Verdict("AreaMismatch", (), {"sum": total, "polygonArea": target})
    return OK


def equal_area_check(d: Dissection) -> Fraction:
    areas = d.areas()
    distinct = sorted(set(areas))
    if len(distinct) != 1:
        raise UnequalAreas(f"{len(distinct)} distinct triangle areas", distinct)
    return distinct[0]


def subdivided_boundary(polygon: Polygon, extra_points) -> list:
    """Polygon boundary with every extra point lying on an edge inserted in order."""
    pts = set(extra_points)
    out = []
    for a, b in polygon.edges():
        out.append(a)
        inner = [p for p in pts if p != a and p != b and on_segment(p, a, b)]
        # order along the edge by the dominant coordinate
        key = (lambda p: p[0]) if a[0] != b[0] else (lambda p: p[1])
        inner.sort(key=key, reverse=key(a) > key(b))
        out.extend(inner)
    return out


@dataclass(frozen=True)
class Lemma2Report:
    status: str  # PASS | HypothesisNotMet | FAIL
    degree: int | None
    valuations: tuple
    offending: tuple = ()
    boundary: tuple = ()


def lemma2_degree_check(d: Dissection, affine: AffineMap = None) -> Lemma2Report:
    """If every piece has area of valuation >= 0, the subdivided boundary has degree 0.

    FAIL would mean a counterexample to the lemma, i.e. a bug somewhere.
    """
    affine = affine or E
    verdict = validate(d)
    if not verdict.ok:
        raise PreconditionError(f"dissection is invalid: {verdict.kind} {verdict.indices}")
    vals = tuple(val2(a) for a in d.areas())
    offending = tuple(i for i, v in enumerate(vals) if v is not INF and v < 0)
    if offending:
        return Lemma2Report("HypothesisNotMet", None, vals, offending)
    corners = {p for t in d.triangles for p in t}
    boundary = subdivided_boundary(d.polygon, corners)
    deg = degree_of_line(boundary, affine)
    return Lemma2Report("PASS" if deg == 0 else "FAIL", deg, vals, (), tuple(boundary))

