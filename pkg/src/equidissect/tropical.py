"""Momentum maps built from 2-adic valuations.

``momentum_p2`` sends [x:y:z] to the triangle T = conv{(1,0), (0,1), (0,0)}
with barycentric weights proportional to 2**-v2(x), 2**-v2(y), 2**-v2(z).
The image of the line x+y+z=0 is a tripod that cuts T into three regions;
reading a point's color off the region of its image reproduces ``color``.
"""

from __future__ import annotations

import csv
import functools
import io
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .coloring import Color, color
from .dyadic import dyadic_weight, format_rational, format_valuation, rational, val2
from .errors import PreconditionError, ZeroCoordinate
from .geometry import Point, point_in_polygon

T_VERTICES = (Point(Fraction(1), Fraction(0)), Point(Fraction(0), Fraction(1)),
              Point(Fraction(0), Fraction(0)))


@dataclass(frozen=True)
class ProjectivePoint:
    x: Fraction
    y: Fraction
    z: Fraction

    def __post_init__(self):
        coords = [rational(c) for c in (self.x, self.y, self.z)]
        lead = next((c for c in coords if c != 0), None)
        if lead is None:
            raise PreconditionError("[0:0:0] is not a projective point")
        for name, c in zip("xyz", coords):
            object.__setattr__(self, name, c / lead)

    def __iter__(self):
        return iter((self.x, self.y, self.z))

    def __str__(self) -> str:
        return "[" + ":".join(format_rational(c) for c in self) + "]"


@dataclass(frozen=True)
class MomentumImage:
    weights: tuple  # normalized barycentric weights on (1,0), (0,1), (0,0)

    @property
    def point(self) -> Point:
        return Point(self.weights[0], self.weights[1])


def momentum_p2(p) -> MomentumImage:
    if not isinstance(p, ProjectivePoint):
        p = ProjectivePoint(*p)
    raw = [dyadic_weight(val2(c)) for c in p]
    total = sum(raw)
    return MomentumImage(tuple(w / total for w in raw))


def momentum_torus(x, y) -> tuple[int, int]:
    x, y = rational(x), rational(y)
    if x == 0 or y == 0:
        raise ZeroCoordinate(f"({x}, {y}) is not on the torus Q* x Q*")
    return (val2(x), val2(y))


def calkin_wilf() -> Iterator[Fraction]:
    """0, 1, -1, 1/2, -1/2, 2, -2, ...: every rational exactly once."""
    yield Fraction(0)
    q = Fraction(1)
    while True:
        yield q
        yield -q
        q = 1 / (2 * (q.numerator // q.denominator) - q + 1)


def line_points(a, b, c, count: int) -> list[ProjectivePoint]:
    """``count`` distinct rational points of the line ax + by + cz = 0."""
    coef = [rational(v) for v in (a, b, c)]
    if all(v == 0 for v in coef):
        raise PreconditionError("(a, b, c) = 0 does not define a line")
    k = max(i for i in range(3) if coef[i] != 0)
    basis = []
    for i in range(3):
        if i == k:
            continue
        e = [Fraction(0)] * 3
        e[i], e[k] = coef[k], -coef[i]
        basis.append(e)
    p0, p1 = basis
    out = [ProjectivePoint(*p1)]
    for t in calkin_wilf():
        if len(out) >= count:
            break
        out.append(ProjectivePoint(*(u + t * v for u, v in zip(p0, p1))))
    return out[:count]


def sample_line_image(a, b, c, count: int) -> list[MomentumImage]:
    return [momentum_p2(p) for p in line_points(a, b, c, count)]


def _ratio(u: Fraction, v: Fraction) -> tuple:
    # projective ratio [u:v] as a hashable canonical pair
    if u == 0:
        return (Fraction(0), Fraction(1))
    return (Fraction(1), v / u)


def _on_cevian(vtx: int, ratio: tuple, img: MomentumImage) -> bool:
    u, v = (img.weights[i] for i in range(3) if i != vtx)
    return u * ratio[1] == v * ratio[0]


def _ratios_through(c: Point) -> list[tuple] | None:
    w = (c.x, c.y, 1 - c.x - c.y)
    out = []
    for vtx in range(3):
        u, v = (w[i] for i in range(3) if i != vtx)
        if u == 0 and v == 0:
            return None
        out.append(_ratio(u, v))
    return out


def _intersect(p: Point, q: Point, r: Point, s: Point) -> Point | None:
    d1, d2 = q - p, s - r
    den = d1[0] * d2[1] - d1[1] * d2[0]
    if den == 0:
        return None
    t = ((r[0] - p[0]) * d2[1] - (r[1] - p[1]) * d2[0]) / den
    return Point(p[0] + t * d1[0], p[1] + t * d1[1])


def cevian_families(images: Sequence[MomentumImage]) -> list[tuple[int, tuple, set]]:
    """The three concurrent cevians (one through each vertex of T) covering
    the most images, as (vertex index, ratio of the other two weights, members).

    Images repeat heavily (they depend only on valuations), so the largest
    group through one vertex can be a cluster sitting on another leg; fitting
    all three lines through a common center avoids that.
    """
    distinct = sorted({img.point for img in images})
    lines = []
    for vtx in range(3):
        for p in distinct:
            if p != T_VERTICES[vtx]:
                lines.append((T_VERTICES[vtx], p))
    candidates = set(distinct)
    for (a, b), (c, d) in combinations(lines, 2):
        if a != c:
            x = _intersect(a, b, c, d)
            if x is not None and x.x >= 0 and x.y >= 0 and x.x + x.y <= 1:
                candidates.add(x)
    best = None
    for c in sorted(candidates):
        ratios = _ratios_through(c)
        if ratios is None:
            continue
        fams = [(vtx, ratios[vtx], {n for n, img in enumerate(images) if _on_cevian(vtx, ratios[vtx], img)})
                for vtx in range(3)]
        score = len(set().union(*(m for _, _, m in fams)))
        if best is None or score > best[0]:
            best = (score, fams)
    return [] if best is None else best[1]


def _cevian_foot(vtx: int, ratio: tuple) -> Point:
    w = [Fraction(0)] * 3
    others = [i for i in range(3) if i != vtx]
    w[others[0]], w[others[1]] = ratio
    s = sum(w)
    return Point(w[0] / s, w[1] / s)


def tripod_center(images: Sequence[MomentumImage]) -> Point | None:
    """Common point of the three cevian families found in the data."""
    fams = cevian_families(images)
    if len(fams) < 3:
        return None
    (v0, r0, _), (v1, r1, _) = fams[:2]
    return _intersect(T_VERTICES[v0], _cevian_foot(v0, r0), T_VERTICES[v1], _cevian_foot(v1, r1))


@dataclass(frozen=True)
class Tripod:
    center: Point
    feet: tuple  # foot of the cevian through each vertex of T, on the opposite side

    def regions(self) -> tuple:
        """Closed quadrilaterals around each vertex of T, in vertex order."""
        fx, fy, fz = self.feet
        vx, vy, vz = T_VERTICES
        c = self.center
        return ((vx, fz, c, fy), (vy, fx, c, fz), (vz, fy, c, fx))

    def region_of(self, p: Point) -> int:
        # a boundary point goes to the first region (in vertex order) holding it
        for k, quad in enumerate(self.regions()):
            if point_in_polygon(p, quad) >= 0:
                return k
        raise AssertionError(f"{p} is outside T")


@functools.lru_cache(maxsize=None)
def reference_tripod(samples: int = 200) -> Tripod:
    """Tripod of x+y+z=0, reconstructed from sampled images."""
    images = sample_line_image(1, 1, 1, samples)
    fams = cevian_families(images)
    center = tripod_center(images)
    if center is None:
        raise AssertionError("image of x+y+z=0 is not a tripod")
    feet = tuple(_cevian_foot(v, r) for v, r, _ in sorted(fams))
    return Tripod(center, feet)


@functools.lru_cache(maxsize=None)
def region_colors() -> tuple:
    """Color of each region, read off the lattice points (0,0), (0,1), (1,0)."""
    tripod = reference_tripod()
    table = {}
    for rep in ((0, 0), (0, 1), (1, 0)):
        k = tripod.region_of(momentum_p2((rep[0], rep[1], 1)).point)
        table[k] = color(rep)
    if len(table) != 3:
        raise AssertionError(f"lattice representatives share a region: {table}")
    return tuple(table[k] for k in range(3))


def momentum_color(p) -> Color:
    x, y = rational(p[0]), rational(p[1])
    k = reference_tripod().region_of(momentum_p2((x, y, 1)).point)
    return region_colors()[k]


def chart_agreement(p) -> bool:
    return momentum_color(p) == color(p)


def momentum_csv(points: Iterable, torus: bool = False) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["input", "weights", "image-x", "image-y"])
    for p in points:
        if torus:
            vx, vy = momentum_torus(*p)
            label = f"({format_rational(rational(p[0]))},{format_rational(rational(p[1]))})"
            writer.writerow([label, f"{vx};{vy}", format_valuation(vx), format_valuation(vy)])
        else:
            pp = p if isinstance(p, ProjectivePoint) else ProjectivePoint(*p)
            img = momentum_p2(pp)
            writer.writerow([str(pp), ";".join(format_rational(w) for w in img.weights),
                             format_rational(img.point.x), format_rational(img.point.y)])
    return buf.getvalue()


def momentum_svg(images: Sequence[MomentumImage], size: int = 400) -> str:
    """Scatter of images over T with the three-region overlay of x+y+z=0."""
    pad = 20

    def xy(p):
        return (pad + float(p[0]) * size, pad + (1 - float(p[1])) * size)

    fills = {Color.A: "#f4d58d", Color.B: "#8fb8de", Color.C: "#c6e2b5"}
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size + 2 * pad}" '
             f'height="{size + 2 * pad}">']
    tripod = reference_tripod()
    for quad, col in zip(tripod.regions(), region_colors()):
        pts = " ".join(f"{a:.4f},{b:.4f}" for a, b in map(xy, quad))
        parts.append(f'<polygon points="{pts}" fill="{fills[col]}" stroke="#555" '
                     f'stroke-width="0.5"><title>{col}</title></polygon>')
    for img in images:
        a, b = xy(img.point)
        parts.append(f'<circle cx="{a:.4f}" cy="{b:.4f}" r="2" fill="#222"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def family_coverage(images: Sequence[MomentumImage]) -> int:
    """How many images lie on one of the three dominant cevian families."""
    covered = set()
    for _, _, members in cevian_families(images):
        covered |= members
    return len(covered)

