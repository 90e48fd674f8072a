"""Bounded exhaustive search for equal-area dissections on a rational grid.

Coordinates are scaled by the grid denominator D so every vertex is an
integer point. Branching rule: take the first test point (in a fixed order)
not yet covered and try every compatible candidate triangle that covers it.
A test point is a grid point q nudged infinitesimally along a grid direction r
and then counterclockwise (see ``_kernels``). In any completion the first
uncovered test point lies in exactly one remaining piece, so each dissection
is reached along exactly one path; and whenever area remains uncovered some
test point is uncovered (take the lexicographically least vertex of a missing
piece and its clockwise-most edge), so the search is complete for its grid.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import gcd

import numpy as np

from . import _kernels
from .dissection import Dissection, equal_area_check, validate
from .errors import BudgetExceeded, PreconditionError
from .geometry import Point, Polygon, generalized_area, orient, point_in_polygon, triangle_polygon_intersection_area

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class SearchSpace:
    polygon: Polygon
    pieces: int
    denominator: int = 1
    symmetry_reduction: bool = False

    def __post_init__(self):
        if self.pieces < 1:
            raise PreconditionError("piece count must be positive")
        if self.denominator < 1:
            raise PreconditionError("grid denominator must be positive")
        if not isinstance(self.polygon, Polygon):
            object.__setattr__(self, "polygon", Polygon(tuple(self.polygon)))
        for p in self.polygon.vertices:
            for c in p:
                if (c * self.denominator).denominator != 1:
                    raise PreconditionError(
                        f"vertex {p} is not on the grid of denominator {self.denominator}")

    def scaled_vertices(self) -> list[tuple[int, int]]:
        d = self.denominator
        return [(int(p.x * d), int(p.y * d)) for p in self.polygon.vertices]

    def grid(self) -> np.ndarray:
        """Integer (scaled) grid points in the closed polygon, lexicographic."""
        verts = self.scaled_vertices()
        xs = [v[0] for v in verts]
        ys = [v[1] for v in verts]
        pts = [(x, y) for x, y in product(range(min(xs), max(xs) + 1), range(min(ys), max(ys) + 1))
               if point_in_polygon((x, y), verts) >= 0]
        return np.array(pts, dtype=np.int64).reshape(-1, 2)


@dataclass
class SearchResult:
    dissections: list
    nodes: int
    candidates: int
    complete: bool = True
    stats: dict = field(default_factory=dict)


def _direction_key(r):
    # angle order starting just after straight down, counterclockwise
    x, y = r
    half = 0 if (x > 0 or (x == 0 and y > 0)) else 1
    return (half, Fraction(y, x) if x != 0 else Fraction(10**18 if y > 0 else -10**18))


def _test_points(grid: np.ndarray, verts) -> np.ndarray:
    """Perturbed test points inside the polygon, ordered by (q, angle of r)."""
    dirs = set()
    gl = [tuple(map(int, p)) for p in grid]
    for (x1, y1), (x2, y2) in product(gl, gl):
        dx, dy = x2 - x1, y2 - y1
        if dx or dy:
            g = gcd(dx, dy)
            dirs.add((dx // g, dy // g))
    dirs = sorted(dirs, key=_direction_key)
    d = np.array(dirs, dtype=np.int64).reshape(-1, 2)
    q = np.repeat(grid, len(d), axis=0)
    r = np.tile(d, (len(grid), 1))
    tps = np.concatenate([q, r], axis=1)
    # winding number of each perturbed point from a signed fan of the polygon
    winding = np.zeros(len(tps), dtype=np.int64)
    v0 = verts[0]
    for i in range(1, len(verts) - 1):
        tri = (v0, verts[i], verts[i + 1])
        o = orient(*tri)
        if o == 0:
            continue
        if o < 0:
            tri = (tri[0], tri[2], tri[1])
        arr = np.array([c for p in tri for c in p], dtype=np.int64)
        hit = _kernels.triangle_holds_points(arr, tps)
        winding += np.where(hit, 1 if o > 0 else -1, 0)
    return tps[winding != 0]


def _candidates(space: SearchSpace, grid: np.ndarray, twice_area: int) -> np.ndarray:
    tris = _kernels.triangles_with_area(grid, twice_area)
    if space.polygon.is_convex() or len(tris) == 0:
        return tris
    verts = [Point(Fraction(x), Fraction(y)) for x, y in space.scaled_vertices()]
    keep = [i for i, t in enumerate(tris)
            if triangle_polygon_intersection_area(
                [(int(t[0]), int(t[1])), (int(t[2]), int(t[3])), (int(t[4]), int(t[5]))], verts
            ) * 2 == twice_area]
    return tris[keep]


def _symmetries(verts) -> list:
    """Lattice isometries (x,y) -> M(x,y) + t mapping the polygon onto itself."""
    edges = {frozenset((verts[i], verts[(i + 1) % len(verts)])) for i in range(len(verts))}
    out = []
    for m in ((1, 0, 0, 1), (-1, 0, 0, 1), (1, 0, 0, -1), (-1, 0, 0, -1),
              (0, 1, 1, 0), (0, -1, 1, 0), (0, 1, -1, 0), (0, -1, -1, 0)):
        a, b, c, d = m
        img0 = (a * verts[0][0] + b * verts[0][1], c * verts[0][0] + d * verts[0][1])
        for target in verts:
            t = (target[0] - img0[0], target[1] - img0[1])

            def f(p, a=a, b=b, c=c, d=d, t=t):
                return (a * p[0] + b * p[1] + t[0], c * p[0] + d * p[1] + t[1])

            mapped = {frozenset(map(f, e)) for e in edges}
            if mapped == edges:
                out.append(f)
    return out


def _key(tris_int) -> tuple:
    return tuple(sorted(tuple(sorted(((t[0], t[1]), (t[2], t[3]), (t[4], t[5])))) for t in tris_int))


def enumerate_equidissections(space: SearchSpace, budget: int = DEFAULT_BUDGET,
                              first_only: bool = False) -> SearchResult:
    """All equal-area dissections into ``space.pieces`` triangles with grid vertices.

    Raises BudgetExceeded (carrying the partial list) when more than ``budget``
    triangle placements would be needed to finish.
    """
    D = space.denominator
    n = space.pieces
    verts = space.scaled_vertices()
    twice_total = abs(generalized_area(verts)) * 2
    stats = {"backend": _kernels.BACKEND}
    if twice_total % n:
        # piece area is not a multiple of the grid's half-unit: nothing to find
        return SearchResult([], 0, 0, True, stats)
    twice_area = int(twice_total // n)

    grid = space.grid()
    tris = _candidates(space, grid, twice_area)
    tps = _test_points(grid, verts)
    stats.update(grid=len(grid), testPoints=len(tps))
    found: list[tuple] = []
    nodes = 0
    contains_cache: dict[int, np.ndarray] = {}

    def candidates_at(k: int) -> np.ndarray:
        hit = contains_cache.get(k)
        if hit is None:
            q = tps[k]
            hit = np.flatnonzero(_kernels.perturbed_in_triangles(tris, q[0], q[1], q[2], q[3]))
            contains_cache[k] = hit
        return hit

    def covered(k: int, chosen: list[int]) -> bool:
        if not chosen:
            return False
        q = tps[k]
        return bool(_kernels.perturbed_in_triangles(tris[chosen], q[0], q[1], q[2], q[3]).any())

    def dfs(chosen: list[int], alive: np.ndarray, start: int) -> bool:
        nonlocal nodes
        if len(chosen) == n:
            found.append(tuple(chosen))
            return first_only
        k = start
        while k < len(tps) and covered(k, chosen):
            k += 1
        if k == len(tps):
            raise AssertionError("area left uncovered but every test point is covered")
        for c in candidates_at(k):
            if not alive[c]:
                continue
            nodes += 1
            if nodes > budget:
                raise _Stop
            chosen.append(int(c))
            if dfs(chosen, alive & _kernels.disjoint_from(tris, tris[c]), k + 1):
                return True
            chosen.pop()
        return False

    complete = True
    try:
        if len(tris):
            dfs([], np.ones(len(tris), dtype=np.bool_), 0)
    except _Stop:
        complete = False

    ints = [[tuple(int(v) for v in tris[c]) for c in combo] for combo in found]
    if space.symmetry_reduction:
        syms = _symmetries(verts)
        reduced = []
        for combo in ints:
            k0 = _key(combo)
            orbit = [_key([tuple(c for p in (f(t[0:2]), f(t[2:4]), f(t[4:6])) for c in p)
                           for t in combo]) for f in syms]
            if k0 == min(orbit):
                reduced.append(combo)
        ints = reduced
    ints.sort(key=_key)
    scale = Fraction(1, D)
    dissections = [
        Dissection(space.polygon, tuple(
            tuple(Point(Fraction(t[2 * v]) * scale, Fraction(t[2 * v + 1]) * scale) for v in range(3))
            for t in combo))
        for combo in ints
    ]
    for d in dissections:
        verdict = validate(d)
        if not verdict.ok:
            raise AssertionError(f"search produced an invalid dissection: {verdict}")
        equal_area_check(d)
    stats.update(candidates=len(tris))
    result = SearchResult(dissections, nodes, len(tris), complete, stats)
    if not complete:
        raise BudgetExceeded(f"node budget {budget} exhausted", dissections, nodes)
    return result


class _Stop(Exception):
    pass
