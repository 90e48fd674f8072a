"""Integer kernels for the equidissection search.

Triangles are int64 rows (ax, ay, bx, by, cx, cy), counterclockwise. A
"perturbed point" (qx, qy, rx, ry) stands for q + e*r + e^2*rot90(r) with
e -> 0+; it never lies on a line through two lattice points, so containment
is always strict.

Backend: numba when importable, else numpy. Set EQUIDISSECT_KERNELS=numpy to
force the fallback; results are identical, only speed differs.
"""

from __future__ import annotations

import logging
import os

import numpy as np

log = logging.getLogger(__name__)

_requested = os.environ.get("EQUIDISSECT_KERNELS", "numba").strip().lower()
if _requested not in ("numba", "numpy"):
    raise ImportError(f"EQUIDISSECT_KERNELS must be 'numba' or 'numpy', got {_requested!r}")

try:
    if _requested != "numba":
        raise ImportError("numpy backend requested")
    from numba import njit
except ImportError as exc:
    if _requested == "numba":
        log.warning("numba unavailable (%s); using numpy kernels", exc)
    BACKEND = "numpy"
else:
    BACKEND = "numba"


# -- numpy implementations -------------------------------------------------

def _np_side(ax, ay, bx, by, qx, qy, rx, ry):
    wx, wy = bx - ax, by - ay
    o = wx * (qy - ay) - wy * (qx - ax)
    o1 = wx * ry - wy * rx
    o2 = wx * rx + wy * ry
    return np.where(o != 0, o, np.where(o1 != 0, o1, o2))


def _np_contains(tris, qx, qy, rx, ry):
    ax, ay, bx, by, cx, cy = (tris[..., k] for k in range(6))
    return ((_np_side(ax, ay, bx, by, qx, qy, rx, ry) > 0)
            & (_np_side(bx, by, cx, cy, qx, qy, rx, ry) > 0)
            & (_np_side(cx, cy, ax, ay, qx, qy, rx, ry) > 0))


def np_perturbed_in_triangles(tris, qx, qy, rx, ry):
    return _np_contains(tris, qx, qy, rx, ry)


def np_triangle_holds_points(tri, pts):
    return _np_contains(tri[None, :], pts[:, 0], pts[:, 1], pts[:, 2], pts[:, 3])


def _np_separated_by_edges(t, others):
    # True where some edge of t has all of ``others``' corners on its closed outer side
    sep = np.zeros(len(others), dtype=np.bool_)
    for e in range(3):
        ax, ay = t[2 * e], t[2 * e + 1]
        bx, by = t[(2 * e + 2) % 6], t[(2 * e + 3) % 6]
        wx, wy = bx - ax, by - ay
        out = np.ones(len(others), dtype=np.bool_)
        for v in range(3):
            px, py = others[:, 2 * v], others[:, 2 * v + 1]
            out &= (wx * (py - ay) - wy * (px - ax)) <= 0
        sep |= out
    return sep


def np_disjoint_from(tris, t):
    """Interiors of each row of ``tris`` and ``t`` are disjoint (separating axis)."""
    sep = _np_separated_by_edges(t, tris)
    for e in range(3):
        ax, ay = tris[:, 2 * e], tris[:, 2 * e + 1]
        bx, by = tris[:, (2 * e + 2) % 6], tris[:, (2 * e + 3) % 6]
        wx, wy = bx - ax, by - ay
        out = np.ones(len(tris), dtype=np.bool_)
        for v in range(3):
            px, py = t[2 * v], t[2 * v + 1]
            out &= (wx * (py - ay) - wy * (px - ax)) <= 0
        sep |= out
    return sep


def np_triangles_with_area(pts, twice_area):
    """All ccw triangles on ``pts`` (n x 2) whose doubled area equals ``twice_area``."""
    n = len(pts)
    rows = []
    for i in range(n - 2):
        j, k = np.triu_indices(n - i - 1, k=1)
        j = j + i + 1
        k = k + i + 1
        o = ((pts[j, 0] - pts[i, 0]) * (pts[k, 1] - pts[i, 1])
             - (pts[j, 1] - pts[i, 1]) * (pts[k, 0] - pts[i, 0]))
        hit = np.abs(o) == twice_area
        if not hit.any():
            continue
        j, k, o = j[hit], k[hit], o[hit]
        first = np.where(o > 0, j, k)
        second = np.where(o > 0, k, j)
        block = np.empty((len(j), 6), dtype=np.int64)
        block[:, 0] = pts[i, 0]
        block[:, 1] = pts[i, 1]
        block[:, 2:4] = pts[first]
        block[:, 4:6] = pts[second]
        rows.append(block)
    if not rows:
        return np.empty((0, 6), dtype=np.int64)
    return np.concatenate(rows)


# -- numba implementations -------------------------------------------------

if BACKEND == "numba":

    @njit(cache=True)
    def _nb_side(ax, ay, bx, by, qx, qy, rx, ry):
        wx = bx - ax
        wy = by - ay
        o = wx * (qy - ay) - wy * (qx - ax)
        if o != 0:
            return o
        o = wx * ry - wy * rx
        if o != 0:
            return o
        return wx * rx + wy * ry

    @njit(cache=True)
    def _nb_holds(t, qx, qy, rx, ry):
        return (_nb_side(t[0], t[1], t[2], t[3], qx, qy, rx, ry) > 0
                and _nb_side(t[2], t[3], t[4], t[5], qx, qy, rx, ry) > 0
                and _nb_side(t[4], t[5], t[0], t[1], qx, qy, rx, ry) > 0)

    @njit(cache=True)
    def nb_perturbed_in_triangles(tris, qx, qy, rx, ry):
        out = np.empty(tris.shape[0], dtype=np.bool_)
        for i in range(tris.shape[0]):
            out[i] = _nb_holds(tris[i], qx, qy, rx, ry)
        return out

    @njit(cache=True)
    def nb_triangle_holds_points(tri, pts):
        out = np.empty(pts.shape[0], dtype=np.bool_)
        for i in range(pts.shape[0]):
            out[i] = _nb_holds(tri, pts[i, 0], pts[i, 1], pts[i, 2], pts[i, 3])
        return out

    @njit(cache=True)
    def _nb_edge_separates(s, t):
        for e in range(3):
            ax = s[2 * e]
            ay = s[2 * e + 1]
            bx = s[(2 * e + 2) % 6]
            by = s[(2 * e + 3) % 6]
            wx = bx - ax
            wy = by - ay
            ok = True
            for v in range(3):
                if wx * (t[2 * v + 1] - ay) - wy * (t[2 * v] - ax) > 0:
                    ok = False
                    break
            if ok:
                return True
        return False

    @njit(cache=True)
    def nb_disjoint_from(tris, t):
        out = np.empty(tris.shape[0], dtype=np.bool_)
        for i in range(tris.shape[0]):
            out[i] = _nb_edge_separates(t, tris[i]) or _nb_edge_separates(tris[i], t)
        return out

    @njit(cache=True)
    def nb_triangles_with_area(pts, twice_area):
        n = pts.shape[0]
        count = 0
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    o = ((pts[j, 0] - pts[i, 0]) * (pts[k, 1] - pts[i, 1])
                         - (pts[j, 1] - pts[i, 1]) * (pts[k, 0] - pts[i, 0]))
                    if o == twice_area or o == -twice_area:
                        count += 1
        out = np.empty((count, 6), dtype=np.int64)
        m = 0
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    o = ((pts[j, 0] - pts[i, 0]) * (pts[k, 1] - pts[i, 1])
                         - (pts[j, 1] - pts[i, 1]) * (pts[k, 0] - pts[i, 0]))
                    if o == twice_area or o == -twice_area:
                        a, b = (j, k) if o > 0 else (k, j)
                        out[m, 0] = pts[i, 0]
                        out[m, 1] = pts[i, 1]
                        out[m, 2] = pts[a, 0]
                        out[m, 3] = pts[a, 1]
                        out[m, 4] = pts[b, 0]
                        out[m, 5] = pts[b, 1]
                        m += 1
        return out

    perturbed_in_triangles = nb_perturbed_in_triangles
    triangle_holds_points = nb_triangle_holds_points
    disjoint_from = nb_disjoint_from
    triangles_with_area = nb_triangles_with_area
else:
    perturbed_in_triangles = np_perturbed_in_triangles
    triangle_holds_points = np_triangle_holds_points
    disjoint_from = np_disjoint_from
    triangles_with_area = np_triangles_with_area
