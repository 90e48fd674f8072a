"""The tropical 3-coloring of Q^2 and its translates by area-preserving affine maps."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .dyadic import format_rational, rational, val2
from .errors import NotLattice, PreconditionError
from .geometry import Point, as_point


class Color(str, enum.Enum):
    A = "A"
    B = "B"
    C = "C"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class AffineMap:
    """p -> matrix @ p + translation with det(matrix) = +-1.

    |det| = 1 keeps unsigned area, which is all the valuation argument uses;
    the swap map V has det -1. Integer entries by default, which is what the
    mod-2 reduction needs; ``AffineMap.rational`` lifts that restriction.
    """

    matrix: tuple  # ((a, b), (c, d))
    translation: tuple = (0, 0)
    integral: bool = True

    def __post_init__(self):
        (a, b), (c, d) = self.matrix
        entries = [rational(v) for v in (a, b, c, d, *self.translation)]
        if self.integral and any(v.denominator != 1 for v in entries):
            raise PreconditionError("integral affine map has non-integer entries")
        a, b, c, d, e, f = entries
        if abs(a * d - b * c) != 1:
            raise PreconditionError(f"matrix determinant is {a * d - b * c}, expected +-1")
        if self.integral:
            a, b, c, d, e, f = (int(v) for v in (a, b, c, d, e, f))
        object.__setattr__(self, "matrix", ((a, b), (c, d)))
        object.__setattr__(self, "translation", (e, f))

    @classmethod
    def rational(cls, matrix, translation=(0, 0)) -> "AffineMap":
        return cls(matrix, translation, integral=False)

    @property
    def determinant(self) -> int:
        (a, b), (c, d) = self.matrix
        return a * d - b * c

    def __call__(self, p) -> Point:
        p = as_point(p)
        (a, b), (c, d) = self.matrix
        e, f = self.translation
        return Point(a * p.x + b * p.y + e, c * p.x + d * p.y + f)

    def inverse(self) -> "AffineMap":
        (a, b), (c, d) = self.matrix
        e, f = self.translation
        det = a * d - b * c  # +-1, so the inverse keeps integrality
        m = ((d * det, -b * det), (-c * det, a * det))
        t = (-(m[0][0] * e + m[0][1] * f), -(m[1][0] * e + m[1][1] * f))
        return AffineMap(m, t, integral=self.integral)

    def on_residue(self, residue: tuple[int, int]) -> tuple[int, int]:
        """Action on Z2 x Z2 (a permutation of the four residues)."""
        if not self.integral:
            raise PreconditionError("mod-2 action needs an integral map")
        (a, b), (c, d) = self.matrix
        e, f = self.translation
        x, y = residue
        return ((a * x + b * y + e) % 2, (c * x + d * y + f) % 2)

    def to_json(self) -> dict:
        fmt = (lambda v: v) if self.integral else (lambda v: format_rational(Fraction(v)))
        return {
            "matrix": [[fmt(v) for v in row] for row in self.matrix],
            "translation": [fmt(v) for v in self.translation],
        }


E = AffineMap(((1, 0), (0, 1)))
U = AffineMap(((1, 1), (0, 1)))
V = AffineMap(((0, 1), (1, 0)), (1, 0))

NAMED_MAPS = {"E": E, "U": U, "V": V}


def color(p) -> Color:
    x, y = as_point(p)
    vx, vy = val2(x), val2(y)
    if vx > 0 and vy > 0:
        return Color.A
    if vy <= 0 and vx > vy:
        return Color.B
    if vx <= 0 and vy >= vx:
        return Color.C
    raise AssertionError(f"coloring rule is not total at {p!r}")  # unreachable


def color_under(affine: AffineMap, p) -> Color:
    return color(affine(p))


def is_rainbow(p1, p2, p3, affine: AffineMap = None) -> bool:
    affine = affine or E
    return {color_under(affine, p) for p in (p1, p2, p3)} == set(Color)


_LATTICE_TABLE = {(0, 0): Color.A, (0, 1): Color.B, (1, 0): Color.C, (1, 1): Color.C}


def lattice_color(residue: tuple[int, int]) -> Color:
    x, y = residue
    return _LATTICE_TABLE[(x % 2, y % 2)]


def residue(p) -> tuple[int, int]:
    x, y = as_point(p)
    if x.denominator != 1 or y.denominator != 1:
        raise NotLattice(f"point ({x}, {y}) is not a lattice point")
    return (x.numerator % 2, y.numerator % 2)


def lattice_color_under(affine: AffineMap, p) -> Color:
    return lattice_color(affine.on_residue(residue(p)))
