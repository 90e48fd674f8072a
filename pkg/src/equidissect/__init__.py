"""Exact verification of equidissection obstructions for lattice polygons."""

from .balanced import Certificate, EdgePairing, apply_permutation, certify, pair_edges
from .coloring import E, U, V, AffineMap, Color, color, color_under, is_rainbow, lattice_color
from .cycles import K4Class, MuDecomposition, class_of_lattice_line, decompose_mu, degree_of_line, k3_degree, k4_class
from .dissection import Dissection, Verdict, equal_area_check, lemma2_degree_check, validate
from .dyadic import INF, rational, val2, val_add
from .geometry import BrokenLine, Point, Polygon, Vector, generalized_area, point, triangle_signed_area, wedge

__all__ = [
    "AffineMap", "BrokenLine", "Certificate", "Color", "Dissection", "E", "EdgePairing",
    "INF", "K4Class", "MuDecomposition", "Point", "Polygon", "U", "V", "Vector", "Verdict",
    "apply_permutation", "certify", "class_of_lattice_line", "color", "color_under",
    "decompose_mu", "degree_of_line", "equal_area_check", "generalized_area", "is_rainbow",
    "k3_degree", "k4_class", "lattice_color", "lemma2_degree_check", "pair_edges", "point",
    "rational", "triangle_signed_area", "val2", "val_add", "validate", "wedge",
]

__version__ = "0.1.0"
