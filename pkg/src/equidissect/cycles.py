"""Simplicial 1-cycles on K3 and K4.

K3 carries the degree of a colored closed broken line. K4 has the four
residues of Z^2 mod 2 as vertices; a lattice broken line maps to a cycle there,
expressed in the basis sigma1, sigma2, sigma3 below.
"""

from __future__ import annotations

from itertools import combinations
from typing import NamedTuple, Sequence

from .coloring import AffineMap, Color, E, color_under, residue
from .errors import NotACycle, NotInSubgroup

# K4 vertices X1..X4 as residues, in this index order
K4_VERTICES = ((0, 0), (0, 1), (1, 0), (1, 1))
_VERTEX_INDEX = {r: i for i, r in enumerate(K4_VERTICES)}
K4_EDGES = tuple(combinations(range(4), 2))  # reference orientation i -> j, i < j
_EDGE_INDEX = {e: k for k, e in enumerate(K4_EDGES)}

# Directed vertex walks (0-based X indices) of the three basis cycles.
SIGMA_WALKS = (
    (0, 1, 2),  # sigma1 = X1X2 + X2X3 + X3X1
    (0, 2, 3),  # sigma2 = X1X3 + X3X4 + X4X1
    (2, 1, 3),  # sigma3 = X3X2 + X2X4 + X4X3
)


class K4Class(NamedTuple):
    lambda1: int
    lambda2: int
    lambda3: int

    def __add__(self, other):
        return K4Class(*(a + b for a, b in zip(self, other)))

    def __sub__(self, other):
        return K4Class(*(a - b for a, b in zip(self, other)))

    def __neg__(self):
        return K4Class(*(-a for a in self))

    def __mul__(self, k):
        return K4Class(*(a * k for a in self))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self)

    def in_even_subgroup(self) -> bool:
        """Membership in the index-2 subgroup spanned by sigma_j + sigma_k."""
        return sum(self) % 2 == 0


class MuDecomposition(NamedTuple):
    mu1: int
    mu2: int
    mu3: int

    def recompose(self) -> K4Class:
        m1, m2, m3 = self
        return K4Class(m2 + m3, m3 + m1, m1 + m2)


ZERO_CLASS = K4Class(0, 0, 0)
ODD_PARALLELOGRAM_CLASSES = frozenset(
    c * s for c in (K4Class(0, 1, 1), K4Class(1, 0, 1), K4Class(1, 1, 0)) for s in (1, -1)
)


def edge_chain(walk: Sequence[int], n_vertices: int) -> list[int]:
    """Edge vector of the closed walk w0 -> w1 -> ... -> w0 in K_n."""
    edges = list(combinations(range(n_vertices), 2))
    index = {e: k for k, e in enumerate(edges)}
    chain = [0] * len(edges)
    m = len(walk)
    for t in range(m):
        u, v = walk[t], walk[(t + 1) % m]
        if u == v:
            continue
        if u < v:
            chain[index[(u, v)]] += 1
        else:
            chain[index[(v, u)]] -= 1
    return chain


def boundary(chain: Sequence[int], n_vertices: int) -> list[int]:
    out = [0] * n_vertices
    for (i, j), c in zip(combinations(range(n_vertices), 2), chain):
        out[j] += c
        out[i] -= c
    return out


SIGMA_CHAINS = tuple(edge_chain(w, 4) for w in SIGMA_WALKS)


def _coordinate_rows() -> tuple[tuple[int, int], ...]:
    # Each basis cycle owns one edge no other basis cycle touches; the
    # coefficient of that edge (with the cycle's orientation) is its coordinate.
    rows = []
    for k, chain in enumerate(SIGMA_CHAINS):
        for e in range(len(K4_EDGES)):
            if chain[e] != 0 and all(SIGMA_CHAINS[j][e] == 0 for j in range(3) if j != k):
                rows.append((e, chain[e]))
                break
    return tuple(rows)


_COORDINATE_ROWS = _coordinate_rows()


def chain_to_class(chain: Sequence[int]) -> K4Class:
    if any(boundary(chain, 4)):
        raise NotACycle(f"chain {list(chain)} has nonzero boundary")
    lam = K4Class(*(chain[e] * s for e, s in _COORDINATE_ROWS))
    recomposed = [sum(l * sc[e] for l, sc in zip(lam, SIGMA_CHAINS)) for e in range(6)]
    if recomposed != list(chain):
        raise NotACycle(f"chain {list(chain)} is not spanned by the sigma basis")
    return lam


def k3_degree(colors: Sequence[Color]) -> int:
    """Winding number of a closed color sequence around the triangle A-B-C.

    A -> B -> C -> A has degree +1. The signed crossing counts over the three
    edges must agree; that is asserted.
    """
    if not colors:
        raise ValueError("empty color sequence")
    seq = [Color(c) for c in colors]
    n = len(seq)
    counts = {}
    for src, dst in ((Color.A, Color.B), (Color.B, Color.C), (Color.C, Color.A)):
        total = 0
        for i in range(n):
            u, v = seq[i], seq[(i + 1) % n]
            if (u, v) == (src, dst):
                total += 1
            elif (u, v) == (dst, src):
                total -= 1
        counts[(src, dst)] = total
    values = set(counts.values())
    if len(values) != 1:
        raise NotACycle(f"edge crossing counts disagree: {counts}")
    return values.pop()


def degree_of_line(vertices: Sequence, affine: AffineMap = None) -> int:
    affine = affine or E
    return k3_degree([color_under(affine, p) for p in vertices])


def k4_class(residues: Sequence[tuple[int, int]]) -> K4Class:
    if not residues:
        raise ValueError("empty residue sequence")
    walk = [_VERTEX_INDEX[(x % 2, y % 2)] for x, y in residues]
    return chain_to_class(edge_chain(walk, 4))


def class_of_lattice_line(vertices: Sequence) -> K4Class:
    """<L>: the K4 class of a closed lattice broken line (NotLattice otherwise)."""
    return k4_class([residue(p) for p in vertices])


def decompose_mu(c: Sequence[int]) -> MuDecomposition:
    l1, l2, l3 = c
    if (l1 + l2 + l3) % 2:
        raise NotInSubgroup(f"class {tuple(c)} has odd coordinate sum")
    return MuDecomposition((-l1 + l2 + l3) // 2, (l1 - l2 + l3) // 2, (l1 + l2 - l3) // 2)
