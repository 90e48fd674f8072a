"""Balanced polygons, the symmetric-group action on closed broken lines, and
the certificate that a balanced lattice polygon of odd area has no odd
equidissection."""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .cycles import (
    ODD_PARALLELOGRAM_CLASSES,
    ZERO_CLASS,
    K4Class,
    MuDecomposition,
    class_of_lattice_line,
    decompose_mu,
)
from .errors import NotInSubgroup, NotParallelogram, PreconditionError
from .geometry import BrokenLine, Point, Polygon, Vector, as_point, generalized_area, simplicity_violation

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class EdgePairing:
    """Pairs (alpha, beta) of 1-based side indices with v_beta = -v_alpha."""

    pairs: tuple

    def sorting_permutation(self) -> list[int]:
        """sigma with sigma(alpha_k) = 2k - 1, sigma(beta_k) = 2k, as 1-based images."""
        n = 2 * len(self.pairs)
        sigma = [0] * n
        for k, (a, b) in enumerate(self.pairs, start=1):
            sigma[a - 1] = 2 * k - 1
            sigma[b - 1] = 2 * k
        return sigma


def _vertices(line) -> tuple:
    if isinstance(line, BrokenLine):
        return line.vertices
    return tuple(as_point(p) for p in line)


def side_vectors(line) -> list[Vector]:
    verts = _vertices(line)
    n = len(verts)
    return [verts[(i + 1) % n] - verts[i] for i in range(n)]


def pair_edges(polygon) -> EdgePairing | None:
    """Greedy matching of each side against the lowest-index unused opposite side."""
    vs = side_vectors(polygon)
    n = len(vs)
    if n % 2:
        return None
    used = [False] * n
    pairs = []
    for i in range(n):
        if used[i]:
            continue
        used[i] = True
        target = -vs[i]
        j = next((j for j in range(i + 1, n) if not used[j] and vs[j] == target), None)
        if j is None:
            return None
        used[j] = True
        pairs.append((i + 1, j + 1))
    return EdgePairing(tuple(pairs))


def apply_permutation(line, sigma: Sequence[int]) -> BrokenLine:
    """sigma(L): start at L_1 and walk the sides in the order v_{sigma^-1(1)}, v_{sigma^-1(2)}, ...

    ``sigma`` lists 1-based images: sigma[i - 1] = sigma(i).
    """
    verts = _vertices(line)
    vs = side_vectors(verts)
    n = len(vs)
    if sorted(sigma) != list(range(1, n + 1)):
        raise PreconditionError(f"not a permutation of 1..{n}: {list(sigma)}")
    inverse = [0] * n
    for i, s in enumerate(sigma):
        inverse[s - 1] = i
    out = [verts[0]]
    for j in range(n - 1):
        out.append(out[-1] + vs[inverse[j]])
    return BrokenLine(tuple(out))


def transposition(n: int, i: int) -> list[int]:
    """tau_i = (i, i+1) on 1..n."""
    if not 1 <= i < n:
        raise PreconditionError(f"transposition index {i} outside 1..{n - 1}")
    sigma = list(range(1, n + 1))
    sigma[i - 1], sigma[i] = sigma[i], sigma[i - 1]
    return sigma


def swap_parallelogram(line, i: int) -> tuple[Point, Point, Point, Point]:
    """L_i, L_{i+1}, L_{i+2}, L_i + v_{i+1}: the cell swept by tau_i."""
    verts = _vertices(line)
    n = len(verts)
    vs = side_vectors(verts)
    li, lj, lk = verts[i - 1], verts[i % n], verts[(i + 1) % n]
    return (li, lj, lk, li + vs[i % n])


def transposition_class_delta(line, i: int) -> K4Class:
    """<L> - <tau_i L>, checked against the class of the swept parallelogram."""
    verts = _vertices(line)
    swapped = apply_permutation(verts, transposition(len(verts), i))
    delta = class_of_lattice_line(verts) - class_of_lattice_line(swapped.vertices)
    cell = class_of_lattice_line(swap_parallelogram(verts, i))
    if delta != cell:
        raise AssertionError(f"class delta {delta} != parallelogram class {cell}")
    return delta


def parallelogram_class(corners: Sequence) -> K4Class:
    """Class of a lattice parallelogram; zero iff its area is even."""
    pts = [as_point(p) for p in corners]
    if len(pts) != 4:
        raise NotParallelogram("need exactly four corners")
    vs = side_vectors(pts)
    if vs[0] != -vs[2] or vs[1] != -vs[3]:
        raise NotParallelogram(f"opposite sides differ: {vs}")
    c = class_of_lattice_line(pts)
    area = abs(generalized_area(pts))
    if area % 2 == 0:
        expected_ok = c == ZERO_CLASS
    else:
        expected_ok = c in ODD_PARALLELOGRAM_CLASSES
    if not expected_ok:
        raise AssertionError(f"parallelogram of area {area} has class {c}")
    return c


@dataclass
class Certificate:
    polygon: Polygon
    is_lattice: bool
    pairing: EdgePairing | None
    area: Fraction
    class_lambda: K4Class | None
    mu: MuDecomposition | None
    conclusion: str  # NoOddEquidissection | NotApplicable
    reason: str | None = None
    trace: list = field(default_factory=list)
    trace_refs: list = field(default_factory=list)

    @property
    def proves_no_odd_equidissection(self) -> bool:
        return self.conclusion == "NoOddEquidissection"


def certify(polygon: Polygon) -> Certificate:
    if not isinstance(polygon, Polygon):
        polygon = Polygon(tuple(polygon))
    verts = polygon.vertices
    trace, refs = [], []
    area = abs(generalized_area(verts))
    is_lattice = polygon.is_lattice()
    pairing = pair_edges(polygon)
    lam = mu = None
    reason = None

    if is_lattice:
        lam = class_of_lattice_line(verts)
        trace.append(f"class of the boundary in H1(K4) is lambda = {tuple(lam)}")
        refs.append("Lemma 3")
    else:
        reason = "notLattice"
        trace.append("some vertex has a non-integer coordinate")

    if pairing is None:
        reason = reason or "unbalanced"
        trace.append("sides cannot be paired into opposite equal vectors")
    else:
        trace.append(f"balanced: side pairs {list(pairing.pairs)}")

    if is_lattice and pairing is not None:
        try:
            mu = decompose_mu(lam)
        except NotInSubgroup as exc:
            raise AssertionError(f"balanced lattice boundary outside the even subgroup: {exc}")
        trace.append(f"lambda lies in the index-2 subgroup, mu = {tuple(mu)}")
        if (area - sum(mu)) % 2 != 0:
            raise AssertionError(f"area {area} and mu-sum {sum(mu)} differ in parity")
        trace.append(f"area {area} is congruent to mu1+mu2+mu3 = {sum(mu)} mod 2")
        refs += ["Lemma 4", "Lemma 5"]
    elif is_lattice:
        try:
            mu = decompose_mu(lam)
        except NotInSubgroup:
            mu = None

    if reason is None and area.denominator != 1:
        reason = "nonIntegerArea"
    if reason is None and area % 2 == 0:
        reason = "evenArea"
        trace.append(f"area {area} is even; the obstruction does not apply")

    if reason is None:
        # an odd equidissection would force lambda = 0 (Lemma 3) and hence even area
        if lam.is_zero():
            raise AssertionError("odd-area balanced lattice polygon with zero class")
        if mu.recompose() != lam:
            raise AssertionError("mu does not recompose lambda")
        trace.append(
            "an odd count N of equal pieces gives each piece area S/N with valuation 0, "
            "so lambda would vanish and the area would be even; contradiction"
        )
        refs.append("Theorem 2")
        conclusion = "NoOddEquidissection"
    else:
        conclusion = "NotApplicable"
    return Certificate(polygon, is_lattice, pairing, area, lam, mu, conclusion,
                       reason, trace, refs)


def random_balanced_polygon(rng: random.Random, pairs: int = 3, max_step: int = 3,
                            retries: int = 10_000) -> Polygon | None:
    """Shuffle a negation-closed multiset of lattice vectors until the closed line is simple.

    Returns None (and logs) once ``retries`` shuffles all fail.
    """
    for _ in range(retries):
        vs = []
        while len(vs) < pairs:
            v = Vector(Fraction(rng.randint(-max_step, max_step)),
                       Fraction(rng.randint(-max_step, max_step)))
            if v != (0, 0):
                vs.append(v)
        walk = vs + [-v for v in vs]
        rng.shuffle(walk)
        start = Point(Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-3, 3)))
        pts = [start]
        for v in walk[:-1]:
            pts.append(pts[-1] + v)
        if simplicity_violation(pts) is None:
            return Polygon(tuple(pts))
    log.warning("no simple balanced polygon after %d shuffles", retries)
    return None
