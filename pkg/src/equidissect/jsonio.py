"""Canonical JSON forms. Rationals are "p/q" strings ("p" when q = 1)."""

from __future__ import annotations

import json
from fractions import Fraction

from .balanced import Certificate, EdgePairing
from .dissection import Dissection, Lemma2Report, Verdict
from .dyadic import format_rational, format_valuation, rational
from .errors import ParseError, PreconditionError
from .geometry import BrokenLine, Point, Polygon


def dumps(obj, compact: bool = False) -> str:
    if compact:
        return json.dumps(obj, sort_keys=True, separators=(",", ":"))
    return json.dumps(obj, sort_keys=True, indent=2)


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc


def parse_rational(value) -> Fraction:
    if isinstance(value, float):
        raise ParseError(f"floating-point value {value!r} is not allowed; use a 'p/q' string")
    try:
        return rational(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {value!r}: {exc}") from exc


def _plain(value):
    """Fractions, points and valuations inside detail dicts, made JSON-safe."""
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, (int, str)) or value is None:
        return value
    return format_valuation(value)


def point_to_json(p) -> list:
    return [format_rational(Fraction(p[0])), format_rational(Fraction(p[1]))]


def point_from_json(value) -> Point:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise ParseError(f"a point is a 2-element list, got {value!r}")
    return Point(parse_rational(value[0]), parse_rational(value[1]))


def vertices_from_json(doc) -> tuple:
    if isinstance(doc, dict):
        if "vertices" not in doc:
            raise ParseError("polygon object needs a 'vertices' list")
        doc = doc["vertices"]
    if not isinstance(doc, list) or not doc:
        raise ParseError("vertices must be a nonempty list of points")
    return tuple(point_from_json(p) for p in doc)


def polygon_to_json(line) -> dict:
    return {"vertices": [point_to_json(p) for p in line]}


def polygon_from_json(doc) -> Polygon:
    verts = vertices_from_json(doc)
    try:
        return Polygon(verts)
    except PreconditionError:
        raise
    except (TypeError, ValueError) as exc:
        raise ParseError(str(exc)) from exc


def broken_line_from_json(doc) -> BrokenLine:
    return BrokenLine(vertices_from_json(doc))


def dissection_to_json(d: Dissection) -> dict:
    return {
        "polygon": polygon_to_json(d.polygon),
        "triangles": [[point_to_json(p) for p in t] for t in d.triangles],
    }


def dissection_from_json(doc) -> Dissection:
    if not isinstance(doc, dict) or "polygon" not in doc or "triangles" not in doc:
        raise ParseError("a dissection is an object with 'polygon' and 'triangles'")
    tris = doc["triangles"]
    if not isinstance(tris, list):
        raise ParseError("'triangles' must be a list")
    triangles = []
    for t in tris:
        if not isinstance(t, list) or len(t) != 3:
            raise ParseError(f"a triangle is a list of 3 points, got {t!r}")
        triangles.append(tuple(point_from_json(p) for p in t))
    return Dissection(polygon_from_json(doc["polygon"]), tuple(triangles))


def verdict_to_json(v: Verdict) -> dict:
    return {"verdict": v.kind, "indices": list(v.indices), "detail": _plain(v.detail)}


def lemma2_to_json(r: Lemma2Report) -> dict:
    return {
        "status": r.status,
        "degree": r.degree,
        "valuations": [format_valuation(v) for v in r.valuations],
        "offending": list(r.offending),
    }


def pairing_to_json(p: EdgePairing | None):
    return None if p is None else [list(pair) for pair in p.pairs]


def certificate_to_json(c: Certificate) -> dict:
    return {
        "polygon": polygon_to_json(c.polygon),
        "isLattice": c.is_lattice,
        "pairing": pairing_to_json(c.pairing),
        "area": format_rational(c.area),
        "classLambda": None if c.class_lambda is None else list(c.class_lambda),
        "mu": None if c.mu is None else list(c.mu),
        "conclusion": c.conclusion,
        "reason": c.reason,
        "trace": list(c.trace),
        "traceRefs": list(c.trace_refs),
    }
