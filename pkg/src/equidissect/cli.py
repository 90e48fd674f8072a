"""equidissect command line.

Exit status: 0 success, 1 precondition or verdict failure (error JSON on
stdout), 2 malformed input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import jsonio
from .balanced import certify, pair_edges
from .coloring import NAMED_MAPS, AffineMap, color_under
from .cycles import class_of_lattice_line, decompose_mu, degree_of_line
from .dissection import equal_area_check, lemma2_degree_check, validate
from .dyadic import format_valuation, val2
from .errors import BudgetExceeded, EquidissectError, NotInSubgroup, ParseError, UnequalAreas
from .search import DEFAULT_BUDGET, SearchSpace, enumerate_equidissections
from .tropical import ProjectivePoint, line_points, momentum_csv, momentum_p2, momentum_svg


class _Failure(Exception):
    """Verdict-level failure: payload goes to stdout, exit status 1."""

    def __init__(self, payload: dict, compact: bool = False):
        super().__init__(payload.get("error"))
        self.payload = payload
        self.compact = compact


def _read_doc(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return jsonio.loads(text)


def _csv_rationals(text: str, count: int) -> list:
    parts = [p for p in text.split(",")]
    if len(parts) != count:
        raise ParseError(f"expected {count} comma-separated rationals, got {text!r}")
    return [jsonio.parse_rational(p) for p in parts]


def _transform(args) -> AffineMap:
    if args.matrix is not None:
        a, b, c, d = _csv_rationals(args.matrix, 4)
        e, f = _csv_rationals(args.translation or "0,0", 2)
        if all(v.denominator == 1 for v in (a, b, c, d, e, f)):
            return AffineMap(((a, b), (c, d)), (e, f))
        return AffineMap.rational(((a, b), (c, d)), (e, f))
    return NAMED_MAPS[args.transform]


def _transform_json(args) -> dict:
    if args.matrix is None:
        return {"name": args.transform, **NAMED_MAPS[args.transform].to_json()}
    return _transform(args).to_json()


def cmd_valuate(args):
    values = list(args.values)
    if args.input:
        doc = _read_doc(args.input)
        values += doc if isinstance(doc, list) else [doc]
    if not values:
        raise ParseError("no values given")
    results = []
    for v in values:
        q = jsonio.parse_rational(v)
        results.append({"input": jsonio.format_rational(q), "val2": format_valuation(val2(q))})
    return {"results": results, "traceRefs": ["Property 5"]}


def cmd_color(args):
    pts = [jsonio.point_from_json(_csv_rationals(p, 2)) for p in args.points]
    if args.input:
        doc = _read_doc(args.input)
        if isinstance(doc, list) and len(doc) == 2 and not isinstance(doc[0], list):
            doc = [doc]
        pts += [jsonio.point_from_json(p) for p in doc]
    if not pts:
        raise ParseError("no points given")
    m = _transform(args)
    return {
        "colors": [{"point": jsonio.point_to_json(p), "color": color_under(m, p).value} for p in pts],
        "transform": _transform_json(args),
        "traceRefs": ["Lemma 1"],
    }


def cmd_degree(args):
    line = jsonio.broken_line_from_json(_read_doc(args.file))
    m = _transform(args)
    return {
        "degree": degree_of_line(line.vertices, m),
        "colors": [color_under(m, p).value for p in line],
        "transform": _transform_json(args),
        "traceRefs": ["Lemma 2"],
    }


def cmd_class(args):
    line = jsonio.broken_line_from_json(_read_doc(args.file))
    lam = class_of_lattice_line(line.vertices)
    try:
        mu = list(decompose_mu(lam))
    except NotInSubgroup:
        mu = None
    return {"lambda": list(lam), "mu": mu, "inEvenSubgroup": mu is not None,
            "traceRefs": ["Lemma 3", "Lemma 4"]}


def cmd_balanced(args):
    poly = jsonio.polygon_from_json(_read_doc(args.file))
    pairing = pair_edges(poly)
    return {"balanced": pairing is not None, "pairing": jsonio.pairing_to_json(pairing),
            "traceRefs": ["Lemma 4"]}


def cmd_certify(args):
    return jsonio.certificate_to_json(certify(jsonio.polygon_from_json(_read_doc(args.file))))


def cmd_verify(args):
    d = jsonio.dissection_from_json(_read_doc(args.file))
    verdict = validate(d)
    out = jsonio.verdict_to_json(verdict)
    out["traceRefs"] = ["Lemma 2"]
    if not verdict.ok:
        out["error"] = verdict.kind
        raise _Failure(out)
    try:
        out["equalArea"] = jsonio.format_rational(equal_area_check(d))
        out["distinctAreas"] = None
    except UnequalAreas as exc:
        out["equalArea"] = None
        out["distinctAreas"] = [jsonio.format_rational(a) for a in exc.areas]
    out["pieces"] = len(d.triangles)
    out["lemma2"] = {name: jsonio.lemma2_to_json(lemma2_degree_check(d, m))
                     for name, m in sorted(NAMED_MAPS.items())}
    if args.require_equal and out["equalArea"] is None:
        out["error"] = "UnequalAreas"
        raise _Failure(out)
    return out


def cmd_search(args):
    poly = jsonio.polygon_from_json(_read_doc(args.file))
    space = SearchSpace(poly, args.pieces, args.denominator, args.symmetry)
    try:
        result = enumerate_equidissections(space, args.budget, first_only=args.first_only)
    except BudgetExceeded as exc:
        for d in exc.partial:
            line = jsonio.dissection_to_json(d)
            line.update(partial=True, traceRefs=["Theorem 1"])
            print(jsonio.dumps(line, compact=True))
        raise _Failure({"error": exc.code, "message": str(exc), "partial": True,
                        "found": len(exc.partial), "nodes": exc.nodes}, compact=True)
    for d in result.dissections:
        line = jsonio.dissection_to_json(d)
        line["traceRefs"] = ["Theorem 1"]
        print(jsonio.dumps(line, compact=True))
    if args.stats:
        print(jsonio.dumps({"found": len(result.dissections), "nodes": result.nodes,
                            "candidates": result.candidates, **result.stats}, compact=True),
              file=sys.stderr)
    return None


def cmd_momentum(args):
    if args.torus:
        pts = [jsonio.point_from_json(p) for p in _read_doc(args.torus)]
        sys.stdout.write(momentum_csv(pts, torus=True))
        return None
    if args.points:
        doc = _read_doc(args.points)
        if not isinstance(doc, list) or any(not isinstance(p, list) or len(p) != 3 for p in doc):
            raise ParseError("projective points are 3-element lists")
        pts = [ProjectivePoint(*(jsonio.parse_rational(c) for c in p)) for p in doc]
    else:
        a, b, c = _csv_rationals(args.line, 3)
        pts = line_points(a, b, c, args.count)
    sys.stdout.write(momentum_csv(pts))
    if args.svg:
        Path(args.svg).write_text(momentum_svg([momentum_p2(p) for p in pts]))
    return None


def _add_transform(p):
    p.add_argument("--transform", choices=sorted(NAMED_MAPS), default="E",
                   help="named area-preserving map (default E, the identity)")
    p.add_argument("--matrix", help="explicit map matrix a,b,c,d (determinant +-1)")
    p.add_argument("--translation", help="explicit translation e,f (with --matrix)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equidissect",
        description="Exact checks of equidissection obstructions for lattice polygons.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("valuate", help="2-adic valuation of rationals")
    p.add_argument("values", nargs="*", help="rationals such as 12/5")
    p.add_argument("--input", help="JSON list of rationals ('-' for stdin)")
    p.set_defaults(func=cmd_valuate)

    p = sub.add_parser("color", help="tropical color of points")
    p.add_argument("points", nargs="*", help="points as x,y")
    p.add_argument("--input", help="JSON point or list of points")
    _add_transform(p)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("degree", help="degree of a closed broken line in K3")
    p.add_argument("file", nargs="?", default="-")
    _add_transform(p)
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("class", help="K4 class (lambda, mu) of a lattice broken line")
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(func=cmd_class)

    p = sub.add_parser("balanced", help="edge pairing of a balanced polygon")
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(func=cmd_balanced)

    p = sub.add_parser("certify", help="certificate: no odd equidissection")
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", help="validate a dissection JSON")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--require-equal", action="store_true",
                   help="exit 1 unless all pieces have equal area")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exhaustive equal-area dissection search")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--pieces", type=int, required=True)
    p.add_argument("--denominator", type=int, default=1)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--emit-all", dest="first_only", action="store_false", default=False)
    mode.add_argument("--first-only", dest="first_only", action="store_true")
    p.add_argument("--symmetry", action="store_true", help="one dissection per symmetry orbit")
    p.add_argument("--stats", action="store_true", help="search statistics on stderr")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("momentum", help="momentum-map images as CSV")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--line", default="1,1,1", help="line a,b,c for ax+by+cz=0")
    src.add_argument("--points", help="JSON list of projective points [x,y,z]")
    src.add_argument("--torus", help="JSON list of torus points [x,y]")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--svg", help="also write an SVG scatter over the triangle")
    p.set_defaults(func=cmd_momentum)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except _Failure as exc:
        print(jsonio.dumps(exc.payload, compact=exc.compact))
        return 1
    except ParseError as exc:
        print(jsonio.dumps({"error": exc.code, "message": str(exc)}))
        return 2
    except (OSError, UnicodeDecodeError) as exc:
        print(jsonio.dumps({"error": "ParseError", "message": str(exc)}))
        return 2
    except EquidissectError as exc:
        print(jsonio.dumps({"error": exc.code, "message": str(exc)}))
        return 1
    if out is not None:
        print(jsonio.dumps(out))
    return 0


if __name__ == "__main__":
    sys.exit(main())
