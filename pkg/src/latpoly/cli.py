"""Command-line interface.

Commands: invariants, classify, equiv, empty-tetra, width, atlas,
minimality, polygons.  Input files hold one lattice point per line as
"x y z" (ASCII spaces, '#' comments, blank lines ignored); every command
also accepts JSON documents {"points": [[x, y, z], ...], "label": ...}.

Exit codes: 0 success, 1 negative verdict (not equivalent, not empty,
not minimal, not in the size-5 table), 2 parse error, 3 domain error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import IntegerFunctional, PointConfiguration, UnimodularAffineMap
from .invariants import (
    five_point_vector,
    is_dps,
    normalized_volume,
    signature,
    volume_vector,
)

ATLAS_VERSION = "latpoly-atlas-1"

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3


class ParseError(Exception):
    pass


class DomainError(Exception):
    pass


# ---------------------------------------------------------------------------
# I/O.


def parse_points_text(text: str) -> list[tuple[int, int, int]]:
    pts = []
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if len(parts) != 3:
            raise ParseError(f"line {lineno}: expected 3 coordinates, got {len(parts)}")
        try:
            pts.append(tuple(int(t) for t in parts))
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer coordinate")
    if not pts:
        raise ParseError("no points in input")
    return pts


def parse_document(text: str) -> tuple[list[tuple[int, int, int]], str | None]:
    """Points plus optional label, from either the text or JSON format."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"bad JSON: {e}")
        if not isinstance(doc, dict) or "points" not in doc:
            raise ParseError('JSON document needs a "points" key')
        raw = doc["points"]
        pts = []
        for p in raw:
            if len(p) != 3 or any(not isinstance(c, int) for c in p):
                raise ParseError(f"bad point {p!r}")
            pts.append(tuple(p))
        if not pts:
            raise ParseError("no points in input")
        return pts, doc.get("label")
    return parse_points_text(text), None


def render_points_text(pts) -> str:
    return "\n".join(f"{p[0]} {p[1]} {p[2]}" for p in pts) + "\n"


def _read_input(path: str) -> tuple[list[tuple[int, int, int]], str | None]:
    if path == "-":
        return parse_document(sys.stdin.read())
    try:
        with open(path) as f:
            return parse_document(f.read())
    except OSError as e:
        raise ParseError(str(e))


def _load_cfg(path: str) -> PointConfiguration:
    pts, _ = _read_input(path)
    return PointConfiguration(pts)


def _emit(payload: dict, args, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _map_json(m: UnimodularAffineMap) -> dict:
    return {"linear": [list(r) for r in m.linear], "translation": list(m.translation)}


def _functional_str(f: IntegerFunctional) -> str:
    return f"({f.a}, {f.b}, {f.c}) + {f.k}"


# ---------------------------------------------------------------------------
# Commands.


def cmd_invariants(args) -> int:
    cfg = _load_cfg(args.input)
    from .width import lattice_width

    if cfg.dim != 3:
        raise DomainError(f"configuration is {cfg.dim}-dimensional, need 3")
    w = lattice_width(cfg)
    vol = normalized_volume(cfg)
    payload = {
        "size": len(cfg),
        "dim": cfg.dim,
        "normalized_volume": vol,
        "width": w.width,
        "width_witness": [w.witness.a, w.witness.b, w.witness.c],
        "dps": is_dps(cfg),
        "volume_vector": list(volume_vector(cfg).entries),
    }
    lines = [
        f"size: {len(cfg)}",
        f"dim: {cfg.dim}",
        f"normalized volume: {vol}",
        f"width: {w.width}  witness {_functional_str(w.witness)}",
        f"dps: {payload['dps']}",
        f"volume vector: {payload['volume_vector']}",
    ]
    if len(cfg) == 5:
        vec = five_point_vector(cfg)
        sig = signature(cfg)
        payload["five_point_vector"] = list(vec.entries)
        payload["signature"] = list(sig.as_tuple())
        lines.append(f"five-point vector: {list(vec.entries)}")
        lines.append(f"signature: {sig.as_tuple()}")
    _emit(payload, args, lines)
    return EXIT_OK


def cmd_classify(args) -> int:
    from .classify import FAMILY_UNSIZED5, classify_size5

    cfg = _load_cfg(args.input)
    if cfg.dim != 3:
        raise DomainError(f"configuration is {cfg.dim}-dimensional, need 3")
    rec = classify_size5(cfg)
    payload = {
        "family": rec.family,
        "params": list(rec.params),
        "signature": list(rec.signature.as_tuple()) if rec.signature else None,
        "width": rec.width,
        "vector": list(rec.vector.entries) if rec.vector else None,
        "representative": [list(p) for p in rec.representative.points],
        "witness": _map_json(rec.witness) if rec.witness else None,
    }
    lines = [f"family: {rec.family}  params: {rec.params}"]
    if rec.vector is not None:
        lines.append(
            f"signature: {rec.signature.as_tuple()}  width: {rec.width}  "
            f"vector: {list(rec.vector.entries)}"
        )
    _emit(payload, args, lines)
    return EXIT_NEGATIVE if rec.family == FAMILY_UNSIZED5 else EXIT_OK


def cmd_equiv(args) -> int:
    from .equivalence import z_equivalent

    a = _load_cfg(args.input_a)
    b = _load_cfg(args.input_b)
    if a.dim != 3 or b.dim != 3:
        raise DomainError("both configurations must be 3-dimensional")
    m = z_equivalent(a, b)
    if m is None:
        _emit({"equivalent": False}, args, ["not equivalent"])
        return EXIT_NEGATIVE
    payload = {"equivalent": True, "witness": _map_json(m)}
    lines = ["equivalent", f"linear: {m.linear}", f"translation: {m.translation}"]
    _emit(payload, args, lines)
    return EXIT_OK


def cmd_empty_tetra(args) -> int:
    from .empty_tetra import classify_empty, is_empty_tetra_bruteforce

    cfg = _load_cfg(args.input)
    if len(cfg) != 4 or cfg.dim != 3:
        raise DomainError("need exactly 4 points spanning dimension 3")
    p1, p2, p3, p4 = cfg.points
    if not is_empty_tetra_bruteforce(p1, p2, p3, p4):
        _emit({"empty": False}, args, ["not empty"])
        return EXIT_NEGATIVE
    cls, m = classify_empty(p1, p2, p3, p4)
    payload = {
        "empty": True,
        "p": cls.p,
        "q": cls.q,
        "witness": _map_json(m),
    }
    _emit(payload, args, [f"empty: T({cls.p}, {cls.q})"])
    return EXIT_OK


def cmd_width(args) -> int:
    from .width import lattice_width

    cfg = _load_cfg(args.input)
    if cfg.dim < 1:
        raise DomainError("width needs at least a segment")
    w = lattice_width(cfg)
    payload = {
        "width": w.width,
        "witness": [w.witness.a, w.witness.b, w.witness.c],
        "certificate_bound": w.certificate_bound,
    }
    _emit(payload, args, [f"width: {w.width}  witness {_functional_str(w.witness)}"])
    return EXIT_OK


def cmd_minimality(args) -> int:
    from .minimality import minimality_report

    cfg = _load_cfg(args.input)
    if cfg.dim != 3:
        raise DomainError(f"configuration is {cfg.dim}-dimensional, need 3")
    rep = minimality_report(cfg)
    payload = {
        "verdict": rep.verdict,
        "vertices": [list(v) for v in rep.vertices],
        "vert_star": [list(v) for v in rep.vert_star],
        "deleted_widths": {
            " ".join(map(str, v)): w for v, w in rep.deleted_widths.items()
        },
    }
    lines = [
        f"verdict: {rep.verdict}",
        f"vertices: {len(rep.vertices)}  in Vert*: {len(rep.vert_star)}",
    ]
    _emit(payload, args, lines)
    return EXIT_OK if rep.verdict in ("minimal", "quasi-minimal") else EXIT_NEGATIVE


def cmd_polygons(args) -> int:
    from .classify import enumerate_polygons_upto5

    classes = enumerate_polygons_upto5()
    payload = {
        str(size): [[list(p) for p in rep] for rep in reps]
        for size, reps in sorted(classes.items())
    }
    lines = []
    for size, reps in sorted(classes.items()):
        lines.append(f"size {size}: {len(reps)} classes")
        for rep in reps:
            lines.append("  " + "; ".join(f"{p[0]} {p[1]}" for p in rep))
    _emit(payload, args, lines)
    return EXIT_OK


def _atlas_document(size: int, threads: int | None = None) -> dict:
    from .classify import (
        FAMILY_W1_21,
        FAMILY_W1_22,
        FAMILY_W1_31,
        FAMILY_W1_32,
        REP_W1_22,
        REP_W1_31,
        enumerate_size5_width_ge2,
        rep_w1_21,
        rep_w1_32,
    )

    if size == 4:
        return {
            "version": ATLAS_VERSION,
            "size": 4,
            "families": [
                {
                    "family": "T(p,q)",
                    "description": (
                        "empty tetrahedra conv{(0,0,0),(1,0,0),(0,0,1),(p,q,1)}, "
                        "q >= 1, gcd(p,q) = 1, p minimal in its class "
                        "{+-p^{+-1} mod q}; all have width 1"
                    ),
                    "representative_p2_q7": [
                        list(p) for p in ((0, 0, 0), (1, 0, 0), (0, 0, 1), (2, 7, 1))
                    ],
                }
            ],
        }
    if size != 5:
        raise DomainError("atlas supports --size 4 and --size 5")
    records = []
    for rec in enumerate_size5_width_ge2(threads=threads):
        records.append(
            {
                "family": rec.family,
                "params": list(rec.params),
                "signature": list(rec.signature.as_tuple()),
                "width": rec.width,
                "vector": list(rec.vector.entries),
                "points": [list(p) for p in rec.representative.points],
            }
        )
    width1_families = [
        {
            "family": FAMILY_W1_22,
            "description": "the single signature-(2,2) class",
            "representative": [list(p) for p in REP_W1_22],
        },
        {
            "family": FAMILY_W1_21,
            "description": (
                "signature (2,1): three collinear points plus an edge at "
                "lattice distance q; parameters 0 <= p <= q/2, gcd(p,q) = 1"
            ),
            "representative_p1_q3": [list(p) for p in rep_w1_21(1, 3)],
        },
        {
            "family": FAMILY_W1_32,
            "description": (
                "signature (3,2): unimodular triangle plus an interior-free "
                "edge; parameters 0 < a <= b"
            ),
            "representative_a1_b2": [list(p) for p in rep_w1_32(1, 2)],
        },
        {
            "family": FAMILY_W1_31,
            "description": "the single width-1 signature-(3,1) class",
            "representative": [list(p) for p in REP_W1_31],
        },
    ]
    return {
        "version": ATLAS_VERSION,
        "size": 5,
        "max_width": max(r["width"] for r in records),
        "width_ge2_classes": records,
        "width1_families": width1_families,
    }


def cmd_atlas(args) -> int:
    doc = _atlas_document(args.size, threads=args.threads)
    if args.widths_only:
        if args.size == 4:
            print("max width 1")
        else:
            print(f"max width {doc['max_width']}")
        return EXIT_OK
    sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Entry point.


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latpoly",
        description="Exact tools for lattice 3-polytopes with few lattice points.",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument(
        "--threads", type=int, default=None, help="worker threads for enumeration"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, helptext in (
        ("invariants", cmd_invariants, "size, volume, width, vectors, signature"),
        ("classify", cmd_classify, "match a size-5 configuration to its class"),
        ("empty-tetra", cmd_empty_tetra, "classify an empty tetrahedron as T(p,q)"),
        ("width", cmd_width, "certified lattice width"),
        ("minimality", cmd_minimality, "minimal / quasi-minimal verdict"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("input", help="points file, or - for stdin")
        p.set_defaults(fn=fn)

    p = sub.add_parser("equiv", help="decide unimodular equivalence")
    p.add_argument("input_a")
    p.add_argument("input_b")
    p.set_defaults(fn=cmd_equiv)

    p = sub.add_parser("atlas", help="full classification for a given size")
    p.add_argument("--size", type=int, default=5)
    p.add_argument("--widths-only", action="store_true")
    p.set_defaults(fn=cmd_atlas)

    p = sub.add_parser("polygons", help="polygon classes with up to 5 lattice points")
    p.set_defaults(fn=cmd_polygons)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (DomainError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
