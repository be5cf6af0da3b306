"""Minimal and quasi-minimal polytopes.

For a vertex v of a lattice polytope P, P^v is the hull of the lattice
points of P other than v.  Vert*(P) collects the vertices whose deletion
drops the dimension to 2 or the width to 1; P is minimal when every vertex
is in Vert*, quasi-minimal when all but one are.  Large minimal or
quasi-minimal polytopes project along a common line onto a quasi-minimal
polygon, which this module also verifies.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Point,
    PointConfiguration,
    cross,
    dot,
    facet_inequalities,
    lattice_points_in_hull,
    primitive,
    unimodular_inverse3,
    vertices,
)
from .width import lattice_width


@dataclass(frozen=True)
class MinimalityReport:
    verdict: str  # minimal | quasi-minimal | neither | width-one
    vert_star: tuple[Point, ...]
    vertices: tuple[Point, ...]
    deleted_widths: dict[Point, object]  # width, or the string "dim-drop"


def vertex_deletion(cfg: PointConfiguration, v: Point) -> PointConfiguration:
    """The lattice points of conv((P cap Z^3) minus v); v must be a vertex."""
    full = lattice_points_in_hull(cfg)
    if v not in vertices(full):
        raise ValueError(f"{v} is not a vertex of the hull")
    rest = [p for p in full.points if p != v]
    remaining = PointConfiguration(rest)
    if remaining.dim < 1:
        return remaining
    return lattice_points_in_hull(remaining)


def minimality_report(cfg: PointConfiguration) -> MinimalityReport:
    """Vert* and the minimal/quasi-minimal verdict.

    Needs a 3-dimensional input; width-1 polytopes get the verdict
    "width-one" since the notions only apply from width 2 up.
    """
    if cfg.dim != 3:
        raise ValueError("minimality needs a 3-dimensional configuration")
    full = lattice_points_in_hull(cfg)
    verts = tuple(vertices(full))
    if lattice_width(full).width < 2:
        return MinimalityReport("width-one", (), verts, {})
    star = []
    widths: dict[Point, object] = {}
    for v in verts:
        deleted = vertex_deletion(full, v)
        if deleted.dim < 3:
            widths[v] = "dim-drop"
            star.append(v)
            continue
        w = lattice_width(deleted).width
        widths[v] = w
        if w == 1:
            star.append(v)
    if len(star) == len(verts):
        verdict = "minimal"
    elif len(star) == len(verts) - 1:
        verdict = "quasi-minimal"
    else:
        verdict = "neither"
    return MinimalityReport(verdict, tuple(star), verts, widths)


def interior_lattice_points(cfg: PointConfiguration) -> list[Point]:
    """Lattice points strictly inside conv(cfg)."""
    if cfg.dim != 3:
        raise ValueError("needs a 3-dimensional configuration")
    full = lattice_points_in_hull(cfg)
    ineqs = facet_inequalities(full)
    return [p for p in full.points if all(dot(n, p) < c for n, c in ineqs)]


# ---------------------------------------------------------------------------
# 2D minimality.


def classify_2d_minimality(points) -> tuple[str, tuple]:
    """(verdict, Vert*) of a polygon given by 2D lattice points.

    Works inside the plane lattice; raises on width-1 input, where the
    notion does not apply.
    """
    cfg = PointConfiguration([(x, y, 0) for x, y in points])
    if cfg.dim != 2:
        raise ValueError("input is not 2-dimensional")
    full = lattice_points_in_hull(cfg)
    if lattice_width(full).width < 2:
        raise ValueError("2D minimality needs width >= 2")
    verts = vertices(full)
    star = []
    for v in verts:
        rest = PointConfiguration([p for p in full.points if p != v])
        if rest.dim < 2:
            star.append(v)
            continue
        deleted = lattice_points_in_hull(rest)
        if lattice_width(deleted).width == 1:
            star.append(v)
    if len(star) == len(verts):
        verdict = "minimal"
    elif len(star) == len(verts) - 1:
        verdict = "quasi-minimal"
    else:
        verdict = "neither"
    return verdict, tuple((v[0], v[1]) for v in star)


# ---------------------------------------------------------------------------
# The projection dichotomy.


@dataclass(frozen=True)
class DichotomyReport:
    branch: str  # "small" | "projection"
    size: int
    direction: Point | None
    polygon: tuple[tuple[int, int], ...] | None
    polygon_verdict: str | None
    unique_vertex_preimages: bool | None


def projection_dichotomy_check(cfg: PointConfiguration) -> DichotomyReport:
    """Verification surface for the size dichotomy of minimal and
    quasi-minimal polytopes: either at most 2^3 + 3 = 11 lattice points, or
    the width-1 deletion functionals share a kernel line along which the
    polytope projects onto a quasi-minimal polygon with uniquely lifted
    vertices."""
    report = minimality_report(cfg)
    if report.verdict not in ("minimal", "quasi-minimal"):
        raise ValueError("input must be minimal or quasi-minimal")
    full = lattice_points_in_hull(cfg)
    n = len(full)
    if n <= 11:
        return DichotomyReport("small", n, None, None, None, None)
    # direction: common kernel line of the width-1 witnesses of the P^v
    normals = []
    for v in report.vert_star:
        deleted = vertex_deletion(full, v)
        if deleted.dim < 3:
            continue
        res = lattice_width(deleted)
        if res.width == 1:
            f = res.witness
            normals.append((f.a, f.b, f.c))
    direction = _common_kernel_direction(normals)
    if direction is None:
        raise AssertionError("width-1 witnesses have no common kernel line")
    rows = _projection_rows(direction)
    proj = {}
    for p in full.points:
        q = (dot(rows[0], p), dot(rows[1], p))
        proj.setdefault(q, []).append(p)
    polygon = sorted(proj)
    verdict, _ = classify_2d_minimality(polygon)
    poly_cfg = PointConfiguration([(x, y, 0) for x, y in polygon])
    vset = {(v[0], v[1]) for v in vertices(lattice_points_in_hull(poly_cfg))}
    unique = all(len(proj[q]) == 1 for q in vset)
    return DichotomyReport(
        "projection", n, direction, tuple(polygon), verdict, unique
    )


def _common_kernel_direction(normals: list[Point]) -> Point | None:
    """Primitive direction annihilated by every functional, if the common
    kernel is a line."""
    if not normals:
        return None
    base = normals[0]
    for other in normals[1:]:
        d = cross(base, other)
        if d != (0, 0, 0):
            d = primitive(d)
            if all(dot(nm, d) == 0 for nm in normals):
                return d
            return None
    # all witnesses parallel: kernel is a plane, any primitive line in it
    a, b, c = base
    if (b, -a) != (0, 0):
        return primitive((b, -a, 0))
    return (1, 0, 0)


def _projection_rows(direction: Point) -> tuple[Point, Point]:
    """Two integer forms spanning {f : f(direction) = 0}, together a
    surjection Z^3 -> Z^2 with kernel Z * direction."""
    from .core import complete_to_unimodular_row

    rows = complete_to_unimodular_row(direction)
    # transpose has the direction as third column; its inverse's first two
    # rows vanish on the direction
    t = tuple(tuple(rows[j][i] for j in range(3)) for i in range(3))
    inv = unimodular_inverse3(t)
    return inv[0], inv[1]


def minimal_tetra_family(k: int) -> PointConfiguration:
    """The tetrahedron conv{(1,0,0), (-1,0,0), (0,-1,k), (0,1,k)}: k-1
    interior points, normalized volume 4k, and minimal for every k >= 2
    (at k = 1 it has width 1)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return PointConfiguration([(1, 0, 0), (-1, 0, 0), (0, -1, k), (0, 1, k)])


def minimal_tetra_with_apex(k: int) -> PointConfiguration:
    """minimal_tetra_family(k) extended by the apex (0,0,k+1); quasi-minimal
    for every k >= 2 (at k = 1 the extension is still minimal)."""
    base = minimal_tetra_family(k)
    return PointConfiguration(list(base.points) + [(0, 0, k + 1)])
