"""Equivalence invariants of a point configuration: volume vectors, the
five-point dependence, circuit signature, distinct-pair-sums, and the 2D
area/lattice-point count consistency check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd

from .core import (
    Point,
    PointConfiguration,
    affine_hull_equations,
    complete_to_unimodular_row,
    dot,
    facet_inequalities,
    lattice_points_in_hull,
    signed_tetra_volume,
    sub,
    tetra_volume,
)


@dataclass(frozen=True)
class VolumeVector:
    """Signed 4-point determinants over all 4-subsets, lex subset order."""

    subsets: tuple[tuple[int, int, int, int], ...]
    entries: tuple[int, ...]

    def gcd(self) -> int:
        g = 0
        for e in self.entries:
            g = gcd(g, abs(e))
        return g


def volume_vector(cfg: PointConfiguration) -> VolumeVector:
    """All C(n, 4) signed tetra determinants, respecting stored point order."""
    if cfg.dim < 3:
        raise ValueError("volume vector needs a 3-dimensional configuration")
    n = len(cfg)
    if n < 4:
        raise ValueError("volume vector needs at least 4 points")
    subsets = tuple(combinations(range(n), 4))
    entries = tuple(
        signed_tetra_volume(*(cfg.points[i] for i in s)) for s in subsets
    )
    return VolumeVector(subsets, entries)


@dataclass(frozen=True)
class FivePointVector:
    """The unique affine dependence (v1..v5) of five spanning points,
    scaled so |v_i| is the volume of the tetrahedron omitting p_i."""

    entries: tuple[int, int, int, int, int]

    def __iter__(self):
        return iter(self.entries)


def _canonical_sign(v: tuple[int, ...]) -> tuple[int, ...]:
    """Fix the global sign: the minority-sign block is negative; on a
    positive/negative tie the first nonzero entry is negative."""
    pos = sum(1 for e in v if e > 0)
    neg = sum(1 for e in v if e < 0)
    flip = False
    if pos < neg:
        flip = True
    elif pos == neg:
        first = next(e for e in v if e != 0)
        flip = first > 0
    return tuple(-e for e in v) if flip else v


def five_point_vector(cfg: PointConfiguration) -> FivePointVector:
    if len(cfg) != 5:
        raise ValueError("need exactly 5 points")
    w = volume_vector(cfg).entries  # subsets lex: 1234,1235,1245,1345,2345
    raw = (w[4], -w[3], w[2], -w[1], w[0])
    v = _canonical_sign(raw)
    pts = cfg.points
    assert sum(v) == 0
    assert all(sum(vi * p[j] for vi, p in zip(v, pts)) == 0 for j in range(3))
    return FivePointVector(v)


@dataclass(frozen=True)
class Signature:
    pos: int
    neg: int

    def __post_init__(self):
        if self.pos < self.neg:
            raise ValueError("signature is stored with pos >= neg")

    def as_tuple(self) -> tuple[int, int]:
        return (self.pos, self.neg)


def signature(cfg: PointConfiguration) -> Signature:
    """Counts of positive and negative dependence coefficients; zeros
    (coplanar complements) do not count."""
    v = five_point_vector(cfg).entries
    pos = sum(1 for e in v if e > 0)
    neg = sum(1 for e in v if e < 0)
    if pos < neg:
        pos, neg = neg, pos
    return Signature(pos, neg)


def is_dps(cfg: PointConfiguration) -> bool:
    """True iff all pairwise sums p_i + p_j (i <= j) are distinct."""
    pts = cfg.points
    sums = set()
    for i in range(len(pts)):
        for j in range(i, len(pts)):
            s = (pts[i][0] + pts[j][0], pts[i][1] + pts[j][1], pts[i][2] + pts[j][2])
            if s in sums:
                return False
            sums.add(s)
    return True


def normalized_volume(cfg: PointConfiguration) -> int:
    """Normalized volume (unimodular tetrahedron = 1) of conv(cfg), computed
    as the cone decomposition from the first vertex: every facet not through
    it is fan-triangulated and contributes its determinant cone."""
    if cfg.dim != 3:
        raise ValueError("normalized volume needs a 3-dimensional configuration")
    from .core import primitive, vertices

    verts = vertices(cfg)
    apex = verts[0]
    total = 0
    for n, c in facet_inequalities(cfg):
        if dot(n, apex) == c:
            continue
        face = [p for p in verts if dot(n, p) == c]
        flat = _flatten_facet(face, n)
        hull = _hull_2d(flat)
        back = {f: p for f, p in zip(flat, face)}
        for i in range(1, len(hull) - 1):
            a, b, d = back[hull[0]], back[hull[i]], back[hull[i + 1]]
            total += abs(
                signed_tetra_volume(apex, a, b, d)
            )
    return total


def _flatten_facet(face: list[Point], n: Point) -> list[tuple[int, int]]:
    from .core import UnimodularAffineMap, primitive

    m = complete_to_unimodular_row(primitive(n))
    u = UnimodularAffineMap(m, (0, 0, 0))
    imgs = [u.apply(p) for p in face]
    assert len({p[2] for p in imgs}) == 1
    return [(p[0], p[1]) for p in imgs]


# ---------------------------------------------------------------------------
# 2D helpers.


def flatten_to_2d(cfg: PointConfiguration) -> tuple[list[tuple[int, int]], "object"]:
    """Unimodular coordinates on the lattice plane of a 2D configuration.

    Returns the flattened (x, y) points (order preserved) and the
    UnimodularAffineMap realizing the change of coordinates (its image has
    constant z).
    """
    from .core import UnimodularAffineMap

    if cfg.dim != 2:
        raise ValueError("configuration is not 2-dimensional")
    (nu, _), = affine_hull_equations(cfg)
    m = complete_to_unimodular_row(nu)
    u = UnimodularAffineMap(m, (0, 0, 0))
    imgs = [u.apply(p) for p in cfg.points]
    assert len({p[2] for p in imgs}) == 1
    return [(p[0], p[1]) for p in imgs], u


def polygon_normalized_area(flat: list[tuple[int, int]]) -> int:
    """Normalized area (unimodular triangle = 1) of the hull of 2D points."""
    hull = _hull_2d([p for p in flat])
    if len(hull) < 3:
        return 0
    area2 = 0
    for i in range(1, len(hull) - 1):
        a, b, c = hull[0], hull[i], hull[i + 1]
        area2 += (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return abs(area2)


def _hull_2d(points: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Convex hull vertices in counterclockwise order (monotone chain)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def crossz(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[tuple[int, int]] = []
    for p in pts:
        while len(lower) >= 2 and crossz(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[tuple[int, int]] = []
    for p in reversed(pts):
        while len(upper) >= 2 and crossz(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def pick_check(cfg: PointConfiguration) -> tuple[int, int, int, bool]:
    """(normalized area, boundary count, interior count, identity holds).

    For a 2-dimensional configuration in a lattice plane, checks the
    classical area = size + interior - 2 identity; it must hold for every
    valid input, so this is a self-test surface.
    """
    if cfg.dim != 2:
        raise ValueError("configuration is not 2-dimensional")
    full = lattice_points_in_hull(cfg)
    flat, _ = flatten_to_2d(full)
    area = polygon_normalized_area(flat)
    hull = _hull_2d(flat)
    boundary = 0
    interior = 0
    for p in flat:
        if _on_polygon_boundary(hull, p):
            boundary += 1
        else:
            interior += 1
    n = len(full)
    holds = area == n + interior - 2
    return area, boundary, interior, holds


def _on_polygon_boundary(hull: list[tuple[int, int]], p: tuple[int, int]) -> bool:
    k = len(hull)
    if k == 1:
        return p == hull[0]
    if k == 2:
        a, b = hull
        return _on_segment_2d(a, b, p)
    for i in range(k):
        if _on_segment_2d(hull[i], hull[(i + 1) % k], p):
            return True
    return False


def _on_segment_2d(a, b, p) -> bool:
    crossz = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])
    if crossz != 0:
        return False
    d = (b[0] - a[0]) * (p[0] - a[0]) + (b[1] - a[1]) * (p[1] - a[1])
    l2 = (b[0] - a[0]) ** 2 + (b[1] - a[1]) ** 2
    return 0 <= d <= l2
