"""Exact integer/rational geometry primitives for lattice 3-polytopes.

All arithmetic is exact: points are tuples of Python ints, rational
queries use fractions.Fraction.  Everything here is immutable and pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

Point = tuple[int, int, int]
RationalPoint = tuple[Fraction, Fraction, Fraction]


def as_point(p: Sequence[int]) -> Point:
    x, y, z = p
    if not all(isinstance(c, int) for c in (x, y, z)):
        raise TypeError(f"lattice point needs integer coordinates, got {p!r}")
    return (x, y, z)


def as_rational_point(p: Sequence) -> RationalPoint:
    x, y, z = p
    return (Fraction(x), Fraction(y), Fraction(z))


def sub(a: Point, b: Point) -> Point:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def add(a: Point, b: Point) -> Point:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def cross(a: Point, b: Point) -> Point:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def content(v: Point) -> int:
    """gcd of the coordinates (0 for the zero vector)."""
    return gcd(gcd(abs(v[0]), abs(v[1])), abs(v[2]))


def primitive(v: Point) -> Point:
    g = content(v)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return (v[0] // g, v[1] // g, v[2] // g)


def det3(r0, r1, r2) -> int:
    return (
        r0[0] * (r1[1] * r2[2] - r1[2] * r2[1])
        - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0])
        + r0[2] * (r1[0] * r2[1] - r1[1] * r2[0])
    )


def tetra_volume(p1: Point, p2: Point, p3: Point, p4: Point) -> int:
    """Normalized volume of the tetrahedron: |det| of the edge vectors at p1.

    The tetrahedron spanned by an affine lattice basis has volume 1.
    Returns 0 iff the four points are coplanar.
    """
    return abs(det3(sub(p2, p1), sub(p3, p1), sub(p4, p1)))


def signed_tetra_volume(p1: Point, p2: Point, p3: Point, p4: Point) -> int:
    return det3(sub(p2, p1), sub(p3, p1), sub(p4, p1))


def _rank3(vectors: Iterable[Point]) -> int:
    """Rank of a set of integer vectors in Z^3 (exact)."""
    basis: list[Point] = []
    for v in vectors:
        if v == (0, 0, 0):
            continue
        if not basis:
            basis.append(v)
        elif len(basis) == 1:
            if cross(basis[0], v) != (0, 0, 0):
                basis.append(v)
        elif len(basis) == 2:
            if det3(basis[0], basis[1], v) != 0:
                basis.append(v)
                break
    return len(basis)


@dataclass(frozen=True)
class PointConfiguration:
    """An ordered list of distinct lattice points; the polytope is its hull."""

    points: tuple[Point, ...]
    dim: int = field(init=False)

    def __init__(self, points: Iterable[Sequence[int]]):
        pts = tuple(as_point(p) for p in points)
        if not pts:
            raise ValueError("configuration must be nonempty")
        if len(set(pts)) != len(pts):
            raise ValueError("configuration has duplicate points")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "dim", affine_dimension_of(pts))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def as_set(self) -> frozenset[Point]:
        return frozenset(self.points)

    def sorted(self) -> "PointConfiguration":
        return PointConfiguration(sorted(self.points))

    def translated(self, t: Point) -> "PointConfiguration":
        return PointConfiguration([add(p, t) for p in self.points])


def affine_dimension_of(points: Sequence[Point]) -> int:
    p0 = points[0]
    return _rank3(sub(p, p0) for p in points[1:])


def affine_dimension(cfg: PointConfiguration) -> int:
    """Rank of the difference set {p_i - p_1}; 0 for a single point."""
    return cfg.dim


def independent_quadruple(points: Sequence[Point]) -> tuple[int, int, int, int]:
    """Indices of the first four affinely independent points, in stored order."""
    idx = [0]
    basis: list[Point] = []
    for i in range(1, len(points)):
        v = sub(points[i], points[0])
        if _rank3(basis + [v]) > len(basis):
            basis.append(v)
            idx.append(i)
            if len(idx) == 4:
                return tuple(idx)
    raise ValueError("configuration is not 3-dimensional")


@dataclass(frozen=True)
class UnimodularAffineMap:
    """x -> M x + t with M integer, det(M) = +-1, t integer."""

    linear: tuple[tuple[int, int, int], ...]
    translation: Point

    def __post_init__(self):
        if len(self.linear) != 3 or any(len(r) != 3 for r in self.linear):
            raise ValueError("linear part must be 3x3")
        if self.det not in (1, -1):
            raise ValueError(f"linear part has det {self.det}, need +-1")

    @property
    def det(self) -> int:
        return det3(*self.linear)

    @classmethod
    def identity(cls) -> "UnimodularAffineMap":
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)), (0, 0, 0))

    def apply(self, p: Point) -> Point:
        m, t = self.linear, self.translation
        return (
            dot(m[0], p) + t[0],
            dot(m[1], p) + t[1],
            dot(m[2], p) + t[2],
        )

    def compose(self, other: "UnimodularAffineMap") -> "UnimodularAffineMap":
        """self after other: (self.compose(other))(x) = self(other(x))."""
        a, b = self.linear, other.linear
        m = tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
            for i in range(3)
        )
        return UnimodularAffineMap(m, self.apply(other.translation))

    def inverse(self) -> "UnimodularAffineMap":
        m = self.linear
        d = self.det
        adj = adjugate3(m)
        inv = tuple(tuple(adj[i][j] * d for j in range(3)) for i in range(3))
        t = self.translation
        it = tuple(-dot(inv[i], t) for i in range(3))
        return UnimodularAffineMap(inv, it)


def adjugate3(m) -> tuple[tuple[int, int, int], ...]:
    """Adjugate of a 3x3 integer matrix: m @ adj(m) = det(m) * I."""
    a, b, c = m[0]
    d, e, f = m[1]
    g, h, i = m[2]
    return (
        (e * i - f * h, c * h - b * i, b * f - c * e),
        (f * g - d * i, a * i - c * g, c * d - a * f),
        (d * h - e * g, b * g - a * h, a * e - b * d),
    )


def apply_map(m: UnimodularAffineMap, cfg: PointConfiguration) -> PointConfiguration:
    """Pointwise image, order preserved."""
    return PointConfiguration([m.apply(p) for p in cfg.points])


@dataclass(frozen=True)
class IntegerFunctional:
    """f(x, y, z) = a x + b y + c z + k, integer on Z^3."""

    a: int
    b: int
    c: int
    k: int = 0

    @property
    def linear(self) -> Point:
        return (self.a, self.b, self.c)

    def __call__(self, p: Sequence) -> int:
        return self.a * p[0] + self.b * p[1] + self.c * p[2] + self.k

    def is_constant_on(self, cfg: PointConfiguration) -> bool:
        p0 = cfg.points[0]
        v0 = self(p0)
        return all(self(p) == v0 for p in cfg.points)

    def primitive_part(self) -> "IntegerFunctional":
        g = content(self.linear)
        if g == 0:
            raise ValueError("zero functional")
        return IntegerFunctional(self.a // g, self.b // g, self.c // g, self.k)


# ---------------------------------------------------------------------------
# Affine hull and convex hull membership, exact.


def affine_hull_equations(cfg: PointConfiguration) -> list[tuple[Point, int]]:
    """Equations (n, c) with n . x = c holding on the affine hull of cfg.

    Returns 3 - dim independent integer equations (empty for dim 3).
    """
    p0 = cfg.points[0]
    diffs = [sub(p, p0) for p in cfg.points[1:]]
    dim = cfg.dim
    if dim == 3:
        return []
    if dim == 0:
        return [((1, 0, 0), p0[0]), ((0, 1, 0), p0[1]), ((0, 0, 1), p0[2])]
    if dim == 2:
        for u, v in combinations(diffs, 2):
            n = cross(u, v)
            if n != (0, 0, 0):
                n = primitive(n)
                return [(n, dot(n, p0))]
        raise AssertionError("dim 2 configuration without a normal")
    # dim == 1: two independent normals of the primitive direction
    d = next(primitive(v) for v in diffs if v != (0, 0, 0))
    normals = []
    for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        n = cross(d, e)
        if n != (0, 0, 0):
            n = primitive(n)
            if all(cross(n, m) != (0, 0, 0) for m, _ in normals):
                normals.append((n, dot(n, p0)))
        if len(normals) == 2:
            break
    return normals


def facet_inequalities(cfg: PointConfiguration) -> list[tuple[Point, int]]:
    """Inequalities (n, c) with n . x <= c describing conv(cfg) inside its
    affine hull.

    Brute-force over point triples (dim 3) or pairs (dim 2) or the two
    endpoints (dim 1); fine at the sizes this library works with.
    """
    pts = cfg.points
    dim = cfg.dim
    ineqs: list[tuple[Point, int]] = []
    seen: set[tuple[Point, int]] = set()
    if dim == 3:
        for i, j, k in combinations(range(len(pts)), 3):
            n = cross(sub(pts[j], pts[i]), sub(pts[k], pts[i]))
            if n == (0, 0, 0):
                continue
            n = primitive(n)
            c = dot(n, pts[i])
            vals = [dot(n, p) for p in pts]
            if max(vals) <= c:
                key = (n, c)
            elif min(vals) >= c:
                key = ((-n[0], -n[1], -n[2]), -c)
            else:
                continue
            if key not in seen:
                seen.add(key)
                ineqs.append(key)
    elif dim == 2:
        (nu, _), = affine_hull_equations(cfg)
        for i, j in combinations(range(len(pts)), 2):
            e = sub(pts[j], pts[i])
            if e == (0, 0, 0):
                continue
            n = cross(nu, e)
            if n == (0, 0, 0):
                continue
            n = primitive(n)
            c = dot(n, pts[i])
            vals = [dot(n, p) for p in pts]
            if max(vals) <= c:
                key = (n, c)
            elif min(vals) >= c:
                key = ((-n[0], -n[1], -n[2]), -c)
            else:
                continue
            if key not in seen:
                seen.add(key)
                ineqs.append(key)
    elif dim == 1:
        p0 = pts[0]
        d = next(primitive(sub(p, p0)) for p in pts if p != p0)
        vals = [dot(d, p) for p in pts]
        ineqs.append((d, max(vals)))
        ineqs.append(((-d[0], -d[1], -d[2]), -min(vals)))
    return ineqs


def hull_contains(cfg: PointConfiguration, q: Sequence) -> bool:
    """Exact membership of a (rational) point in conv(cfg); boundary counts."""
    qq = as_rational_point(q)
    for n, c in affine_hull_equations(cfg):
        if dot(n, qq) != c:
            return False
    for n, c in facet_inequalities(cfg):
        if dot(n, qq) > c:
            return False
    return True


def barycentric_in_simplex(
    simplex: Sequence[Point], q: Sequence
) -> tuple[Fraction, ...] | None:
    """Barycentric coordinates of q in a full-dimensional tetrahedron,
    or None if q is outside.  Independent of the facet-based membership path.
    """
    p1, p2, p3, p4 = simplex
    d = signed_tetra_volume(p1, p2, p3, p4)
    if d == 0:
        raise ValueError("degenerate simplex")
    qq = as_rational_point(q)
    lams = []
    corners = [p1, p2, p3, p4]
    for i in range(4):
        repl = list(corners)
        repl[i] = qq
        di = _signed_volume_rational(*repl)
        lam = Fraction(di, d)
        if lam < 0:
            return None
        lams.append(lam)
    return tuple(lams)


def _signed_volume_rational(p1, p2, p3, p4):
    def s(a, b):
        return (a[0] - b[0], a[1] - b[1], a[2] - b[2])

    r0, r1, r2 = s(p2, p1), s(p3, p1), s(p4, p1)
    return (
        r0[0] * (r1[1] * r2[2] - r1[2] * r2[1])
        - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0])
        + r0[2] * (r1[0] * r2[1] - r1[1] * r2[0])
    )


def bounding_box(points: Sequence[Point]) -> tuple[Point, Point]:
    lo = tuple(min(p[i] for p in points) for i in range(3))
    hi = tuple(max(p[i] for p in points) for i in range(3))
    return lo, hi


def lattice_points_in_hull(cfg: PointConfiguration) -> PointConfiguration:
    """All integer points of conv(cfg), in lexicographic (x, y, z) order."""
    eqs = affine_hull_equations(cfg)
    ineqs = facet_inequalities(cfg)
    lo, hi = bounding_box(cfg.points)
    found = []
    for x in range(lo[0], hi[0] + 1):
        for y in range(lo[1], hi[1] + 1):
            for z in range(lo[2], hi[2] + 1):
                p = (x, y, z)
                if any(dot(n, p) != c for n, c in eqs):
                    continue
                if any(dot(n, p) > c for n, c in ineqs):
                    continue
                found.append(p)
    return PointConfiguration(found)


def hull_lattice_size(cfg: PointConfiguration) -> int:
    return len(lattice_points_in_hull(cfg))


def vertices(cfg: PointConfiguration) -> list[Point]:
    """Extreme points of conv(cfg), in stored order."""
    out = []
    for i, p in enumerate(cfg.points):
        rest = [q for j, q in enumerate(cfg.points) if j != i]
        if not rest:
            return [p]
        if not hull_contains(PointConfiguration(rest), p):
            out.append(p)
    return out


# ---------------------------------------------------------------------------
# Integer linear algebra helpers.


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a x + b y = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q2 = old_r // r
        old_r, r = r, old_r - q2 * r
        old_s, s = s, old_s - q2 * s
        old_t, t = t, old_t - q2 * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _matmul3(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )


def unimodular_inverse3(m) -> tuple[tuple[int, int, int], ...]:
    d = det3(*m)
    if d not in (1, -1):
        raise ValueError("matrix is not unimodular")
    adj = adjugate3(m)
    return tuple(tuple(adj[i][j] * d for j in range(3)) for i in range(3))


def complete_to_unimodular_row(v: Point) -> tuple[tuple[int, int, int], ...]:
    """A 3x3 integer matrix of det +-1 whose third row is the primitive v.

    Used to change coordinates so that the functional v . x becomes the z
    coordinate.
    """
    if content(v) != 1:
        raise ValueError("vector must be primitive")
    a, b, c = v
    g, x, y = extended_gcd(a, b)
    if g == 0:
        # v = (0, 0, +-1)
        return ((1, 0, 0), (0, 1, 0), (0, 0, c))
    # u1 maps v to (g, 0, c); u2 maps (g, 0, c) to (1, 0, 0)
    u1 = ((x, y, 0), (-b // g, a // g, 0), (0, 0, 1))
    _, s, t = extended_gcd(g, c)
    u2 = ((s, 0, t), (0, 1, 0), (-c, 0, g))
    u = _matmul3(u2, u1)
    w = unimodular_inverse3(u)  # first column of w is v
    # matrix with rows = (col2(w), col3(w), v); its third row is v
    rows = (
        (w[0][1], w[1][1], w[2][1]),
        (w[0][2], w[1][2], w[2][2]),
        v,
    )
    assert det3(*rows) in (1, -1)
    return rows


def row_hnf(rows: list[list[int]]) -> tuple[tuple[int, ...], ...]:
    """Row-style Hermite normal form under integer row operations.

    Pivots positive, entries below a pivot zero, entries above reduced into
    [0, pivot).  Unique canonical form of the row space orbit under
    left multiplication by GL(n, Z).
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivot_row = 0
    for col in range(ncols):
        if pivot_row >= nrows:
            break
        # find a nonzero entry in this column at or below pivot_row
        nz = [i for i in range(pivot_row, nrows) if m[i][col] != 0]
        if not nz:
            continue
        # gcd elimination within the column
        while len(nz) > 1:
            nz.sort(key=lambda i: abs(m[i][col]))
            i0 = nz[0]
            for i in nz[1:]:
                q = m[i][col] // m[i0][col]
                for j in range(ncols):
                    m[i][j] -= q * m[i0][j]
            nz = [i for i in range(pivot_row, nrows) if m[i][col] != 0]
        i0 = nz[0]
        m[pivot_row], m[i0] = m[i0], m[pivot_row]
        if m[pivot_row][col] < 0:
            m[pivot_row] = [-x for x in m[pivot_row]]
        piv = m[pivot_row][col]
        for i in range(pivot_row):
            q = m[i][col] // piv
            for j in range(ncols):
                m[i][j] -= q * m[pivot_row][j]
        pivot_row += 1
    return tuple(tuple(r) for r in m)
