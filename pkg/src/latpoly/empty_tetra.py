"""Empty tetrahedra: emptiness tests, the T(p, q) normal form, vertex-moving
maps, the superlattice Lambda(p, q) and its fundamental rectangle.

An empty tetrahedron has integer vertices and no other integer points.
Every one of volume q is equivalent to
T(p, q) = conv{(0,0,0), (1,0,0), (0,0,1), (p,q,1)} with gcd(p, q) = 1, and
T(p, q) ~ T(p', q) exactly when p' = +-p^{+-1} (mod q).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import gcd

from .core import (
    Point,
    PointConfiguration,
    RationalPoint,
    UnimodularAffineMap,
    adjugate3,
    as_rational_point,
    content,
    cross,
    det3,
    dot,
    extended_gcd,
    lattice_points_in_hull,
    sub,
    tetra_volume,
)
from .equivalence import _solve_affine, z_equivalent


def standard_tpq(p: int, q: int) -> PointConfiguration:
    return PointConfiguration([(0, 0, 0), (1, 0, 0), (0, 0, 1), (p, q, 1)])


def tpq_orbit(p: int, q: int) -> frozenset[int]:
    """The parameters in 1..q equivalent to p: {+-p^{+-1} mod q}."""
    if q == 1:
        return frozenset({1})
    if gcd(p, q) != 1:
        raise ValueError("p and q must be coprime")
    pinv = pow(p, -1, q)
    reps = set()
    for r in (p % q, (-p) % q, pinv, (-pinv) % q):
        reps.add(r if r != 0 else q)
    return frozenset(reps)


@dataclass(frozen=True)
class TpqClass:
    """Canonical White parameters of an empty tetrahedron class."""

    p: int
    q: int

    def __post_init__(self):
        if self.q < 1 or not (1 <= self.p <= self.q):
            raise ValueError("need 1 <= p <= q")
        if gcd(self.p, self.q) != 1:
            raise ValueError("p and q must be coprime")
        if self.p != min(tpq_orbit(self.p, self.q)):
            raise ValueError(f"p={self.p} is not the canonical orbit member")

    @classmethod
    def canonical(cls, p: int, q: int) -> "TpqClass":
        return cls(min(tpq_orbit(p, q)), q)

    def representative(self) -> PointConfiguration:
        return standard_tpq(self.p, self.q)


def is_empty_tetra_bruteforce(p1: Point, p2: Point, p3: Point, p4: Point) -> bool:
    """True iff the hull contains no lattice point besides the 4 vertices."""
    if tetra_volume(p1, p2, p3, p4) == 0:
        raise ValueError("points are coplanar")
    cfg = PointConfiguration([p1, p2, p3, p4])
    return len(lattice_points_in_hull(cfg)) == 4


def apex_emptiness_criterion(a: int, b: int, q: int) -> bool:
    """Emptiness of conv{(0,0,0), (1,0,0), (0,1,0), (a,b,q)} by congruences.

    The tetrahedron is empty iff at least one of:
      (i)   a = 1 (mod q) and gcd(b, q) = 1,
      (ii)  b = 1 (mod q) and gcd(a, q) = 1,
      (iii) a + b = 0 (mod q) and gcd(a, q) = 1.
    """
    if q == 0:
        raise ValueError("q must be nonzero")
    q = abs(q)
    if a % q == 1 % q and gcd(b, q) == 1:
        return True
    if b % q == 1 % q and gcd(a, q) == 1:
        return True
    if (a + b) % q == 0 and gcd(a, q) == 1:
        return True
    return False


def _unit_height_vector(n: Point) -> Point:
    """An integer vector w with n . w = 1, for primitive n."""
    g, x, y = extended_gcd(n[0], n[1])
    if g == 0:
        return (0, 0, 1 if n[2] > 0 else -1)
    _, s, t = extended_gcd(g, n[2])
    w = (x * s, y * s, t)
    assert dot(n, w) == 1
    return w


def _facet_to_standard_triangle(
    t1: Point, t2: Point, t3: Point, apex: Point
) -> tuple[int, int, int]:
    """Send a unimodular facet onto (0,0,0), (1,0,0), (0,1,0) by a
    unimodular affine map; return the image (a, b, q), q > 0, of the apex."""
    n = cross(sub(t2, t1), sub(t3, t1))
    if n == (0, 0, 0):
        raise ValueError("degenerate facet")
    if content(n) != 1:
        raise ValueError("facet triangle is not unimodular")
    w = _unit_height_vector(n)
    # a virtual fourth anchor off the plane pins down the whole map
    m = _solve_affine(
        [t1, t2, t3, (t1[0] + w[0], t1[1] + w[1], t1[2] + w[2])],
        [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)],
    )
    assert m is not None
    a, b, q = m.apply(apex)
    if q < 0:
        q = -q  # reflect z; the base triangle is fixed
    return a, b, q


def is_empty_tetra_by_criterion(p1: Point, p2: Point, p3: Point, p4: Point) -> bool:
    """Emptiness via the congruence criterion after normalizing one facet.

    A facet whose triangle is not unimodular already carries an extra
    lattice point, so the tetrahedron is not empty in that case.
    """
    if tetra_volume(p1, p2, p3, p4) == 0:
        raise ValueError("points are coplanar")
    pts = (p1, p2, p3, p4)
    for omit in range(4):
        tri = [p for i, p in enumerate(pts) if i != omit]
        n = cross(sub(tri[1], tri[0]), sub(tri[2], tri[0]))
        if content(n) != 1:
            return False
    a, b, q = _facet_to_standard_triangle(p1, p2, p3, p4)
    return apex_emptiness_criterion(a, b, q)


def classify_empty(
    p1: Point, p2: Point, p3: Point, p4: Point
) -> tuple[TpqClass, UnimodularAffineMap]:
    """Canonical T(p, q) class of an empty tetrahedron plus a witness map
    onto its standard representative."""
    if not is_empty_tetra_bruteforce(p1, p2, p3, p4):
        raise ValueError("tetrahedron is not empty")
    q = tetra_volume(p1, p2, p3, p4)
    cfg = PointConfiguration([p1, p2, p3, p4])
    for p in range(1, q + 1):
        if gcd(p, q) != 1 or p != min(tpq_orbit(p, q)):
            continue
        m = z_equivalent(cfg, standard_tpq(p, q))
        if m is not None:
            return TpqClass(p, q), m
    raise AssertionError("empty tetrahedron matched no T(p, q) class")


def vertex_to_origin_map(t: TpqClass, i: int) -> UnimodularAffineMap:
    """The explicit map t_i sending vertex i of the standard T(p, q) to the
    origin vertex; t_1 maps T(p, q) onto itself, t_2 and t_3 map it onto
    T(p', q) with p' the inverse of p mod q.

    Vertices are numbered 1 = (1,0,0), 2 = (0,0,1), 3 = (p,q,1).
    """
    p, q = t.p, t.q
    pp = pow(p, -1, q) if q > 1 else 1
    if i == 1:
        return UnimodularAffineMap(((-1, 0, p - 1), (0, -1, q), (0, 0, 1)), (1, 0, 0))
    if i == 2:
        return UnimodularAffineMap(
            ((pp, (-p * pp + 1) // q, 0), (q, -p, 0), (0, 0, -1)), (0, 0, 1)
        )
    if i == 3:
        return UnimodularAffineMap(
            ((-pp, (p * pp - 1) // q, 1 - pp), (-q, p, -q), (0, 0, -1)),
            (pp, q, 1),
        )
    raise ValueError("vertex index must be 1, 2 or 3")


def unimodular_automorphisms(
    p1: Point, p2: Point, p3: Point, p4: Point
) -> list[UnimodularAffineMap]:
    """All vertex permutations of a tetrahedron realized by integral affine
    maps of determinant +-1, found by trying all 24 permutations."""
    if tetra_volume(p1, p2, p3, p4) == 0:
        raise ValueError("not a tetrahedron")
    pts = [p1, p2, p3, p4]
    out = []
    for perm in permutations(pts):
        m = _solve_affine(pts, list(perm))
        if m is not None:
            out.append(m)
    return out


@dataclass(frozen=True)
class LambdaPQ:
    """The superlattice Z^3 + <(1/q, -1/q, p/q)> of index q."""

    p: int
    q: int

    def __post_init__(self):
        if self.q < 1 or gcd(self.p, self.q) != 1:
            raise ValueError("need q >= 1 and gcd(p, q) = 1")

    @property
    def generator(self) -> RationalPoint:
        q = self.q
        return (Fraction(1, q), Fraction(-1, q), Fraction(self.p, q))


def lambda_contains(l: LambdaPQ, v) -> bool:
    """Membership in Lambda(p, q), decided in integers after scaling by q."""
    x, y, z = as_rational_point(v)
    q, p = l.q, l.p
    qx, qy, qz = x * q, y * q, z * q
    if qx.denominator != 1 or qy.denominator != 1 or qz.denominator != 1:
        return False
    X, Y, Z = int(qx), int(qy), int(qz)
    # v = (X/q) * generator + integer vector needs these two congruences
    return (X + Y) % q == 0 and (p * X - Z) % q == 0


def lambda_index(l: LambdaPQ) -> int:
    """[Lambda(p, q) : Z^3], counted as distinct generator multiples mod Z^3."""
    residues = set()
    for t in range(l.q):
        residues.add(tuple((t * c) % 1 for c in l.generator))
    return len(residues)


def fundamental_rectangle_check(p: int, q: int) -> tuple[bool, bool]:
    """(in_t2, in_t1) for the Lambda(p, q) point of height 1/q inside the
    fundamental rectangle conv{(0,0,0), (0,0,1), (1,-1,0), (1,-1,1)}.

    Projected to the (x, z) plane the two triangles are
    t1 = conv{(0,0), (1,0), (1,1/2)} and t2 = conv{(0,0), (1,0), (1/2,1/2)};
    the test point is (p'/q, 1/q) with p' the inverse of p mod q.
    """
    if q < 2:
        raise ValueError("need q >= 2")
    if gcd(p, q) != 1:
        raise ValueError("p and q must be coprime")
    pp = pow(p, -1, q)
    pt = (Fraction(pp, q), Fraction(1, q))
    in_t2 = _in_triangle_2d(pt, ((0, 0), (1, 0), (Fraction(1, 2), Fraction(1, 2))))
    in_t1 = _in_triangle_2d(pt, ((0, 0), (1, 0), (1, Fraction(1, 2))))
    return in_t2, in_t1


def _area2(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _in_triangle_2d(pt, tri) -> bool:
    total = _area2(*tri)
    if total == 0:
        raise ValueError("degenerate triangle")
    for i in range(3):
        s = _area2(tri[i], tri[(i + 1) % 3], pt)
        if s != 0 and (s > 0) != (total > 0):
            return False
    return True


def verify_change_of_coordinates(p: int, q: int) -> bool:
    """Check that the unit tetrahedron with the lattice Lambda(p, q) realizes
    the type T(p, q): the linear map sending the standard T(p, q) vertices
    o, e1, e3, (p,q,1) to o, e3, e1, e2 pushes Z^3 exactly onto Lambda(p, q).
    """
    if not (1 <= p <= q) or gcd(p, q) != 1:
        raise ValueError("need 1 <= p <= q coprime")
    src = [(1, 0, 0), (0, 0, 1), (p, q, 1)]
    dst = [(0, 0, 1), (1, 0, 0), (0, 1, 0)]
    cols_src = tuple(tuple(src[j][i] for j in range(3)) for i in range(3))
    d = det3(*cols_src)
    adj = adjugate3(cols_src)
    # L = DST @ SRC^{-1}, entries as exact fractions
    lam = [
        [Fraction(sum(dst[k][i] * adj[k][j] for k in range(3)), d) for j in range(3)]
        for i in range(3)
    ]
    l = LambdaPQ(p, q)
    # forward: images of the Z^3 basis lie in Lambda(p, q)
    for j in range(3):
        if not lambda_contains(l, (lam[0][j], lam[1][j], lam[2][j])):
            return False
    # backward: preimages of Lambda generators are integral
    inv = _invert_fraction_matrix(lam)
    for w in [(1, 0, 0), (0, 1, 0), (0, 0, 1), l.generator]:
        ww = as_rational_point(w)
        pre = tuple(
            inv[i][0] * ww[0] + inv[i][1] * ww[1] + inv[i][2] * ww[2]
            for i in range(3)
        )
        if any(c.denominator != 1 for c in pre):
            return False
    return True


def _invert_fraction_matrix(m):
    d = (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
    if d == 0:
        raise ValueError("singular matrix")
    inv = [[Fraction(0)] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            cof = (
                m[(j + 1) % 3][(i + 1) % 3] * m[(j + 2) % 3][(i + 2) % 3]
                - m[(j + 1) % 3][(i + 2) % 3] * m[(j + 2) % 3][(i + 1) % 3]
            )
            inv[i][j] = cof / d
    return inv
