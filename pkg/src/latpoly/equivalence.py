"""Deciding Z-equivalence of point configurations.

Two configurations are Z-equivalent when an integer affine map of
determinant +-1 carries one lattice-point set onto the other.  The search
anchors the first four affinely independent points of A and tries every
ordered 4-tuple of B as their image; the forced affine map is accepted when
it is integral, unimodular and a set bijection.  Sound and complete for the
small sizes (<= 8 points) this library targets.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from .core import (
    Point,
    PointConfiguration,
    UnimodularAffineMap,
    det3,
    independent_quadruple,
    row_hnf,
    sub,
)


def _solve_affine(
    anchors_a: list[Point], anchors_b: list[Point]
) -> UnimodularAffineMap | None:
    """The unique affine map sending anchors_a[i] -> anchors_b[i], if it is
    integral with determinant +-1; anchors_a must be affinely independent."""
    a0 = anchors_a[0]
    b0 = anchors_b[0]
    da = [sub(p, a0) for p in anchors_a[1:]]
    db = [sub(p, b0) for p in anchors_b[1:]]
    d = det3(*da)
    if d == 0:
        raise ValueError("anchor points are affinely dependent")
    # M @ da_j = db_j  =>  M = DB @ DA^{-1}; columns of DA are da_j
    # DA^{-1} = adj(DA) / det with DA as a column matrix
    da_cols = tuple(tuple(da[j][i] for j in range(3)) for i in range(3))
    from .core import adjugate3

    adj = adjugate3(da_cols)
    rows = []
    for i in range(3):
        row = []
        for j in range(3):
            num = sum(db[k][i] * adj[k][j] for k in range(3))
            if num % d:
                return None
            row.append(num // d)
        rows.append(tuple(row))
    linear = tuple(rows)
    if det3(*linear) not in (1, -1):
        return None
    t = tuple(
        b0[i] - sum(linear[i][j] * a0[j] for j in range(3)) for i in range(3)
    )
    return UnimodularAffineMap(linear, t)


def map_from_corresponding_points(
    A: PointConfiguration, B: PointConfiguration
) -> UnimodularAffineMap | None:
    """The unique affine map matching A to B in stored order, if it exists,
    is integral and has determinant +-1.

    Anchored on the first four affinely independent points of A; the map
    must send every remaining point to its counterpart.
    """
    if A.dim < 3 or B.dim < 3:
        raise ValueError("both configurations must be 3-dimensional")
    if len(A) != len(B):
        return None
    idx = independent_quadruple(A.points)
    m = _solve_affine([A.points[i] for i in idx], [B.points[i] for i in idx])
    if m is None:
        return None
    if all(m.apply(p) == q for p, q in zip(A.points, B.points)):
        return m
    return None


def z_equivalent(
    A: PointConfiguration, B: PointConfiguration
) -> UnimodularAffineMap | None:
    """A witness map with m(A) = B as sets, or None.

    Determinant -1 maps count: Z-equivalence only asks that the lattice be
    preserved, and reflections do preserve it.
    """
    if A.dim < 3 or B.dim < 3:
        raise ValueError("both configurations must be 3-dimensional")
    if len(A) != len(B):
        return None
    idx = independent_quadruple(A.points)
    anchors_a = [A.points[i] for i in idx]
    bset = B.as_set()
    aset = A.as_set()
    bpts = B.points
    n = len(bpts)
    for choice in permutations(range(n), 4):
        anchors_b = [bpts[i] for i in choice]
        m = _solve_affine(anchors_a, anchors_b)
        if m is None:
            continue
        if {m.apply(p) for p in aset} == bset:
            return m
    return None


def canonical_key(A: PointConfiguration) -> bytes:
    """A byte string equal for two configurations iff they are Z-equivalent.

    Minimizes, over all orderings of the points, the Hermite normal form of
    the matrix of differences from the first point.  Left multiplication by
    GL(3, Z) is exactly the unimodular linear action, and leading with each
    point kills the translation, so the minimum is a class invariant.
    """
    if A.dim != 3:
        raise ValueError("canonical key needs a 3-dimensional configuration")
    if len(A) > 8:
        raise ValueError("canonical key is only supported for <= 8 points")
    best: tuple | None = None
    pts = A.points
    for order in permutations(range(len(pts))):
        p0 = pts[order[0]]
        cols = [sub(pts[i], p0) for i in order[1:]]
        # rows of the matrix are x, y, z coordinates across the points
        mat = [[c[i] for c in cols] for i in range(3)]
        h = row_hnf(mat)
        if best is None or h < best:
            best = h
    flat = ",".join(str(e) for row in best for e in row)
    return flat.encode("ascii")
