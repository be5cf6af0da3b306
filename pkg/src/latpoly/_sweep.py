"""Compiled exhaustive sweeps over small coordinate boxes.

Two kernels, both enumerating point subsets in lexicographic DFS order with
translation normalization (minimum coordinate 0 on every axis) and pruning by
the rule that any lattice point interior to a segment between two chosen
points must itself be chosen (it is lexicographically between them, so it
would already have been visited):

- size-5 sweep over [0,4]^3: finds every 5-point-hull configuration, certifies
  width 1 with a small-functional search where possible, and exports the rest
  (in particular every width->=2 configuration) for exact processing.
- empty-tetrahedron sweep over a translated [-3,3]^3: finds every empty
  tetrahedron up to translation, certifies width 1 where a small functional
  works, and exports the rest.

Emptiness inside the kernel is decided in O(1) by facet unimodularity plus
the congruence criterion; the pure-Python oracle in empty_tetra validates the
criterion independently.
"""

from __future__ import annotations

from math import gcd

import numpy as np
from numba import njit


def _box_points(side: int) -> np.ndarray:
    pts = [(x, y, z) for x in range(side) for y in range(side) for z in range(side)]
    return np.array(pts, dtype=np.int64)


def _segment_tables(coords: np.ndarray):
    """For each ordered pair, the interior lattice points of the segment."""
    n = len(coords)
    index = {tuple(p): i for i, p in enumerate(coords.tolist())}
    max_int = 0
    lists = {}
    for i in range(n):
        for j in range(i + 1, n):
            d = coords[j] - coords[i]
            g = gcd(gcd(abs(int(d[0])), abs(int(d[1]))), abs(int(d[2])))
            if g <= 1:
                continue
            step = d // g
            inner = []
            for k in range(1, g):
                q = coords[i] + step * k
                inner.append(index[tuple(int(c) for c in q)])
            lists[(i, j)] = inner
            max_int = max(max_int, len(inner))
    cnt = np.zeros((n, n), dtype=np.int8)
    pts = np.zeros((n, n, max(max_int, 1)), dtype=np.int16)
    for (i, j), inner in lists.items():
        cnt[i, j] = cnt[j, i] = len(inner)
        for k, t in enumerate(inner):
            pts[i, j, k] = pts[j, i, k] = t
    return cnt, pts


def _witness_candidates(bound: int) -> np.ndarray:
    """Primitive functionals up to sign with coefficients in [-bound, bound],
    sorted small-to-large so the certifying search exits early."""
    out = []
    rng = range(-bound, bound + 1)
    for a in rng:
        for b in rng:
            for c in rng:
                v = (a, b, c)
                if v == (0, 0, 0):
                    continue
                first = next(e for e in v if e != 0)
                if first < 0:
                    continue
                if gcd(gcd(abs(a), abs(b)), abs(c)) != 1:
                    continue
                out.append(v)
    out.sort(key=lambda v: (max(abs(e) for e in v), sum(abs(e) for e in v), v))
    return np.array(out, dtype=np.int64)


@njit(cache=True)
def _seg_free(a, b, cnt, pts, inset):
    for k in range(cnt[a, b]):
        if inset[pts[a, b, k]] == 0:
            return False
    return True


@njit(cache=True)
def _hull_has_extras(p, coords_side):
    """True if conv of the 5 rows of p contains a lattice point besides them."""
    # supporting planes from point triples
    normals = np.empty((10, 3), np.int64)
    offs = np.empty(10, np.int64)
    nf = 0
    for a in range(5):
        for b in range(a + 1, 5):
            for c in range(b + 1, 5):
                ux, uy, uz = p[b, 0] - p[a, 0], p[b, 1] - p[a, 1], p[b, 2] - p[a, 2]
                vx, vy, vz = p[c, 0] - p[a, 0], p[c, 1] - p[a, 1], p[c, 2] - p[a, 2]
                nx = uy * vz - uz * vy
                ny = uz * vx - ux * vz
                nz = ux * vy - uy * vx
                if nx == 0 and ny == 0 and nz == 0:
                    continue
                pos = 0
                neg = 0
                for k in range(5):
                    if k == a or k == b or k == c:
                        continue
                    s = (
                        nx * (p[k, 0] - p[a, 0])
                        + ny * (p[k, 1] - p[a, 1])
                        + nz * (p[k, 2] - p[a, 2])
                    )
                    if s > 0:
                        pos += 1
                    elif s < 0:
                        neg += 1
                if pos > 0 and neg > 0:
                    continue
                if pos > 0:
                    nx, ny, nz = -nx, -ny, -nz
                normals[nf, 0] = nx
                normals[nf, 1] = ny
                normals[nf, 2] = nz
                offs[nf] = nx * p[a, 0] + ny * p[a, 1] + nz * p[a, 2]
                nf += 1
    x0, x1 = p[:, 0].min(), p[:, 0].max()
    y0, y1 = p[:, 1].min(), p[:, 1].max()
    z0, z1 = p[:, 2].min(), p[:, 2].max()
    for x in range(x0, x1 + 1):
        for y in range(y0, y1 + 1):
            for z in range(z0, z1 + 1):
                own = False
                for k in range(5):
                    if p[k, 0] == x and p[k, 1] == y and p[k, 2] == z:
                        own = True
                        break
                if own:
                    continue
                inside = True
                for f in range(nf):
                    if normals[f, 0] * x + normals[f, 1] * y + normals[f, 2] * z > offs[f]:
                        inside = False
                        break
                if inside:
                    return True
    return False


@njit(cache=True)
def _small_width1(p, npts, wits):
    """Index of the first candidate functional with spread <= 1, or -1."""
    for w in range(wits.shape[0]):
        a, b, c = wits[w, 0], wits[w, 1], wits[w, 2]
        lo = a * p[0, 0] + b * p[0, 1] + c * p[0, 2]
        hi = lo
        for k in range(1, npts):
            v = a * p[k, 0] + b * p[k, 1] + c * p[k, 2]
            if v < lo:
                lo = v
            elif v > hi:
                hi = v
            if hi - lo > 1:
                break
        if hi - lo <= 1:
            return w
    return -1


@njit(cache=True)
def _sweep5(coords, cnt, pts, wits, out):
    n = coords.shape[0]
    inset = np.zeros(n, np.uint8)
    p = np.empty((5, 3), np.int64)
    total5 = 0
    cert1 = 0
    nout = 0
    for i1 in range(n):
        if coords[i1, 0] != 0:
            break
        inset[i1] = 1
        for i2 in range(i1 + 1, n):
            if not _seg_free(i1, i2, cnt, pts, inset):
                continue
            inset[i2] = 1
            for i3 in range(i2 + 1, n):
                if not (
                    _seg_free(i1, i3, cnt, pts, inset)
                    and _seg_free(i2, i3, cnt, pts, inset)
                ):
                    continue
                inset[i3] = 1
                for i4 in range(i3 + 1, n):
                    if not (
                        _seg_free(i1, i4, cnt, pts, inset)
                        and _seg_free(i2, i4, cnt, pts, inset)
                        and _seg_free(i3, i4, cnt, pts, inset)
                    ):
                        continue
                    inset[i4] = 1
                    for i5 in range(i4 + 1, n):
                        if not (
                            _seg_free(i1, i5, cnt, pts, inset)
                            and _seg_free(i2, i5, cnt, pts, inset)
                            and _seg_free(i3, i5, cnt, pts, inset)
                            and _seg_free(i4, i5, cnt, pts, inset)
                        ):
                            continue
                        p[0] = coords[i1]
                        p[1] = coords[i2]
                        p[2] = coords[i3]
                        p[3] = coords[i4]
                        p[4] = coords[i5]
                        # translation normalization on y and z (x: i1 lex-min)
                        if p[:, 1].min() != 0 or p[:, 2].min() != 0:
                            continue
                        # full-dimensionality
                        dim3 = False
                        for omit in range(5):
                            m = np.empty((3, 3), np.int64)
                            base = -1
                            row = 0
                            for k in range(5):
                                if k == omit:
                                    continue
                                if base < 0:
                                    base = k
                                    continue
                                m[row, 0] = p[k, 0] - p[base, 0]
                                m[row, 1] = p[k, 1] - p[base, 1]
                                m[row, 2] = p[k, 2] - p[base, 2]
                                row += 1
                            det = (
                                m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
                                - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
                                + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0])
                            )
                            if det != 0:
                                dim3 = True
                                break
                        if not dim3:
                            continue
                        if _hull_has_extras(p, 5):
                            continue
                        total5 += 1
                        if _small_width1(p, 5, wits) >= 0:
                            cert1 += 1
                        else:
                            if nout < out.shape[0]:
                                for k in range(5):
                                    out[nout, 3 * k] = p[k, 0]
                                    out[nout, 3 * k + 1] = p[k, 1]
                                    out[nout, 3 * k + 2] = p[k, 2]
                            nout += 1
                    inset[i4] = 0
                inset[i3] = 0
            inset[i2] = 0
        inset[i1] = 0
    return total5, cert1, nout


def size5_box_sweep(side: int = 5, witness_bound: int = 2):
    """All translation-normalized 5-point-hull configurations in a cube of the
    given side.

    Returns (total, certified_width1, exported) where exported configurations
    are those without a small width-1 certificate; every configuration of
    width >= 2 is among them.
    """
    coords = _box_points(side)
    cnt, pts = _segment_tables(coords)
    wits = _witness_candidates(witness_bound)
    out = np.zeros((400000, 15), dtype=np.int16)
    total5, cert1, nout = _sweep5(coords, cnt, pts, wits, out)
    if nout > out.shape[0]:
        raise RuntimeError(f"export buffer overflow: {nout} rows")
    exported = [
        tuple(tuple(int(e) for e in out[r, 3 * k : 3 * k + 3]) for k in range(5))
        for r in range(nout)
    ]
    return total5, cert1, exported


@njit(cache=True)
def _gcd64(a, b):
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


@njit(cache=True)
def _egcd64(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


@njit(cache=True)
def _tetra_empty(p):
    """Exact emptiness of the tetrahedron with vertex rows p (4x3).

    All four facet triangles must be unimodular; then one facet is mapped to
    the standard triangle and the congruence criterion decides.
    """
    for omit in range(4):
        idx0 = -1
        idx1 = -1
        idx2 = -1
        for k in range(4):
            if k == omit:
                continue
            if idx0 < 0:
                idx0 = k
            elif idx1 < 0:
                idx1 = k
            else:
                idx2 = k
        ux, uy, uz = (
            p[idx1, 0] - p[idx0, 0],
            p[idx1, 1] - p[idx0, 1],
            p[idx1, 2] - p[idx0, 2],
        )
        vx, vy, vz = (
            p[idx2, 0] - p[idx0, 0],
            p[idx2, 1] - p[idx0, 1],
            p[idx2, 2] - p[idx0, 2],
        )
        nx = uy * vz - uz * vy
        ny = uz * vx - ux * vz
        nz = ux * vy - uy * vx
        if _gcd64(_gcd64(nx, ny), nz) != 1:
            return False
    # normalize the facet {0,1,2}, apex 3
    ux, uy, uz = p[1, 0] - p[0, 0], p[1, 1] - p[0, 1], p[1, 2] - p[0, 2]
    vx, vy, vz = p[2, 0] - p[0, 0], p[2, 1] - p[0, 1], p[2, 2] - p[0, 2]
    nx = uy * vz - uz * vy
    ny = uz * vx - ux * vz
    nz = ux * vy - uy * vx
    g, x, y = _egcd64(nx, ny)
    if g == 0:
        wx, wy = 0, 0
        wz = 1 if nz > 0 else -1
    else:
        g2, s, t = _egcd64(g, nz)
        wx, wy, wz = x * s, y * s, t
    # columns u, v, w have determinant n.w = 1; inverse = adjugate
    m00 = vy * wz - wy * vz
    m01 = wx * vz - vx * wz
    m02 = vx * wy - wx * vy
    m10 = wy * uz - uy * wz
    m11 = ux * wz - wx * uz
    m12 = wx * uy - ux * wy
    m20 = uy * vz - vy * uz
    m21 = vx * uz - ux * vz
    m22 = ux * vy - vx * uy
    dx, dy, dz = p[3, 0] - p[0, 0], p[3, 1] - p[0, 1], p[3, 2] - p[0, 2]
    a = m00 * dx + m01 * dy + m02 * dz
    b = m10 * dx + m11 * dy + m12 * dz
    q = m20 * dx + m21 * dy + m22 * dz
    if q < 0:
        q = -q
    if q == 0:
        return False
    am = a % q
    if am < 0:
        am += q
    bm = b % q
    if bm < 0:
        bm += q
    one = 1 % q
    if am == one and _gcd64(bm, q) == 1:
        return True
    if bm == one and _gcd64(am, q) == 1:
        return True
    if (am + bm) % q == 0 and _gcd64(am, q) == 1:
        return True
    return False


@njit(cache=True)
def _sweep_empty(coords, prim, wits, out):
    n = coords.shape[0]
    p = np.empty((4, 3), np.int64)
    n_empty = 0
    cert1 = 0
    nout = 0
    for i1 in range(n):
        if coords[i1, 0] != 0:
            break
        for i2 in range(i1 + 1, n):
            if not prim[i1, i2]:
                continue
            for i3 in range(i2 + 1, n):
                if not (prim[i1, i3] and prim[i2, i3]):
                    continue
                for i4 in range(i3 + 1, n):
                    if not (prim[i1, i4] and prim[i2, i4] and prim[i3, i4]):
                        continue
                    p[0] = coords[i1]
                    p[1] = coords[i2]
                    p[2] = coords[i3]
                    p[3] = coords[i4]
                    if p[:, 1].min() != 0 or p[:, 2].min() != 0:
                        continue
                    if not _tetra_empty(p):
                        continue
                    n_empty += 1
                    if _small_width1(p, 4, wits) >= 0:
                        cert1 += 1
                    else:
                        if nout < out.shape[0]:
                            for k in range(4):
                                out[nout, 3 * k] = p[k, 0]
                                out[nout, 3 * k + 1] = p[k, 1]
                                out[nout, 3 * k + 2] = p[k, 2]
                        nout += 1
    return n_empty, cert1, nout


def empty_tetra_box_sweep(side: int = 7, witness_bound: int = 8):
    """All empty tetrahedra with vertices in a cube of the given side, up to
    translation (normalized to minimum coordinate 0 per axis).

    Returns (n_empty, certified_width1, exported) where exported tetrahedra
    lack a width-1 functional with coefficients up to witness_bound.
    """
    coords = _box_points(side)
    n = len(coords)
    prim = np.zeros((n, n), dtype=np.uint8)
    for i in range(n):
        d = coords - coords[i]
        g = np.gcd.reduce(np.abs(d), axis=1)
        prim[i] = g == 1
    wits = _witness_candidates(witness_bound)
    out = np.zeros((10000, 12), dtype=np.int16)
    n_empty, cert1, nout = _sweep_empty(coords, prim, wits, out)
    if nout > out.shape[0]:
        raise RuntimeError(f"export buffer overflow: {nout} rows")
    exported = [
        tuple(tuple(int(e) for e in out[r, 3 * k : 3 * k + 3]) for k in range(4))
        for r in range(nout)
    ]
    return n_empty, cert1, exported
