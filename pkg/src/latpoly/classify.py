"""Classification of lattice 3-polytopes with exactly five lattice points.

Every such polytope belongs to one of four width-1 families (two of them
parametric) or to one of nine width-2 classes.  This module classifies a
given configuration, and regenerates the census from first principles in two
independent ways: a structured search following the normal form
(standard empty tetrahedron at levels z = 0, 1 plus a fifth point at
z = -1 or -2) and a brute-force sweep over a coordinate box.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import gcd

from .core import (
    Point,
    PointConfiguration,
    UnimodularAffineMap,
    lattice_points_in_hull,
    tetra_volume,
)
from .empty_tetra import is_empty_tetra_bruteforce
from .equivalence import _solve_affine, canonical_key, z_equivalent
from .invariants import FivePointVector, Signature, five_point_vector, signature
from .width import lattice_width

FAMILY_W1_22 = "W1-(2,2)"
FAMILY_W1_21 = "W1-(2,1)"
FAMILY_W1_32 = "W1-(3,2)"
FAMILY_W1_31 = "W1-(3,1)"
FAMILY_W2_31 = "W2-(3,1)"
FAMILY_W2_41 = "W2-(4,1)"
FAMILY_UNSIZED5 = "UNSIZED5"

REP_W1_22: tuple[Point, ...] = ((0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1))
REP_W1_31: tuple[Point, ...] = ((0, 0, 0), (1, 0, 0), (0, 1, 0), (-1, -1, 0), (0, 0, 1))
REP_W2_31: tuple[Point, ...] = ((0, 0, 0), (1, 0, 0), (0, 1, 0), (-1, -1, 0), (1, 2, 3))

# the eight width-2 classes of signature (4,1): (volume vector, representative)
TABLE_W2_41: tuple[tuple[tuple[int, ...], tuple[Point, ...]], ...] = (
    ((-4, 1, 1, 1, 1), ((0, 0, 0), (1, 0, 0), (0, 0, 1), (1, 1, 1), (-2, -1, -2))),
    ((-5, 1, 1, 1, 2), ((0, 0, 0), (1, 0, 0), (0, 0, 1), (1, 2, 1), (-1, -1, -1))),
    ((-7, 1, 1, 2, 3), ((0, 0, 0), (1, 0, 0), (0, 0, 1), (1, 3, 1), (-1, -2, -1))),
    ((-11, 1, 3, 2, 5), ((0, 0, 0), (1, 0, 0), (0, 0, 1), (2, 5, 1), (-1, -2, -1))),
    ((-13, 3, 4, 1, 5), ((0, 0, 0), (1, 0, 0), (0, 0, 1), (2, 5, 1), (-1, -1, -1))),
    ((-17, 3, 5, 2, 7), ((0, 0, 0), (1, 0, 0), (0, 0, 1), (2, 7, 1), (-1, -2, -1))),
    ((-19, 5, 4, 3, 7), ((0, 0, 0), (1, 0, 0), (0, 0, 1), (3, 7, 1), (-2, -3, -1))),
    ((-20, 5, 5, 5, 5), ((0, 0, 0), (1, 0, 0), (0, 0, 1), (2, 5, 1), (-3, -5, -2))),
)


def rep_w1_21(p: int, q: int) -> tuple[Point, ...]:
    return ((0, 0, 0), (1, 0, 0), (0, 0, 1), (-1, 0, 0), (p, q, 1))


def rep_w1_32(a: int, b: int) -> tuple[Point, ...]:
    return ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (a, b, 1))


@dataclass(frozen=True)
class ClassRecord:
    family: str
    params: tuple
    signature: Signature | None
    width: int | None
    vector: FivePointVector | None
    representative: PointConfiguration
    witness: UnimodularAffineMap | None


@dataclass(frozen=True)
class StructureForm:
    """Normal form with the largest empty subtetrahedron in standard position
    (levels z = 0, 0, 1, 1) and the fifth point at z = h."""

    levels: tuple[int, int, int, int, int]
    h: int
    normalized: PointConfiguration
    witness: UnimodularAffineMap


def _hull_points_or_none(cfg: PointConfiguration) -> PointConfiguration | None:
    full = lattice_points_in_hull(cfg)
    return full if len(full) == 5 else None


def classify_size5(cfg: PointConfiguration) -> ClassRecord:
    """The unique classification row for a 5-lattice-point 3-polytope, with a
    witness map onto the stored representative."""
    if cfg.dim < 3:
        raise ValueError("configuration must be 3-dimensional")
    full = _hull_points_or_none(cfg)
    if full is None:
        return ClassRecord(FAMILY_UNSIZED5, (), None, None, None, cfg, None)
    sig = signature(full)
    vec = five_point_vector(full)
    width = lattice_width(full).width
    st = sig.as_tuple()
    if st == (2, 2):
        return _match(full, FAMILY_W1_22, (), REP_W1_22)
    if st == (2, 1):
        q = max(abs(e) for e in vec.entries) // 2
        for p in range(0, q // 2 + 1):
            if gcd(p, q) != 1:
                continue
            rec = _try_match(full, FAMILY_W1_21, (p, q), rep_w1_21(p, q))
            if rec is not None:
                return rec
        raise AssertionError("no (2,1)-family parameters matched")
    if st == (3, 2):
        a, b = _recover_32_params(vec)
        return _match(full, FAMILY_W1_32, (a, b), rep_w1_32(a, b))
    if st == (3, 1):
        if width == 1:
            return _match(full, FAMILY_W1_31, (), REP_W1_31)
        return _match(full, FAMILY_W2_31, (), REP_W2_31)
    if st == (4, 1):
        key = tuple(sorted(abs(e) for e in vec.entries))
        for tvec, tpts in TABLE_W2_41:
            if tuple(sorted(abs(e) for e in tvec)) == key:
                return _match(full, FAMILY_W2_41, tvec, tpts)
        raise AssertionError(f"(4,1) volume vector {vec.entries} matches no class")
    raise AssertionError(f"impossible signature {st} for size 5")


def _match(cfg, family, params, rep_pts) -> ClassRecord:
    rec = _try_match(cfg, family, params, rep_pts)
    if rec is None:
        raise AssertionError(f"{family}{params}: witness search failed")
    return rec


def _try_match(cfg, family, params, rep_pts) -> ClassRecord | None:
    rep = PointConfiguration(list(rep_pts))
    m = z_equivalent(cfg, rep)
    if m is None:
        return None
    return ClassRecord(
        family,
        params,
        signature(rep),
        lattice_width(rep).width,
        five_point_vector(rep),
        rep,
        m,
    )


def _recover_32_params(vec: FivePointVector) -> tuple[int, int]:
    """(a, b) with 0 < a <= b, gcd 1, from the |entries| {a+b, a, b, 1, 1}."""
    mags = sorted((abs(e) for e in vec.entries), reverse=True)
    rest = list(mags[1:])
    for _ in range(2):
        rest.remove(1)
    a, b = sorted(rest)
    if a + b != mags[0] or a <= 0 or gcd(a, b) != 1:
        raise AssertionError(f"volume vector {vec.entries} not of (3,2) shape")
    return a, b


def structure_normalize(cfg: PointConfiguration) -> StructureForm:
    """Unimodular coordinates with the largest empty subtetrahedron standard
    at z-levels {0, 1} and the fifth point at height h in {-1, -2}."""
    if cfg.dim < 3:
        raise ValueError("configuration must be 3-dimensional")
    full = _hull_points_or_none(cfg)
    if full is None:
        raise ValueError("configuration must have exactly 5 lattice points")
    if lattice_width(full).width < 2:
        raise ValueError("structure form requires width >= 2")
    if signature(full).as_tuple() not in ((3, 1), (4, 1)):
        raise ValueError("structure form requires signature (3,1) or (4,1)")
    pts = full.points
    empties = []
    for omit in range(5):
        tet = [pts[i] for i in range(5) if i != omit]
        if tetra_volume(*tet) == 0:
            continue
        if is_empty_tetra_bruteforce(*tet):
            empties.append((tetra_volume(*tet), omit))
    empties.sort(key=lambda t: (-t[0], t[1]))
    best_vol = empties[0][0]
    # equal-volume empty subtetrahedra can normalize with either height, so
    # the height is made canonical: h = -1 whenever any choice achieves it
    fallback = None
    for q, omit in empties:
        if q < best_vol:
            break
        tet = [pts[i] for i in range(5) if i != omit]
        fifth = pts[omit]
        for perm in permutations(tet):
            for p in range(1, q + 1):
                if gcd(p, q) != 1:
                    continue
                m = _solve_affine(
                    list(perm), [(0, 0, 0), (1, 0, 0), (0, 0, 1), (p, q, 1)]
                )
                if m is None:
                    continue
                img5 = m.apply(fifth)
                if img5[2] in (-1, -2):
                    h = img5[2]
                    normalized = PointConfiguration(
                        [(0, 0, 1), (p, q, 1), (0, 0, 0), (1, 0, 0), img5]
                    )
                    form = StructureForm((1, 1, 0, 0, h), h, normalized, m)
                    if h == -1:
                        return form
                    if fallback is None:
                        fallback = form
    if fallback is not None:
        return fallback
    raise AssertionError("no structure normalization found")


# ---------------------------------------------------------------------------
# Census of width >= 2 classes.


def _structured_candidates(qmax: int = 12):
    """Candidate 5-point frames from the structure form: the standard empty
    tetrahedron at levels {0, 1} plus a fifth point at z = -1 or -2.

    The fifth-point ranges are the ones the classification proofs force: the
    two centroid positions for h = -2 and the (3,1) position for h = -1, and
    for signature (4,1) with h = -1 the constraints 0 < -b < q,
    0 < pb - qa <= q leave exactly one a for each b.
    """
    for q in range(1, qmax + 1):
        for p in range(1, q + 1):
            if gcd(p, q) != 1:
                continue
            base = [(0, 0, 0), (1, 0, 0), (0, 0, 1), (p, q, 1)]
            fifths = {(-p, -q, -2), (-p - 1, -q, -2), (-1, 0, -1)}
            for b in range(-(q - 1), 0):
                a = (p * b - 1) // q  # unique a with 0 < pb - qa <= q
                fifths.add((a, b, -1))
            for f in sorted(fifths):
                yield tuple(base + [f])


def enumerate_size5_width_ge2(
    qmax: int = 12, cross_check: bool = False, threads: int | None = None
) -> list[ClassRecord]:
    """All classes of 3-polytopes with 5 lattice points and width >= 2.

    With cross_check=True, also runs the independent coordinate-box sweep and
    raises unless both searches find exactly the same canonical-key sets.
    """
    found: dict[bytes, ClassRecord] = {}
    for pts in _structured_candidates(qmax):
        if len(set(pts)) < 5:
            continue
        cfg = PointConfiguration(list(pts))
        if cfg.dim < 3:
            continue
        full = _hull_points_or_none(cfg)
        if full is None:
            continue
        if lattice_width(full).width < 2:
            continue
        key = canonical_key(full)
        if key not in found:
            found[key] = classify_size5(full)
    records = sorted(
        found.values(),
        key=lambda r: (r.signature.as_tuple(), sorted(abs(e) for e in r.vector.entries)),
    )
    if cross_check:
        box_reps = box_sweep_width_ge2_classes(threads=threads)
        box_keys = {canonical_key(r) for r in box_reps}
        if box_keys != set(found.keys()):
            raise AssertionError(
                f"census mismatch: structured {len(found)} classes, "
                f"box sweep {len(box_keys)}"
            )
    return records


def box_sweep_width_ge2_classes(
    side: int = 5, threads: int | None = None
) -> list[PointConfiguration]:
    """Distinct width->=2 size-5 classes found by brute force over a cube.

    Exhausts all translation-normalized 5-point-hull subsets of
    [0, side-1]^3, takes the ones of exact width >= 2 and groups them into
    equivalence classes with explicit witnesses.  Independent of the
    structured search and of the stored classification table.
    """
    from ._sweep import size5_box_sweep

    _, _, exported = size5_box_sweep(side=side)
    buckets: dict[tuple, list[PointConfiguration]] = {}
    for pts in exported:
        cfg = PointConfiguration(list(pts))
        if lattice_width(cfg).width < 2:
            continue
        vec = five_point_vector(cfg)
        inv = tuple(sorted(abs(e) for e in vec.entries))
        reps = buckets.setdefault(inv, [])
        for r in reps:
            if z_equivalent(cfg, r) is not None:
                break
        else:
            reps.append(cfg)
    return [r for inv in sorted(buckets) for r in buckets[inv]]


# ---------------------------------------------------------------------------
# The two focused enumerations behind the signature-(4,1) classes.


@dataclass(frozen=True)
class CandidateRow:
    """One row of the planar case analysis for non-symmetric (4,1) classes."""

    c: int
    d: int
    a: int
    b: int
    p: int
    q: int
    survives: bool
    vector: tuple[int, int, int, int, int] | None


def _triangle_lattice_points(v1, v2, v3):
    """Lattice points in a closed rational triangle, by exact sign tests."""
    xs = [v[0] for v in (v1, v2, v3)]
    ys = [v[1] for v in (v1, v2, v3)]
    out = []
    import math

    for x in range(math.floor(min(xs)), math.floor(max(xs)) + 1):
        for y in range(math.floor(min(ys)), math.floor(max(ys)) + 1):
            s = []
            pts = (v1, v2, v3)
            for i in range(3):
                ax, ay = pts[i]
                bx, by = pts[(i + 1) % 3]
                s.append((bx - ax) * (y - ay) - (by - ay) * (x - ax))
            if all(e >= 0 for e in s) or all(e <= 0 for e in s):
                out.append((x, y))
    return out


def enumerate_nonsymmetric41_candidates(dmax: int = 6) -> list[CandidateRow]:
    """The planar case analysis for signature (4,1) with distinct volumes.

    The five points are (0,0,0), (1,0,0), (0,0,1), (p,q,1), (a,b,-1) with
    p_1 interior; on the slice z = 0 the polytope is the triangle
    conv{(1,0), (a/2,b/2), (c/2,d/2)} with c = a+p, d = b+q, whose only
    lattice points must be (0,0) and (1,0).  Enumerating the admissible
    (c,d) and (a,b) gives 16 raw rows; those with gcd(p,q) != 1 or p > q
    are excluded, leaving the six surviving classes.
    """
    rows = []
    for d in range(1, dmax + 1):
        # c matters only modulo d, and the wedge at (0,1) excludes
        # c in [2-d, 0]; for d = 1 take c = 0, otherwise c = 1
        c = 0 if d == 1 else 1
        for b in range(-3 * dmax, 0):
            if abs(d) > abs(b):
                continue
            for a in range(-3 * dmax, dmax + 1):
                # the lower bound keeps p_1 strictly interior; the maximality
                # bound cb - da <= d - b is not imposed here, non-maximal rows
                # are the ones the p > q exclusion removes later
                if c * b - d * a <= 0:
                    continue
                tri = (
                    (Fraction(1), Fraction(0)),
                    (Fraction(a, 2), Fraction(b, 2)),
                    (Fraction(c, 2), Fraction(d, 2)),
                )
                if _triangle_lattice_points(*tri) != [(0, 0), (1, 0)]:
                    continue
                p, q = c - a, d - b
                survives = gcd(p, q) == 1 and p <= q
                vec = None
                if survives:
                    vec = ((a - 2) * q - b * p, p * b - q * a, q + b, -b, q)
                rows.append(CandidateRow(c, d, a, b, p, q, survives, vec))
    rows.sort(key=lambda r: (r.d, r.c, -r.b, -r.a))
    return rows


def enumerate_symmetric41(qmax: int = 30) -> list[ClassRecord]:
    """The size-5 width-2 classes with symmetric volume vector
    (-4q, q, q, q, q): the fifth point is forced to (-p-1, -q, -2), and
    sweeping all coprime (p, q) up to qmax leaves exactly the q = 1 and
    q = 5 classes (the two q = 5 solutions are equivalent to each other)."""
    found: dict[bytes, PointConfiguration] = {}
    members: dict[bytes, list[tuple[int, int]]] = {}
    for q in range(1, qmax + 1):
        for p in range(1, q + 1):
            if gcd(p, q) != 1:
                continue
            pts = [(0, 0, 0), (1, 0, 0), (0, 0, 1), (p, q, 1), (-p - 1, -q, -2)]
            cfg = PointConfiguration(pts)
            full = _hull_points_or_none(cfg)
            if full is None:
                continue
            if lattice_width(full).width < 2:
                continue
            key = canonical_key(full)
            if key not in found:
                found[key] = full
            members.setdefault(key, []).append((p, q))
    # all parameter choices landing in one class must be provably equivalent
    for key, cfg in found.items():
        for p, q in members[key]:
            other = PointConfiguration(
                [(0, 0, 0), (1, 0, 0), (0, 0, 1), (p, q, 1), (-p - 1, -q, -2)]
            )
            assert z_equivalent(cfg, other) is not None
    return sorted(
        (classify_size5(cfg) for cfg in found.values()),
        key=lambda r: sorted(abs(e) for e in r.vector.entries),
    )


# ---------------------------------------------------------------------------
# 2D reference lists: lattice polygons with up to five lattice points.


def _hull_2d(points):
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def crossz(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower = []
    for p in pts:
        while len(lower) >= 2 and crossz(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and crossz(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _polygon_lattice_points(points):
    """All lattice points in the hull of integer 2D points, in lex order."""
    hull = _hull_2d(points)
    if len(hull) < 3:
        raise ValueError("polygon is not 2-dimensional")
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    out = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            k = len(hull)
            inside = True
            for i in range(k):
                a, b = hull[i], hull[(i + 1) % k]
                if (b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0]) < 0:
                    inside = False
                    break
            if inside:
                out.append((x, y))
    return out


def canonical_key_2d(points) -> bytes:
    """Z-equivalence invariant of a 2D configuration, as canonical_key."""
    from .core import row_hnf

    best = None
    pts = list(points)
    for order in permutations(range(len(pts))):
        p0 = pts[order[0]]
        cols = [(pts[i][0] - p0[0], pts[i][1] - p0[1]) for i in order[1:]]
        mat = [[c[0] for c in cols], [c[1] for c in cols]]
        h = row_hnf(mat)
        if best is None or h < best:
            best = h
    return ",".join(str(e) for row in best for e in row).encode("ascii")


def enumerate_polygons_upto5() -> dict[int, list[tuple]]:
    """Classes of lattice polygons with 3, 4 and 5 lattice points, built by
    growing: each size-(k+1) polygon is a size-k one plus a point at lattice
    distance 1 from one of its edges.  Verified against a box brute force in
    the tests."""
    start = ((0, 0), (1, 0), (0, 1))
    classes = {3: {canonical_key_2d(start): start}, 4: {}, 5: {}}
    for size in (4, 5):
        for rep in classes[size - 1].values():
            hull = _hull_2d(rep)
            k = len(hull)
            for i in range(k):
                a, b = hull[i], hull[(i + 1) % k]
                ex, ey = b[0] - a[0], b[1] - a[1]
                g = gcd(abs(ex), abs(ey))
                ex, ey = ex // g, ey // g
                # outward primitive normal functional (hull is counterclockwise)
                nx, ny = ey, -ex
                from .core import extended_gcd

                _, s, t0 = extended_gcd(nx, ny)
                # base point with n . (base - a) = 1, then slide along the edge
                for t in range(-2 * size, 2 * size + 1):
                    cand = (a[0] + s + t * ex, a[1] + t0 + t * ey)
                    grown = _polygon_lattice_points(list(rep) + [cand])
                    if len(grown) != size:
                        continue
                    key = canonical_key_2d(grown)
                    if key not in classes[size]:
                        classes[size][key] = tuple(grown)
    return {n: [classes[n][k] for k in sorted(classes[n])] for n in (3, 4, 5)}


def polygons_box_bruteforce(side: int = 5, sizes=(3, 4, 5)) -> dict[int, int]:
    """Class counts of small polygons by exhausting subsets of a 2D box.

    Independent oracle for enumerate_polygons_upto5.
    """
    pts = [(x, y) for x in range(side) for y in range(side)]
    counts = {}
    for n in sizes:
        keys = set()
        for sub in combinations(pts, n):
            if min(p[0] for p in sub) or min(p[1] for p in sub):
                continue
            if len(_hull_2d(sub)) < 3:
                continue
            if len(_polygon_lattice_points(sub)) != n:
                continue
            if set(_polygon_lattice_points(sub)) != set(sub):
                continue
            keys.add(canonical_key_2d(sub))
        counts[n] = len(keys)
    return counts
