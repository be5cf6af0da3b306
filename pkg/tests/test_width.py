import random
from itertools import combinations, product

from latpoly.core import PointConfiguration
from latpoly.width import lattice_width, width_of, width_one_split
from tests.test_core import random_unimodular


def bruteforce_width_3d(pts, bound=6):
    best = None
    for c in product(range(-bound, bound + 1), repeat=3):
        if c == (0, 0, 0):
            continue
        vals = [c[0] * p[0] + c[1] * p[1] + c[2] * p[2] for p in pts]
        spread = max(vals) - min(vals)
        if spread == 0:
            continue
        if best is None or spread < best:
            best = spread
    return best


def test_unit_tetra_width_1():
    cfg = PointConfiguration([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
    res = lattice_width(cfg)
    assert res.width == 1
    assert width_of(cfg, res.witness) == 1


def test_known_width_2():
    cfg = PointConfiguration(
        [(0, 0, 0), (1, 0, 0), (0, 1, 0), (-1, -1, 0), (1, 2, 3)]
    )
    assert lattice_width(cfg).width == 2


def test_dilated_tetra_width():
    for k in (1, 2, 3):
        cfg = PointConfiguration(
            [(0, 0, 0), (k, 0, 0), (0, k, 0), (0, 0, k)]
        )
        assert lattice_width(cfg).width == k


def test_witness_is_primitive_and_achieves_width():
    rng = random.Random(20)
    for _ in range(100):
        pts = {tuple(rng.randint(-3, 3) for _ in range(3)) for _ in range(5)}
        cfg = PointConfiguration(sorted(pts))
        if cfg.dim < 1:
            continue
        res = lattice_width(cfg)
        from math import gcd

        g = gcd(gcd(abs(res.witness.a), abs(res.witness.b)), abs(res.witness.c))
        assert g == 1
        assert width_of(cfg, res.witness) == res.width


def test_width_matches_bruteforce():
    rng = random.Random(21)
    for _ in range(150):
        pts = {tuple(rng.randint(-2, 2) for _ in range(3)) for _ in range(5)}
        cfg = PointConfiguration(sorted(pts))
        if cfg.dim != 3:
            continue
        assert lattice_width(cfg).width == bruteforce_width_3d(cfg.points)


def test_width_invariance():
    rng = random.Random(22)
    base = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (-1, -1, 0), (1, 2, 3)]
    for _ in range(50):
        u = random_unimodular(rng)
        img = PointConfiguration([u.apply(p) for p in base])
        assert lattice_width(img).width == 2


def test_width_lower_dim():
    seg = PointConfiguration([(0, 0, 0), (0, 0, 3)])
    assert lattice_width(seg).width == 3
    tri = PointConfiguration([(0, 0, 0), (2, 0, 0), (0, 2, 0)])
    assert lattice_width(tri).width == 2


def test_width_one_split():
    cfg = PointConfiguration([(0, 0, 0), (1, 0, 0), (0, 0, 1), (2, 7, 1)])
    out = width_one_split(cfg)
    assert out is not None
    f, lower, upper = out
    assert {f(p) for p in lower.points} == {0}
    assert {f(p) for p in upper.points} == {1}
    assert len(lower) + len(upper) == 4
    wide = PointConfiguration(
        [(0, 0, 0), (1, 0, 0), (0, 1, 0), (-1, -1, 0), (1, 2, 3)]
    )
    assert width_one_split(wide) is None
