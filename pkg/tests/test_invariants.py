import random

import pytest

from latpoly.core import PointConfiguration
from latpoly.invariants import (
    five_point_vector,
    flatten_to_2d,
    is_dps,
    normalized_volume,
    pick_check,
    polygon_normalized_area,
    signature,
    volume_vector,
)
from tests.test_core import random_unimodular

W2_31 = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (-1, -1, 0), (1, 2, 3)]


def test_volume_vector_subset_order():
    cfg = PointConfiguration(W2_31)
    vv = volume_vector(cfg)
    assert vv.subsets == (
        (0, 1, 2, 3),
        (0, 1, 2, 4),
        (0, 1, 3, 4),
        (0, 2, 3, 4),
        (1, 2, 3, 4),
    )
    assert len(vv.entries) == 5


def test_five_point_vector_is_dependence():
    cfg = PointConfiguration(W2_31)
    v = five_point_vector(cfg).entries
    assert sum(v) == 0
    for j in range(3):
        assert sum(vi * p[j] for vi, p in zip(v, W2_31)) == 0
    assert v == (-9, 3, 3, 3, 0)


def test_five_point_vector_sign_convention():
    # minority-sign block negative, and on a 2-2 tie the first nonzero entry
    # is negative
    sq = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)]
    v = five_point_vector(PointConfiguration(sq)).entries
    pos = sum(1 for e in v if e > 0)
    neg = sum(1 for e in v if e < 0)
    assert pos == neg == 2
    assert next(e for e in v if e != 0) < 0


def test_signature_values():
    assert signature(PointConfiguration(W2_31)).as_tuple() == (3, 1)
    sq = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)]
    assert signature(PointConfiguration(sq)).as_tuple() == (2, 2)


def test_signature_invariance():
    rng = random.Random(10)
    cfg = PointConfiguration(W2_31)
    for _ in range(50):
        u = random_unimodular(rng)
        img = PointConfiguration([u.apply(p) for p in W2_31])
        assert signature(img).as_tuple() == signature(cfg).as_tuple()
        assert five_point_vector(img).entries in (
            five_point_vector(cfg).entries,
            tuple(reversed(five_point_vector(cfg).entries)),
        ) or sorted(five_point_vector(img).entries) == sorted(
            five_point_vector(cfg).entries
        )


def test_is_dps():
    assert is_dps(PointConfiguration(W2_31))
    # a configuration with p1 + p4 = p2 + p3
    assert not is_dps(
        PointConfiguration([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)])
    )


def test_normalized_volume_basics():
    unit = PointConfiguration([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert normalized_volume(unit) == 1
    cube = PointConfiguration(
        [(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)]
    )
    assert normalized_volume(cube) == 6
    tpq = PointConfiguration([(0, 0, 0), (1, 0, 0), (0, 0, 1), (3, 10, 1)])
    assert normalized_volume(tpq) == 10


def test_normalized_volume_invariance():
    rng = random.Random(11)
    cfg = PointConfiguration(W2_31)
    vol = normalized_volume(cfg)
    for _ in range(30):
        u = random_unimodular(rng)
        img = PointConfiguration([u.apply(p) for p in W2_31])
        assert normalized_volume(img) == vol


def test_flatten_and_area():
    tri = PointConfiguration([(0, 0, 0), (2, 0, 0), (0, 2, 0)])
    flat, _ = flatten_to_2d(tri)
    assert polygon_normalized_area(flat) == 4


def test_pick_identity_random_triangles():
    rng = random.Random(12)
    checked = 0
    while checked < 40:
        pts = {(rng.randint(-3, 3), rng.randint(-3, 3), 0) for _ in range(3)}
        if len(pts) < 3:
            continue
        cfg = PointConfiguration(sorted(pts))
        if cfg.dim != 2:
            continue
        checked += 1
        area, boundary, interior, holds = pick_check(cfg)
        assert holds


def test_volume_vector_requires_3d():
    flat = PointConfiguration([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)])
    with pytest.raises(ValueError):
        volume_vector(flat)
