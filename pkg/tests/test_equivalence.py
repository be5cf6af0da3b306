import random

import pytest

from latpoly.core import PointConfiguration
from latpoly.equivalence import (
    canonical_key,
    map_from_corresponding_points,
    z_equivalent,
)
from tests.test_core import random_unimodular

TET = [(0, 0, 0), (1, 0, 0), (0, 0, 1), (2, 7, 1)]
FIVE = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (-1, -1, 0), (1, 2, 3)]


def test_equivalent_to_own_image():
    rng = random.Random(30)
    for pts in (TET, FIVE):
        cfg = PointConfiguration(pts)
        for _ in range(20):
            u = random_unimodular(rng)
            img = PointConfiguration([u.apply(p) for p in pts])
            m = z_equivalent(cfg, img)
            assert m is not None
            assert {m.apply(p) for p in pts} == set(img.points)


def test_inequivalent_pairs():
    a = PointConfiguration([(0, 0, 0), (1, 0, 0), (0, 0, 1), (1, 3, 1)])
    b = PointConfiguration([(0, 0, 0), (1, 0, 0), (0, 0, 1), (1, 5, 1)])
    assert z_equivalent(a, b) is None  # different volumes
    c = PointConfiguration([(0, 0, 0), (1, 0, 0), (0, 0, 1), (2, 7, 1)])
    d = PointConfiguration([(0, 0, 0), (1, 0, 0), (0, 0, 1), (1, 7, 1)])
    assert z_equivalent(c, d) is None  # same volume, different classes


def test_reflection_counts_as_equivalent():
    cfg = PointConfiguration(FIVE)
    mirror = PointConfiguration([(-x, y, z) for x, y, z in FIVE])
    assert z_equivalent(cfg, mirror) is not None


def test_map_from_corresponding_points():
    rng = random.Random(31)
    u = random_unimodular(rng)
    imgs = [u.apply(p) for p in TET]
    m = map_from_corresponding_points(
        PointConfiguration(TET), PointConfiguration(imgs)
    )
    assert m is not None
    for p, q in zip(TET, imgs):
        assert m.apply(p) == q


def test_canonical_key_separates_and_identifies():
    rng = random.Random(32)
    cfg = PointConfiguration(FIVE)
    key = canonical_key(cfg)
    for _ in range(10):
        u = random_unimodular(rng)
        img = PointConfiguration([u.apply(p) for p in FIVE])
        assert canonical_key(img) == key
    other = PointConfiguration([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)])
    assert canonical_key(other) != key


def test_dimension_check():
    flat = PointConfiguration([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)])
    with pytest.raises(ValueError):
        z_equivalent(flat, flat)
