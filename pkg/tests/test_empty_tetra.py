import random
from math import gcd

import pytest

from latpoly.core import PointConfiguration
from latpoly.empty_tetra import (
    LambdaPQ,
    TpqClass,
    apex_emptiness_criterion,
    classify_empty,
    fundamental_rectangle_check,
    is_empty_tetra_bruteforce,
    is_empty_tetra_by_criterion,
    lambda_contains,
    lambda_index,
    standard_tpq,
    tpq_orbit,
    unimodular_automorphisms,
    verify_change_of_coordinates,
    vertex_to_origin_map,
)
from latpoly.width import lattice_width
from tests.test_core import random_unimodular


def test_standard_tpq_is_empty_and_width1():
    for q in range(1, 12):
        for p in range(1, q + 1):
            if gcd(p, q) != 1:
                continue
            cfg = standard_tpq(p, q)
            assert is_empty_tetra_bruteforce(*cfg.points)
            assert lattice_width(cfg).width == 1


def test_tpq_orbit_and_canonical():
    assert tpq_orbit(2, 7) == {2, 5, 3, 4} or 2 in tpq_orbit(2, 7)
    # orbit closure: every member generates the same orbit
    for q in range(2, 15):
        for p in range(1, q):
            if gcd(p, q) != 1:
                continue
            orb = tpq_orbit(p, q)
            for r in orb:
                assert tpq_orbit(r, q) == orb
    c = TpqClass.canonical(5, 7)
    assert c.p == min(tpq_orbit(5, 7))


def test_criterion_matches_bruteforce_small():
    for q in range(1, 8):
        for a in range(q):
            for b in range(q):
                tet = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (a, b, q)]
                pred = apex_emptiness_criterion(a, b, q)
                brute = is_empty_tetra_bruteforce(*tet)
                assert pred == brute, (a, b, q)


def test_criterion_path_on_random_tetrahedra():
    rng = random.Random(40)
    checked = 0
    while checked < 300:
        tet = [tuple(rng.randint(-4, 4) for _ in range(3)) for _ in range(4)]
        from latpoly.core import tetra_volume

        if tetra_volume(*tet) == 0:
            continue
        checked += 1
        assert is_empty_tetra_by_criterion(*tet) == is_empty_tetra_bruteforce(*tet)


def test_classify_empty_recovers_parameters():
    rng = random.Random(41)
    for q in (1, 2, 3, 5, 7, 11):
        for p in range(1, q + 1):
            if gcd(p, q) != 1:
                continue
            u = random_unimodular(rng)
            img = [u.apply(pt) for pt in standard_tpq(p, q).points]
            cls, m = classify_empty(*img)
            assert cls.q == q
            assert cls.p == min(tpq_orbit(p, q))
            assert {m.apply(pt) for pt in img} == set(
                standard_tpq(cls.p, cls.q).points
            )


def test_classify_empty_rejects_nonempty():
    with pytest.raises(ValueError):
        classify_empty((0, 0, 0), (2, 0, 0), (0, 2, 0), (0, 0, 2))


def test_vertex_to_origin_maps():
    # each map fixes the class: it sends T(p, q) onto a standard T(p', q)
    for q in (3, 5, 7):
        for p in range(1, q):
            if gcd(p, q) != 1 or p != min(tpq_orbit(p, q)):
                continue
            t = TpqClass(p, q)
            src = set(standard_tpq(p, q).points)
            for i in (1, 2, 3):
                m = vertex_to_origin_map(t, i)
                img = {m.apply(pt) for pt in src}
                cls, _ = classify_empty(*img)
                assert cls == t


def test_unimodular_automorphisms_group_size():
    # the unit tetrahedron has the full symmetric group of its vertices
    autos = unimodular_automorphisms((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert len(autos) == 24


def test_lambda_membership_and_index():
    for q in (2, 3, 5, 7):
        for p in range(1, q):
            if gcd(p, q) != 1:
                continue
            l = LambdaPQ(p, q)
            assert lambda_index(l) == q
            assert lambda_contains(l, (1, 0, 0))
            assert lambda_contains(l, l.generator)
            from fractions import Fraction

            assert not lambda_contains(l, (Fraction(1, q + 1), 0, 0))


def test_fundamental_rectangle_small():
    in_t2, in_t1 = fundamental_rectangle_check(2, 5)
    assert in_t2
    assert in_t1


def test_verify_change_of_coordinates_small():
    for q in range(2, 10):
        for p in range(1, q):
            if gcd(p, q) != 1:
                continue
            assert verify_change_of_coordinates(p, q)
