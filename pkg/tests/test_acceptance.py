"""Acceptance gate: the ten headline guarantees of the package.

Each test pins an exact (integer) expectation; there are no numeric
tolerances anywhere.  Independent oracles (coordinate-box sweeps, brute
force over bounded functionals, rational barycentric coordinates) are kept
separate from the implementation paths they check.
"""

import random
from itertools import product
from math import gcd

from latpoly.core import PointConfiguration, barycentric_in_simplex, hull_contains
from latpoly.classify import (
    REP_W1_31,
    REP_W2_31,
    TABLE_W2_41,
    FAMILY_W2_31,
    FAMILY_W2_41,
    classify_size5,
    enumerate_size5_width_ge2,
    rep_w1_21,
    rep_w1_32,
    structure_normalize,
)
from latpoly.empty_tetra import (
    apex_emptiness_criterion,
    fundamental_rectangle_check,
    is_empty_tetra_bruteforce,
    standard_tpq,
    tpq_orbit,
    verify_change_of_coordinates,
)
from latpoly.equivalence import z_equivalent
from latpoly.invariants import (
    five_point_vector,
    normalized_volume,
    signature,
    volume_vector,
)
from latpoly.minimality import (
    interior_lattice_points,
    minimal_tetra_family,
    minimal_tetra_with_apex,
    minimality_report,
)
from latpoly.width import lattice_width
from tests.test_core import random_unimodular

TABLE_VECTORS = {(-9, 3, 3, 3, 0)} | {vec for vec, _ in TABLE_W2_41}


# -- 1. the size-5 census ----------------------------------------------------


def test_acceptance_1_census_two_independent_routes():
    # structured search and coordinate-box sweep must agree class by class
    records = enumerate_size5_width_ge2(cross_check=True)
    assert len(records) == 9
    assert max(r.width for r in records) == 2
    hist = {}
    for r in records:
        hist[r.signature.as_tuple()] = hist.get(r.signature.as_tuple(), 0) + 1
    assert hist == {(4, 1): 8, (3, 1): 1}


# -- 2. the classification table, verbatim -----------------------------------


def test_acceptance_2_table_vectors_and_representatives():
    records = enumerate_size5_width_ge2()
    assert {r.vector.entries for r in records} == TABLE_VECTORS
    # each stored representative classifies to its own row, with a witness
    # mapping it onto itself
    rec = classify_size5(PointConfiguration(list(REP_W2_31)))
    assert rec.family == FAMILY_W2_31
    assert rec.vector.entries == (-9, 3, 3, 3, 0)
    assert set(rec.representative.points) == set(REP_W2_31)
    assert {rec.witness.apply(p) for p in REP_W2_31} == set(REP_W2_31)
    for vec, pts in TABLE_W2_41:
        rec = classify_size5(PointConfiguration(list(pts)))
        assert rec.family == FAMILY_W2_41
        assert rec.params == vec
        assert rec.vector.entries == vec
        assert set(rec.representative.points) == set(pts)
        assert {rec.witness.apply(p) for p in pts} == set(pts)


# -- 3. empty tetrahedra have width one --------------------------------------


def test_acceptance_3_empty_tetrahedra_width_one():
    from latpoly._sweep import empty_tetra_box_sweep

    # [-3,3]^3 up to translation is a side-7 cube; the kernel certifies all
    # but a residue with small functionals, the residue is finished in exact
    # Python arithmetic
    n_empty, certified, exported = empty_tetra_box_sweep(side=7)
    assert n_empty > 0
    assert certified + len(exported) == n_empty
    for pts in exported:
        cfg = PointConfiguration(list(pts))
        assert lattice_width(cfg).width == 1, pts
    for q in range(1, 31):
        for p in range(1, q + 1):
            if gcd(p, q) != 1:
                continue
            cfg = standard_tpq(p, q)
            assert is_empty_tetra_bruteforce(*cfg.points)
            assert lattice_width(cfg).width == 1


# -- 4. the arithmetic emptiness criterion against brute force ---------------


def test_acceptance_4_emptiness_criterion_oracle():
    for q in range(1, 21):
        for a in range(q):
            for b in range(q):
                pred = apex_emptiness_criterion(a, b, q)
                brute = is_empty_tetra_bruteforce(
                    (0, 0, 0), (1, 0, 0), (0, 1, 0), (a, b, q)
                )
                assert pred == brute, (a, b, q)


# -- 5. the equivalence law for empty tetrahedra -----------------------------


def test_acceptance_5_tpq_equivalence_law():
    for q in range(1, 16):
        ps = [p for p in range(1, q + 1) if gcd(p, q) == 1]
        for p in ps:
            orbit = tpq_orbit(p, q)
            for pp in ps:
                expected = pp in orbit
                m = z_equivalent(standard_tpq(p, q), standard_tpq(pp, q))
                assert (m is not None) == expected, (p, pp, q)


# -- 6. the signature gate over the full box sweep ---------------------------


def test_acceptance_6_signature_gate():
    from latpoly._sweep import size5_box_sweep

    # the vector entries follow each configuration's own point order, so the
    # symmetric shape (-4q, q, q, q, q) is recognized as a multiset
    symmetric = {(-4, 1, 1, 1, 1), (-20, 5, 5, 5, 5)}
    _, _, exported = size5_box_sweep(side=4)
    assert exported
    seen_w2 = 0
    for pts in exported:
        cfg = PointConfiguration(list(pts))
        w = lattice_width(cfg).width
        sig = signature(cfg).as_tuple()
        if sig in ((3, 2), (2, 2), (2, 1)):
            assert w == 1, pts
        if w >= 2:
            seen_w2 += 1
            assert sig in ((3, 1), (4, 1)), pts
            sf = structure_normalize(cfg)
            assert sf.h in (-1, -2), pts
            vec = tuple(sorted(five_point_vector(cfg).entries))
            is_symmetric = vec in {tuple(sorted(s)) for s in symmetric}
            assert (sf.h == -2) == is_symmetric, pts
    # unexported configurations carried a width-1 certificate from the
    # kernel, so the gate above covered every width->=2 configuration
    assert seen_w2 > 0


# -- 7. the width-1 parametric families are irredundant ----------------------


def test_acceptance_7_width1_family_irredundancy():
    for q in range(1, 11):
        ps = [p for p in range(0, q // 2 + 1) if gcd(p, q) == 1]
        for i, p in enumerate(ps):
            for pp in ps[i + 1 :]:
                a = PointConfiguration(list(rep_w1_21(p, q)))
                b = PointConfiguration(list(rep_w1_21(pp, q)))
                assert z_equivalent(a, b) is None, (p, pp, q)
    pairs = [
        (a, b)
        for b in range(1, 10)
        for a in range(1, b + 1)
        if a + b <= 10 and gcd(a, b) == 1
    ]
    for i, (a1, b1) in enumerate(pairs):
        for a2, b2 in pairs[i + 1 :]:
            x = PointConfiguration(list(rep_w1_32(a1, b1)))
            y = PointConfiguration(list(rep_w1_32(a2, b2)))
            assert z_equivalent(x, y) is None, ((a1, b1), (a2, b2))


# -- 8. the minimality suite -------------------------------------------------


def test_acceptance_8_minimality_suite():
    for k in range(1, 11):
        fam = minimal_tetra_family(k)
        assert len(interior_lattice_points(fam)) == k - 1
        assert normalized_volume(fam) == 4 * k
        if k == 1:
            # boundary case: at k = 1 the tetrahedron itself has width 1, so
            # the minimal/quasi-minimal notions start at k = 2; its apex
            # extension still has a width-1 deletion at the apex and is
            # therefore minimal rather than quasi-minimal
            assert lattice_width(fam).width == 1
            assert minimality_report(fam).verdict == "width-one"
            assert minimality_report(minimal_tetra_with_apex(1)).verdict == "minimal"
            continue
        assert minimality_report(fam).verdict == "minimal"
        assert minimality_report(minimal_tetra_with_apex(k)).verdict == "quasi-minimal"
    for rec in enumerate_size5_width_ge2():
        assert minimality_report(rec.representative).verdict == "minimal"


# -- 9. the superlattice machinery -------------------------------------------


def test_acceptance_9_superlattice_machinery():
    for q in range(2, 21):
        for p in range(1, q):
            if gcd(p, q) == 1:
                assert verify_change_of_coordinates(p, q), (p, q)
    for q in range(2, 51):
        for p in range(1, q):
            if gcd(p, q) != 1:
                continue
            in_t2, in_t1 = fundamental_rectangle_check(p, q)
            assert in_t2, (p, q)
            if 2 <= p <= q - 2:
                assert in_t1, (p, q)
            # on canonical class parameters the membership is exact both ways
            if p == min(tpq_orbit(p, q)):
                assert in_t1 == (2 <= p <= q - 2), (p, q)


# -- 10. randomized property suites ------------------------------------------


def _random_config(rng, nmin=4, nmax=6):
    while True:
        n = rng.randint(nmin, nmax)
        pts = {tuple(rng.randint(-2, 2) for _ in range(3)) for _ in range(n)}
        cfg = PointConfiguration(sorted(pts))
        if cfg.dim == 3:
            return cfg


def test_acceptance_10a_unimodular_invariance():
    rng = random.Random(100)
    for _ in range(10000):
        cfg = _random_config(rng)
        u = random_unimodular(rng, bound=1, shears=3)
        img = PointConfiguration([u.apply(p) for p in cfg.points])
        assert lattice_width(img).width == lattice_width(cfg).width
        d = u.det
        assert volume_vector(img).entries == tuple(
            d * e for e in volume_vector(cfg).entries
        )
        if len(cfg) == 5:
            assert signature(img).as_tuple() == signature(cfg).as_tuple()
            assert five_point_vector(img).entries == five_point_vector(cfg).entries


def test_acceptance_10b_width_oracle():
    rng = random.Random(101)
    checked = 0
    while checked < 1000:
        cfg = _random_config(rng)
        checked += 1
        best = None
        for c in product(range(-6, 7), repeat=3):
            if c == (0, 0, 0):
                continue
            vals = [c[0] * p[0] + c[1] * p[1] + c[2] * p[2] for p in cfg.points]
            spread = max(vals) - min(vals)
            if spread and (best is None or spread < best):
                best = spread
        assert lattice_width(cfg).width == best


def test_acceptance_10c_hull_vs_barycentric():
    rng = random.Random(102)
    checked = 0
    while checked < 200:
        tet = [tuple(rng.randint(-3, 3) for _ in range(3)) for _ in range(4)]
        from latpoly.core import tetra_volume

        if tetra_volume(*tet) == 0:
            continue
        checked += 1
        cfg = PointConfiguration(tet)
        for _ in range(25):
            p = tuple(rng.randint(-4, 4) for _ in range(3))
            assert hull_contains(cfg, p) == (
                barycentric_in_simplex(tet, p) is not None
            )
