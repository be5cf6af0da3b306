import random

import pytest

from latpoly.core import PointConfiguration
from latpoly.minimality import (
    classify_2d_minimality,
    interior_lattice_points,
    minimal_tetra_family,
    minimal_tetra_with_apex,
    minimality_report,
    projection_dichotomy_check,
    vertex_deletion,
)
from latpoly.invariants import normalized_volume
from latpoly.width import lattice_width
from tests.test_core import random_unimodular


def test_vertex_deletion_requires_vertex():
    cfg = PointConfiguration([(0, 0, 0), (2, 0, 0), (0, 2, 0), (0, 0, 2)])
    with pytest.raises(ValueError):
        vertex_deletion(cfg, (1, 0, 0))  # lattice point, not a vertex
    out = vertex_deletion(cfg, (2, 0, 0))
    assert (2, 0, 0) not in out.points


def test_family_minimal_from_k2():
    for k in range(2, 8):
        fam = minimal_tetra_family(k)
        rep = minimality_report(fam)
        assert rep.verdict == "minimal"
        assert len(rep.vert_star) == len(rep.vertices) == 4
        assert len(interior_lattice_points(fam)) == k - 1
        assert normalized_volume(fam) == 4 * k


def test_family_k1_boundary():
    # at k = 1 the tetrahedron has width 1, so minimality does not apply,
    # and the apex extension is itself minimal
    fam = minimal_tetra_family(1)
    assert lattice_width(fam).width == 1
    assert minimality_report(fam).verdict == "width-one"
    assert minimality_report(minimal_tetra_with_apex(1)).verdict == "minimal"


def test_family_quasi_extension():
    for k in range(2, 8):
        rep = minimality_report(minimal_tetra_with_apex(k))
        assert rep.verdict == "quasi-minimal"
        assert (0, 0, k + 1) not in rep.vert_star


def test_verdict_invariance():
    rng = random.Random(60)
    fam = minimal_tetra_family(3)
    for _ in range(10):
        u = random_unimodular(rng, bound=1, shears=4)
        img = PointConfiguration([u.apply(p) for p in fam.points])
        assert minimality_report(img).verdict == "minimal"


def test_neither_verdict():
    # every vertex deletion of the 2x2x2 cube keeps width 2
    cube = PointConfiguration(
        [(x, y, z) for x in (0, 2) for y in (0, 2) for z in (0, 2)]
    )
    rep = minimality_report(cube)
    assert rep.verdict == "neither"
    assert rep.vert_star == ()


def test_2d_minimality():
    verdict, star = classify_2d_minimality([(0, 0), (2, 0), (0, 2)])
    assert verdict == "minimal"
    assert set(star) == {(0, 0), (2, 0), (0, 2)}
    with pytest.raises(ValueError):
        classify_2d_minimality([(0, 0), (1, 0), (0, 1)])  # width 1


def test_dichotomy_small_branch():
    rep = projection_dichotomy_check(minimal_tetra_family(2))
    assert rep.branch == "small"
    assert rep.size <= 11


def test_dichotomy_projection_branch():
    for k in (9, 12):
        rep = projection_dichotomy_check(minimal_tetra_family(k))
        assert rep.branch == "projection"
        assert rep.size > 11
        assert rep.polygon_verdict in ("minimal", "quasi-minimal")
        assert rep.unique_vertex_preimages
    rep = projection_dichotomy_check(minimal_tetra_with_apex(12))
    assert rep.branch == "projection"
    assert rep.polygon_verdict in ("minimal", "quasi-minimal")
    assert rep.unique_vertex_preimages


def test_dichotomy_rejects_neither():
    cube = PointConfiguration(
        [(x, y, z) for x in (0, 2) for y in (0, 2) for z in (0, 2)]
    )
    with pytest.raises(ValueError):
        projection_dichotomy_check(cube)
