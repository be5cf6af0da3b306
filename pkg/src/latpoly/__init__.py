"""Exact-arithmetic tools for lattice 3-polytopes with few lattice points.

Submodules: core (points, maps, hulls, integer linear algebra), invariants
(volume vectors, signatures, 2D helpers), width (certified lattice width),
equivalence (unimodular equivalence and canonical keys), empty_tetra (empty
tetrahedra and the T(p, q) classification), classify (the size-5 census and
classification table), minimality (minimal and quasi-minimal polytopes),
cli (command-line interface).
"""

from .core import (
    IntegerFunctional,
    Point,
    PointConfiguration,
    UnimodularAffineMap,
)
from .invariants import (
    five_point_vector,
    normalized_volume,
    signature,
    volume_vector,
)
from .width import lattice_width
from .equivalence import canonical_key, z_equivalent

__all__ = [
    "IntegerFunctional",
    "Point",
    "PointConfiguration",
    "UnimodularAffineMap",
    "five_point_vector",
    "normalized_volume",
    "signature",
    "volume_vector",
    "lattice_width",
    "canonical_key",
    "z_equivalent",
]

__version__ = "1.0.0"
