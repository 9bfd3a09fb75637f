"""Exact ring-theoretic invariants of projective monomial curves.

A sequence a_1 < ... < a_n with gcd 1 defines a graded affine semigroup in
the plane; this package decides Cohen-Macaulayness, Gorensteinness,
nearly-Gorensteinness and levelness of that semigroup, computes its
Cohen-Macaulay type and the minimal generators of its canonical module, and
reproduces the full classification of the nearly-Gorenstein non-Gorenstein
cases in codimension <= 3 by exhaustive scan.
"""

from ._kernels import backend
from .canonical import (
    CanonicalData,
    MovementChain,
    Translate,
    canonical_generators,
    find_movement,
    in_s_minus_v,
    is_level,
    is_nearly_gorenstein,
    omega_contains,
    render_movement,
)
from .classify import (
    ClassificationRecord,
    ScanReport,
    analyze,
    expected_ng,
    family,
    pair_family,
    scan,
)
from .curve import AperyTable, Curve, Point, Sequence
from .numsg import AperySet1D, NumericalSemigroup

__version__ = "0.1.0"

__all__ = [
    "AperySet1D",
    "AperyTable",
    "CanonicalData",
    "ClassificationRecord",
    "Curve",
    "MovementChain",
    "NumericalSemigroup",
    "Point",
    "ScanReport",
    "Sequence",
    "Translate",
    "analyze",
    "backend",
    "canonical_generators",
    "expected_ng",
    "family",
    "find_movement",
    "in_s_minus_v",
    "is_level",
    "is_nearly_gorenstein",
    "omega_contains",
    "pair_family",
    "render_movement",
    "scan",
]
