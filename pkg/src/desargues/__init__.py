"""Skew fields on the lines of Desarguesian affine planes, built and checked exactly."""

from .field_core import (
    DomainError,
    FiniteField,
    Quaternion,
    QuaternionRing,
    RingDescriptor,
    RingError,
    UnsupportedError,
    ring_enumerate,
    ring_make,
)
from .incidence import (
    AffineLine,
    AffinePoint,
    DegenerateInputError,
    DesarguesConfig,
    HypothesisViolation,
    Meet,
    PappusConfig,
    Plane,
    check_affine_axioms,
    check_desargues,
    check_pappus,
)
from .line_algebra import (
    ConstructionError,
    LineAlgebra,
    add_points,
    cayley_table,
    inv_point,
    make_line_algebra,
    mul_points,
    neg_point,
    verify_skewfield,
)
from .dilation import (
    DilationMap,
    apply_line,
    apply_point,
    check_isomorphism,
    enumerate_dilations,
    homothety,
    identity,
    restrict,
    translation,
)
from .report import Report

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "FiniteField",
    "Quaternion",
    "QuaternionRing",
    "RingDescriptor",
    "RingError",
    "UnsupportedError",
    "ring_enumerate",
    "ring_make",
    "AffineLine",
    "AffinePoint",
    "DegenerateInputError",
    "DesarguesConfig",
    "HypothesisViolation",
    "Meet",
    "PappusConfig",
    "Plane",
    "check_affine_axioms",
    "check_desargues",
    "check_pappus",
    "ConstructionError",
    "LineAlgebra",
    "add_points",
    "cayley_table",
    "inv_point",
    "make_line_algebra",
    "mul_points",
    "neg_point",
    "verify_skewfield",
    "DilationMap",
    "apply_line",
    "apply_point",
    "check_isomorphism",
    "enumerate_dilations",
    "homothety",
    "identity",
    "restrict",
    "translation",
    "Report",
]
