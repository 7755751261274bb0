"""Exact computations in the integral polytope group P(Z^n) and its translation quotient."""

from .exact_geometry import Face, Polytope, PolytopeError, extreme_points, face_lattice, point
from .group import (
    FormalSum,
    GroupElement,
    element,
    eq,
    face_euler_characteristic,
    involution,
    seminorm,
    sym,
    zero,
)
from .polytope_ops import Hyperplane, cut, minkowski_sum, reflect, shadow, vertical_glue, vertical_stretch

__all__ = [
    "Face",
    "FormalSum",
    "GroupElement",
    "Hyperplane",
    "Polytope",
    "PolytopeError",
    "cut",
    "element",
    "eq",
    "extreme_points",
    "face_euler_characteristic",
    "face_lattice",
    "involution",
    "minkowski_sum",
    "point",
    "reflect",
    "seminorm",
    "shadow",
    "sym",
    "vertical_glue",
    "vertical_stretch",
    "zero",
]
