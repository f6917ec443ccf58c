"""Discrete Blaschke theorems: deformed polygons, normal moduli and placement checks."""
from .deformed_ngons import (
    fattened_radii,
    k_for_fattened,
    k_for_mangled,
    mangled_radii,
    place,
    regular_ngon_Q,
    standard_fattened,
    standard_mangled,
)
from .geom2d import ConvexPolyline2, chebyshev_center, min_enclosing_circle, minkowski_sum
from .normal_field import (
    VACUOUS,
    check_bound_lower,
    check_bound_upper,
    curvature_profile,
    estimate_curvature,
    lift_normals,
    minimal_oscillation,
    modulus_of_continuity,
)
from .space3d import ConvexPolytope3, check_section_bound, section, verify_space_inscribed
from .theorem_harness import (
    blaschke_limit_inscribed,
    strantzen_limit_outscribed,
    verify_inscribed,
    verify_outscribed,
)

__all__ = [
    "ConvexPolyline2",
    "ConvexPolytope3",
    "VACUOUS",
    "blaschke_limit_inscribed",
    "chebyshev_center",
    "check_bound_lower",
    "check_bound_upper",
    "check_section_bound",
    "curvature_profile",
    "estimate_curvature",
    "fattened_radii",
    "k_for_fattened",
    "k_for_mangled",
    "lift_normals",
    "mangled_radii",
    "min_enclosing_circle",
    "minimal_oscillation",
    "minkowski_sum",
    "modulus_of_continuity",
    "place",
    "regular_ngon_Q",
    "section",
    "standard_fattened",
    "standard_mangled",
    "strantzen_limit_outscribed",
    "verify_inscribed",
    "verify_outscribed",
    "verify_space_inscribed",
]

__version__ = "0.1.0"
