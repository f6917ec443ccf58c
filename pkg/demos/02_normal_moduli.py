"""
Moduli of the normal field
==========================

How fast does the outer normal turn along a convex curve?  The modulus of
continuity is the largest turn between points at most tau apart, the
minimal oscillation the smallest turn between points at least tau apart.
"""
import math

from blaschke import modulus_of_continuity, minimal_oscillation, curvature_profile
from blaschke import check_bound_lower, check_bound_upper
from blaschke.bodies import BodySpec, generate_body

circle = generate_body(BodySpec("circle", {"radius": 1.0}, 4096))
ellipse = generate_body(BodySpec("ellipse", {"a": 2.0, "b": 1.0}, 4096))

# On the unit circle the chord metric gives 2 arcsin(tau/2), arc length gives tau
for tau in (0.01, 0.05, 0.1):
    print(f"tau={tau}: omega={modulus_of_continuity(circle, tau):.5f}  "
          f"Omega={minimal_oscillation(circle, tau):.5f}  exact={2 * math.asin(tau / 2):.5f}  "
          f"arc={modulus_of_continuity(circle, tau, 'arc'):.5f}")

# The ellipse turns fastest at (+-2, 0) and slowest at (0, +-1)
for tau in (0.05, 0.2, 1.0):
    print(f"ellipse tau={tau}: omega={modulus_of_continuity(ellipse, tau):.4f}  "
          f"Omega={minimal_oscillation(ellipse, tau):.4f}")

# A curvature estimate from the normal field itself
kappa = curvature_profile(ellipse, 0.01)
print(f"curvature from {kappa.min():.4f} to {kappa.max():.4f} (exact 1/4 and 2)")

# Curvature bounds show up as bounds on the moduli; false bounds are caught
print("upper 2, tau 0.1:", check_bound_upper(ellipse, 0.1, 2.0))
print("lower 1/4, tau 0.1:", check_bound_lower(ellipse, 0.1, 0.25))
print("upper 1.5 (false):", check_bound_upper(ellipse, 0.1, 1.5))
