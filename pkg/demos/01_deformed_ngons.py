"""
Mangled and fattened polygons
=============================

Build the two polygon families, compare their closed-form radii with direct
computations, and draw a few of them.
"""
import math
from pathlib import Path

import numpy as np

from blaschke import deformed_ngons as dn
from blaschke.geom2d import chebyshev_center, min_enclosing_circle, minkowski_sum
from blaschke.svg import render_svg

out = Path(__file__).parent / "output"
out.mkdir(exist_ok=True)

# M_2 is the unit square standing on a corner
print(np.round(dn.standard_mangled(2).vertices, 6))

# A target angle phi picks k; phi* = pi / 2k is the angle actually used
for phi in (0.3, 0.1, 0.01):
    print(f"phi={phi}: mangled k={dn.k_for_mangled(phi)}, fattened k={dn.k_for_fattened(phi)}")

# Closed-form radii against the LP inradius and the minimal enclosing circle
print(" k    r (closed)    r (LP)        R (closed)    R (MEC)")
for k in (2, 3, 5, 8, 16):
    poly = dn.standard_mangled(k).standard()
    r, R = dn.mangled_radii(k=k)
    print(f"{k:2d}  {r:.10f}  {chebyshev_center(poly)[1]:.10f}  {R:.10f}  {min_enclosing_circle(poly).radius:.10f}")

# Both families behave like a disk of radius 1 / phi* as k grows
for k in (16, 64, 256, 1024):
    ps = math.pi / (2 * k)
    print(k, [round(ps * x, 5) for x in (*dn.mangled_radii(k=k), *dn.fattened_radii(k=k))])

# M_k + S is the regular 4k-gon Q, and Q + S is F_k
k = 3
S = dn.unit_square()
Q = minkowski_sum(dn.standard_mangled(k).standard(), S)
F = minkowski_sum(Q, S)
print("Q vertices:", Q.n, " F vertices:", F.n)

svg = render_svg([dn.standard_fattened(k).vertices], overlays=[Q.vertices, dn.standard_mangled(k).vertices])
(out / "ngons_k3.svg").write_text(svg)
print("wrote", out / "ngons_k3.svg")
