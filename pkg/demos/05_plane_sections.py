"""
Plane sections of a polytope
============================

Planes through the Chebyshev center cut a convex polytope in convex
polygons.  Their normal fields turn at most 2R/r times faster than the
normals of the solid, which lets the planar placements work in space too.
"""
import numpy as np

from blaschke import space3d as s3
from blaschke.rng import Xoshiro256

ellipsoid = s3.ConvexPolytope3(s3.icosphere(5) * [2.0, 1.5, 1.0])
print(ellipsoid, f"r={ellipsoid.inradius_r:.4f} R={ellipsoid.outradius_R:.4f}")

rng = Xoshiro256(0)
tau = 0.05
w = s3.body_normal_modulus(ellipsoid, tau)
print(f"body modulus at tau={tau}: {w:.4f}")

growth = []
for _ in range(8):
    sec = s3.section(ellipsoid, *s3.random_plane(rng))
    chk = s3.check_section_bound(ellipsoid, sec, tau, w)
    growth.append(chk.norm_section / (2 * np.sin(w / 2)))
    print(f"  {sec.polygon.n:4d}-gon: section modulus {chk.omega_section:.4f} <= "
          f"{chk.angle_bound:.4f}  {chk.status}")
print(f"largest observed growth {max(growth):.3f}, allowed 2R/r = {chk.ratio:.3f}")

rep = s3.verify_space_inscribed(ellipsoid, 0.02, sample_count=32, planes=4)
print("placements in sections:", rep.status, rep.placements_checked, "checked")
cube = s3.ConvexPolytope3(s3.cube())
print("cube:", s3.verify_space_inscribed(cube, 0.05).status)

# Exploratory: how small can a section's oscillation be relative to the solid's?
for row in s3.explore_oscillation_ratio(Xoshiro256(1), 1.0, bodies=2, planes=6):
    print({k: (round(v, 4) if isinstance(v, float) else v) for k, v in row.items()})
