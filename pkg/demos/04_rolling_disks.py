"""
Rolling disks as tau shrinks
============================

With curvature at most kappa0 the inscribed mangled polygons shrink to a
disk of radius 1/kappa0 rolling inside the body; with curvature at least
kappa0 the fattened polygons converge to a disk of radius 1/kappa0 holding it.
"""
import numpy as np

from blaschke import blaschke_limit_inscribed, strantzen_limit_outscribed
from blaschke.bodies import BodySpec, generate_body

ellipse = generate_body(BodySpec("ellipse", {"a": 2.0, "b": 1.0}, 8192))
grid = [0.1, 0.05, 0.02, 0.01, 0.005]

ins = blaschke_limit_inscribed(ellipse, 2.0, grid)
print("inscribed, kappa0 = 2 (target radius 0.5)")
for r in ins.rows:
    print(f"  tau={r.tau:<6} k={r.k:<4} radius={r.certified_radius:.5f} contained={r.contained}")
print("  disk of radius 1/2 inside at every sample:", ins.disk_contained)

out = strantzen_limit_outscribed(ellipse, 0.25, grid)
print("circumscribed, kappa0 = 1/4 (target radius 4)")
for r in out.rows:
    print(f"  tau={r.tau:<6} k={r.k:<5} radius={r.certified_radius:.5f} contained={r.contained}")
print("  disk of radius 4 around the body at every sample:", out.disk_contained)

# Too large a rolling disk pokes out near the flat ends
bad = strantzen_limit_outscribed(ellipse, 0.3, [0.01])
pts = np.array([p for _, p, _ in bad.disk_failures])
print(f"kappa0 = 0.3: {len(pts)} failures, |x| <= {np.abs(pts[:, 0]).max():.2f}")
