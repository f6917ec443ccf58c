"""
Placing deformed polygons along the boundary
============================================

A mangled polygon of size tau, tilted by a boundary normal, fits inside the
body at every boundary point; a fattened one holds the whole body.  Blowing
the inscribed polygon up tenfold breaks the first statement.
"""
from pathlib import Path

from blaschke import theorem_harness as th
from blaschke.bodies import BodySpec, generate_body
from blaschke.svg import render_svg

out = Path(__file__).parent / "output"
out.mkdir(exist_ok=True)

spec = BodySpec("ellipse", {"a": 2.0, "b": 1.0}, 4096)
ellipse = generate_body(spec)
tol = max(th.default_tolerance(ellipse), spec.sagitta())

for metric in ("chord", "arc"):
    rep = th.verify_inscribed(ellipse, 0.05, metric, 256, tol)
    print(f"inscribed ({metric}): {rep.status}, worst penetration {rep.worst_penetration:.2e}, "
          f"phi={rep.hypothesis['phi']:.4f}")

rep = th.verify_outscribed(ellipse, 0.05, 256, tol)
print(f"outscribed: {rep.status}, worst penetration {rep.worst_penetration:.2e}")

# Negative control: same angle, ten times the size
bad = th.verify_inscribed(ellipse, 0.05, "chord", 256, tol, place_tau=0.5)
print(f"oversized: {bad.status} at {len(bad.failures)} of {bad.points_checked} points")
svg = render_svg([ellipse.vertices], markers=[p for _, p, *_ in bad.failures])
(out / "oversized_failures.svg").write_text(svg)

# A square has corners, so no angle below pi/2 works for it
square = generate_body(BodySpec("polygon", {"vertices": [[0, 0], [1, 0], [1, 1], [0, 1]]}))
print("square:", th.verify_outscribed(square, 0.1).status)
