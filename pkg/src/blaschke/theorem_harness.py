"""Numerical checks of the discrete inscribed and circumscribed polygon theorems.

Inscribed: if the normal modulus of a convex curve satisfies
``omega(tau) <= phi < pi/4``, then at every boundary point ``x`` with outer
normal ``n0 = (sin alpha, -cos alpha)`` the placed mangled polygon
``U_alpha(tau M(phi)) + x`` lies in the body.  The same holds with the
arc-length modulus.

Circumscribed: if ``Omega(tau) >= phi > 0`` then the placed fattened polygon
``U_alpha(tau F(phi)) + x`` contains the body.

The checks below sample boundary points, place the polygons and test
containment vertex-wise.  Failing hypotheses are reported as such, never as
counterexamples.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import normal_field as nf
from .deformed_ngons import (
    fattened_radii,
    k_for_fattened,
    k_for_mangled,
    mangled_radii,
    standard_fattened,
    standard_mangled,
)
from .geom2d import ConvexPolyline2

PASSED = "passed"
FAILED = "failed"
UNSATISFIED = "hypothesis-unsatisfied"


@dataclass
class VerificationReport:
    body_id: str
    hypothesis: dict
    points_checked: int = 0
    placements_checked: int = 0
    failures: list = field(default_factory=list)
    worst_penetration: float | None = None
    tolerance: float = 0.0
    status: str = PASSED
    reason: str | None = None

    @property
    def passed(self) -> bool:
        return self.status == PASSED

    def to_dict(self) -> dict:
        return {
            "body_id": self.body_id,
            "status": self.status,
            "passed": self.passed,
            "reason": self.reason,
            "hypothesis": dict(self.hypothesis),
            "points_checked": self.points_checked,
            "placements_checked": self.placements_checked,
            "tolerance": self.tolerance,
            "worst_penetration": self.worst_penetration,
            "failures": [
                {"index": i, "point": [float(p[0]), float(p[1])], "normal_angle": a, "penetration": d}
                for i, p, a, d in self.failures
            ],
        }


def default_tolerance(curve: ConvexPolyline2) -> float:
    return 1e-9 * curve.diameter


def sample_vertices(curve: ConvexPolyline2, count: int) -> np.ndarray:
    """Vertices nearest to the arc positions ``i * perimeter / count``."""
    if count < 1:
        raise ValueError("sample_count must be >= 1")
    arc = curve.cumulative_arc
    s = np.arange(count) * (curve.perimeter / count)
    j = np.clip(np.searchsorted(arc, s), 1, curve.n)
    nearest = np.where(s - arc[j - 1] <= arc[j] - s, j - 1, j) % curve.n
    return np.unique(nearest)


def sample_normals(field_: nf.LiftedNormalField, idx: np.ndarray) -> np.ndarray:
    """Normal angles to test at each sampled vertex: both cone ends and the bisector."""
    lo, hi = field_.vertex_lo[idx], field_.vertex_hi[idx]
    return np.stack([lo, hi, 0.5 * (lo + hi)], axis=1)


def _collect(report, curve, idx, angles, worst_each, tol):
    # worst_each: (samples, normals)
    per_point = worst_each.max(axis=1)
    which = worst_each.argmax(axis=1)
    report.points_checked = len(idx)
    report.placements_checked = int(worst_each.size)
    report.worst_penetration = float(per_point.max())
    report.tolerance = tol
    for s in np.flatnonzero(per_point > tol):
        report.failures.append((int(idx[s]), curve.vertices[idx[s]], float(angles[s, which[s]]), float(per_point[s])))
    report.status = FAILED if report.failures else PASSED
    return report


def _check_args(tau, sample_count):
    if not tau > 0:
        raise ValueError("tau must be positive")
    if sample_count < 1:
        raise ValueError("sample_count must be >= 1")


class _Support:
    """Support function of a convex polygon, looked up through its normal cones."""

    def __init__(self, curve: ConvexPolyline2):
        f = nf.lift_normals(curve)
        self.v = curve.vertices
        self.base = float(f.vertex_lo[0])
        self.hi = np.asarray(f.vertex_hi)

    def __call__(self, angles) -> np.ndarray:
        a = self.base + np.mod(np.asarray(angles) - self.base, 2 * math.pi)
        n = len(self.v)
        i = np.minimum(np.searchsorted(self.hi, a), n - 1)
        u = np.stack([np.cos(a), np.sin(a)], axis=-1)
        # neighbours guard against rounding at cone boundaries
        vals = [np.einsum("...j,...j->...", self.v[(i + d) % n], u) for d in (-1, 0, 1)]
        return np.maximum.reduce(vals)


def inscribed_penetrations(curve, vertices_std, points, angles, tau) -> np.ndarray:
    """Worst vertex penetration of ``U_alpha(tau P) + x`` out of ``curve``
    for each point and normal angle (``alpha = angle + pi/2``).

    Evaluated as ``max_i h_placed(u_i) - offset_i`` over the edges of
    ``curve``, which equals the largest signed vertex distance.
    """
    h = _Support(ConvexPolyline2(vertices_std))
    theta = np.arctan2(curve.outer_normals[:, 1], curve.outer_normals[:, 0])
    nrm, off = curve.outer_normals, curve.offsets
    out = np.empty(angles.shape)
    for i in range(len(points)):
        alpha = angles[i] + math.pi / 2
        vals = tau * h(theta[None, :] - alpha[:, None]) + (nrm @ points[i] - off)[None, :]
        out[i] = vals.max(axis=1)
    return out


def outscribed_penetrations(curve, vertices_std, points, angles, tau) -> np.ndarray:
    """Worst vertex penetration of ``curve`` out of ``U_alpha(tau P) + x``."""
    std = ConvexPolyline2(vertices_std)
    h = _Support(curve)
    psi = np.arctan2(std.outer_normals[:, 1], std.outer_normals[:, 0])
    out = np.empty(angles.shape)
    for i in range(len(points)):
        a = psi[None, :] + angles[i][:, None] + math.pi / 2
        u = np.stack([np.cos(a), np.sin(a)], axis=-1)
        vals = h(a) - tau * std.offsets[None, :] - u @ points[i]
        out[i] = vals.max(axis=1)
    return out


def sagitta_tolerance(curve: ConvexPolyline2) -> float:
    """Gap allowance between a sampled polygon and the smooth body it samples.

    Edge ``i`` is read as the chord of a circular arc turning by the mean of
    its two end cones, ``beta``, whose sagitta is ``(L/2) tan(beta/4)``
    (exact for circle samples).  Twice the largest such sagitta leaves room
    for curvature varying along an edge and for the touching case, where the
    disk and the sampled body share a boundary.
    """
    f = nf.lift_normals(curve)
    w = f.cone_widths
    beta = 0.5 * (w + np.roll(w, -1))
    sag = 0.5 * curve.edge_lengths * np.tan(beta / 4)
    return max(default_tolerance(curve), 2 * float(sag.max()))


def verify_inscribed(curve: ConvexPolyline2, tau: float, metric: str = "chord", sample_count: int = 256,
                     tol: float | None = None, place_tau: float | None = None,
                     body_id: str = "body") -> VerificationReport:
    """Place mangled polygons at sampled boundary points and test they stay inside.

    ``phi`` is the measured modulus at ``tau``.  ``place_tau`` overrides the
    scale of the placed polygons (used for negative controls).
    """
    _check_args(tau, sample_count)
    field_ = nf.lift_normals(curve)
    phi = nf.modulus_of_continuity(field_, tau, metric)
    tol = default_tolerance(curve) if tol is None else tol
    hyp = {"tau": tau, "phi": phi, "metric": metric, "measured_modulus": phi}
    report = VerificationReport(body_id, hyp, tolerance=tol)
    if not phi < math.pi / 4:
        report.status = UNSATISFIED
        report.reason = "measured modulus is not below pi/4"
        return report
    ngon = standard_mangled(k_for_mangled(phi))
    hyp.update(k=ngon.k, phi_star=ngon.phi_star, place_tau=place_tau or tau)
    idx = sample_vertices(curve, sample_count)
    angles = sample_normals(field_, idx)
    pen = inscribed_penetrations(curve, ngon.vertices, curve.vertices[idx], angles, place_tau or tau)
    return _collect(report, curve, idx, angles, pen, tol)


def verify_outscribed(curve: ConvexPolyline2, tau: float, sample_count: int = 256,
                      tol: float | None = None, place_tau: float | None = None,
                      body_id: str = "body") -> VerificationReport:
    """Place fattened polygons at sampled boundary points and test they contain the body."""
    _check_args(tau, sample_count)
    field_ = nf.lift_normals(curve)
    phi = nf.minimal_oscillation(field_, tau, "chord")
    tol = default_tolerance(curve) if tol is None else tol
    hyp = {"tau": tau, "phi": None if nf.is_vacuous(phi) else phi, "metric": "chord",
           "measured_modulus": None if nf.is_vacuous(phi) else phi}
    report = VerificationReport(body_id, hyp, tolerance=tol)
    if nf.is_vacuous(phi):
        report.status = UNSATISFIED
        report.reason = "no boundary points at distance tau or more"
        return report
    if not phi > 0:
        report.status = UNSATISFIED
        report.reason = "edge longer than tau" if curve.edge_lengths.max() >= tau else "minimal oscillation is zero"
        return report
    # F(phi) only depends on k, and k = 1 for every phi >= pi/2
    ngon = standard_fattened(k_for_fattened(min(phi, math.pi / 2)))
    hyp.update(k=ngon.k, phi_star=ngon.phi_star, place_tau=place_tau or tau)
    idx = sample_vertices(curve, sample_count)
    angles = sample_normals(field_, idx)
    pen = outscribed_penetrations(curve, ngon.vertices, curve.vertices[idx], angles, place_tau or tau)
    return _collect(report, curve, idx, angles, pen, tol)


# -- rolling disk limits -----------------------------------------------------

@dataclass
class LimitRow:
    tau: float
    phi: float
    phi_measured: float
    k: int
    certified_radius: float
    worst_penetration: float
    contained: bool
    hypothesis_holds: bool

    def to_dict(self) -> dict:
        # rows whose hypothesis fails carry inf/nan placeholders
        return {k: (None if isinstance(v, float) and not math.isfinite(v) else v)
                for k, v in self.__dict__.items()}


@dataclass
class LimitTable:
    kind: str
    kappa0: float
    target_radius: float
    rows: list
    disk_worst_penetration: float
    disk_failures: list
    points_checked: int
    tolerance: float

    @property
    def disk_contained(self) -> bool:
        return not self.disk_failures

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "kappa0": self.kappa0,
            "target_radius": self.target_radius,
            "rows": [r.to_dict() for r in self.rows],
            "disk_check": {
                "passed": self.disk_contained,
                "points_checked": self.points_checked,
                "tolerance": self.tolerance,
                "worst_penetration": self.disk_worst_penetration,
                "failures": [
                    {"index": i, "point": [float(p[0]), float(p[1])], "penetration": d}
                    for i, p, d in self.disk_failures
                ],
            },
        }


def _unit(angles):
    return np.stack([np.cos(angles), np.sin(angles)], axis=-1)


def _disk_penetrations(curve, centers, radius, inside: bool) -> np.ndarray:
    if inside:
        return (centers @ curve.outer_normals.T - curve.offsets).max(axis=1) + radius
    v = curve.vertices
    out = np.empty(len(centers))
    for s in range(0, len(centers), 256):
        c = centers[s:s + 256]
        d2 = ((v[None, :, :] - c[:, None, :]) ** 2).sum(-1).max(axis=1)
        out[s:s + 256] = np.sqrt(d2) - radius
    return out


def _limit(kind, curve, kappa0, tau_grid, sample_count, tol):
    if not kappa0 > 0:
        raise ValueError("kappa0 must be positive")
    field_ = nf.lift_normals(curve)
    tol = sagitta_tolerance(curve) if tol is None else tol
    idx = sample_vertices(curve, sample_count)
    pts = curve.vertices[idx]
    normals = _unit(field_.mid_angles()[idx])
    inside = kind == "blaschke"
    slack = nf.discretization_slack(field_)
    rows = []
    for tau in tau_grid:
        if inside:
            measured = nf.modulus_of_continuity(field_, tau, "chord")
            phi = kappa0 * tau / math.cos(measured) if measured < math.pi / 2 else math.inf
            holds = measured <= phi + slack and phi < math.pi / 4
            if not phi < math.pi / 4:
                rows.append(LimitRow(tau, phi, measured, 0, 0.0, math.nan, False, False))
                continue
            k = k_for_mangled(phi)
            r, R = mangled_radii(k=k)
            centers, radius = pts - tau * R * normals, tau * r
        else:
            measured = nf.minimal_oscillation(field_, tau, "chord")
            phi = kappa0 * tau
            holds = (not nf.is_vacuous(measured)) and measured >= phi - slack
            k = k_for_fattened(min(phi, math.pi / 2))
            r, R = fattened_radii(k=k)
            centers, radius = pts - tau * r * normals, tau * R
        pen = _disk_penetrations(curve, centers, radius, inside)
        worst = float(pen.max())
        rows.append(LimitRow(tau, phi, None if nf.is_vacuous(measured) else measured, k, radius, worst,
                             worst <= tol, holds))
    target = 1 / kappa0
    pen = _disk_penetrations(curve, pts - target * normals, target, inside)
    failures = [(int(idx[s]), pts[s], float(pen[s])) for s in np.flatnonzero(pen > tol)]
    return LimitTable(kind, kappa0, target, rows, float(pen.max()), failures, len(idx), tol)


def blaschke_limit_inscribed(curve: ConvexPolyline2, kappa0: float, tau_grid, sample_count: int = 256,
                             tol: float | None = None) -> LimitTable:
    """Inscribed disks certified by the mangled polygons along a grid of ``tau``.

    Each row uses ``phi = kappa0 * tau / cos(omega(tau))``, the bound that a
    curvature ceiling ``kappa0`` puts on the modulus, and records the disk
    ``D(x - tau R(phi) n, tau r(phi))`` at every sample.  The closing check
    tests ``D(x - n / kappa0, 1 / kappa0)`` inside the body directly.
    """
    return _limit("blaschke", curve, kappa0, list(tau_grid), sample_count, tol)


def strantzen_limit_outscribed(curve: ConvexPolyline2, kappa0: float, tau_grid, sample_count: int = 256,
                               tol: float | None = None) -> LimitTable:
    """Circumscribed disks certified by the fattened polygons, ``phi = kappa0 * tau``.

    Rows record ``D(x - tau r(phi) n, tau R(phi))`` containing the body; the
    closing check tests ``D(x - n / kappa0, 1 / kappa0)`` around the body.
    """
    return _limit("strantzen", curve, kappa0, list(tau_grid), sample_count, tol)
