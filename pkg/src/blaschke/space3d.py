"""Convex polytopes in space, their plane sections and normal moduli.

For a convex body ``K`` with ``B(c, r) ⊂ K ⊂ B(c, R)`` and a plane ``P``
through ``c``, the outer normals of the section ``K ∩ P`` are the normalized
projections of the normals of ``K``.  Projection can shrink a normal by at
most the factor ``r / R``, which gives

* ``|w - z| <= (2R/r) |u - v|`` for normals ``u, v`` and their projections,
* ``omega_sec(tau) <= 2 arcsin((2R/r) sin(omega(tau) / 2))`` for small ``tau``,

and, combined with the planar inscribed-polygon theorem, mangled polygons
with angle ``Phi = 2 arcsin((2R/r) sin(phi/2))`` placed in any such section.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import ConvexHull, cKDTree

from . import normal_field as nf
from .deformed_ngons import k_for_mangled, standard_mangled
from .geom2d import ConvexPolyline2, max_inscribed_ball
from .theorem_harness import UNSATISFIED, VerificationReport, inscribed_penetrations

PLANE_TOL = 1e-9


class ConvexPolytope3:
    """Convex hull of a point set in space.

    Coplanar hull triangles are merged into facets.  ``center`` is the
    Chebyshev center, ``inradius_r`` the radius of the largest ball about it
    and ``outradius_R`` the largest vertex distance from it.
    """

    def __init__(self, points):
        pts = np.asarray(points, dtype=float).reshape(-1, 3)
        if len(pts) < 4 or not np.all(np.isfinite(pts)):
            raise ValueError("need at least 4 finite points")
        hull = ConvexHull(pts)
        used = np.unique(hull.simplices)
        remap = np.full(len(pts), -1)
        remap[used] = np.arange(len(used))
        self.vertices = pts[used]
        self.triangles = remap[hull.simplices]
        eq = hull.equations
        scale = float(np.abs(self.vertices).max())
        # merge coplanar triangles by rounding their plane equations
        key = np.round(np.hstack([eq[:, :3], eq[:, 3:] / scale]) / 1e-9).astype(np.int64)
        _, first, label = np.unique(key, axis=0, return_index=True, return_inverse=True)
        label = label.ravel()
        self.triangle_facet = label
        self.normals = eq[first, :3] / np.linalg.norm(eq[first, :3], axis=1)[:, None]
        self.offsets = np.einsum("ij,ij->i", self.normals, self.vertices[self.triangles[first, 0]])
        self.facets = [np.unique(self.triangles[label == f]) for f in range(len(first))]
        self.center, self.inradius_r = max_inscribed_ball(self.normals, self.offsets)
        self.outradius_R = float(np.linalg.norm(self.vertices - self.center, axis=1).max())
        if not 0 < self.inradius_r < self.outradius_R:
            raise ValueError("degenerate polytope")

    def __repr__(self):
        return (f"ConvexPolytope3(vertices={len(self.vertices)}, facets={len(self.normals)}, "
                f"r={self.inradius_r:.6g}, R={self.outradius_R:.6g})")

    @property
    def diameter(self) -> float:
        v = self.vertices[ConvexHull(self.vertices).vertices]
        best = 0.0
        for s in range(0, len(v), 512):
            best = max(best, float(np.linalg.norm(v[s:s + 512, None] - v[None], axis=2).max()))
        return best

    def facet_turning(self) -> float:
        """Largest angle between the normals of two facets sharing an edge."""
        tri = self.triangles
        edges = np.concatenate([tri[:, [0, 1]], tri[:, [1, 2]], tri[:, [2, 0]]])
        owner = np.tile(self.triangle_facet, 3)
        edges = np.sort(edges, axis=1)
        order = np.lexsort((edges[:, 1], edges[:, 0]))
        e, o = edges[order], owner[order]
        same = np.all(e[1:] == e[:-1], axis=1)
        a, b = o[:-1][same], o[1:][same]
        cos = np.einsum("ij,ij->i", self.normals[a], self.normals[b])
        return float(np.arccos(np.clip(cos, -1, 1)).max())

    def transformed(self, scale: float = 1.0, shift=(0.0, 0.0, 0.0)) -> "ConvexPolytope3":
        return ConvexPolytope3(scale * self.vertices + np.asarray(shift, dtype=float))

    def ray_exit(self, directions) -> tuple[np.ndarray, list]:
        """Boundary points ``c + t d`` and the facets containing each."""
        d = np.asarray(directions, dtype=float).reshape(-1, 3)
        nd = d @ self.normals.T
        room = self.offsets - self.normals @ self.center
        with np.errstate(divide="ignore"):
            t = np.where(nd > 0, room[None, :] / np.where(nd > 0, nd, 1.0), np.inf)
        tmin = t.min(axis=1)
        pts = self.center + tmin[:, None] * d
        resid = np.abs(pts @ self.normals.T - self.offsets)
        tol = PLANE_TOL * max(1.0, self.outradius_R)
        on = [np.flatnonzero(row <= tol) for row in resid]
        return pts, on


# -- geometry kernels ----------------------------------------------------------

def _dot(a, b):
    return np.einsum("...j,...j->...", a, b)


def _point_segment(p, a, b):
    ab = b - a
    t = np.clip(_dot(p - a, ab) / np.maximum(_dot(ab, ab), 1e-300), 0.0, 1.0)
    return np.linalg.norm(p - (a + t[..., None] * ab), axis=-1)


def point_triangle_distance(p, a, b, c):
    """Euclidean distance from points to triangles (arrays broadcast row-wise)."""
    n = np.cross(b - a, c - a)
    nn = np.linalg.norm(n, axis=-1)
    n = n / np.maximum(nn, 1e-300)[..., None]
    h = _dot(p - a, n)
    q = p - h[..., None] * n
    # inside test with edge cross products sharing the normal's sign
    s1 = _dot(np.cross(b - a, q - a), n)
    s2 = _dot(np.cross(c - b, q - b), n)
    s3 = _dot(np.cross(a - c, q - c), n)
    inside = (s1 >= 0) & (s2 >= 0) & (s3 >= 0)
    edge = np.minimum.reduce([_point_segment(p, a, b), _point_segment(p, b, c), _point_segment(p, c, a)])
    return np.where(inside, np.abs(h), edge)


def segment_segment_distance(p1, q1, p2, q2):
    """Distance between segments ``p1q1`` and ``p2q2`` (non-degenerate)."""
    d1, d2, r = q1 - p1, q2 - p2, p1 - p2
    a, e, f = _dot(d1, d1), _dot(d2, d2), _dot(d2, r)
    c, b = _dot(d1, r), _dot(d1, d2)
    denom = a * e - b * b
    s = np.where(denom > 1e-300 * a * e, np.clip((b * f - c * e) / np.where(denom > 0, denom, 1.0), 0, 1), 0.0)
    t = (b * s + f) / e
    # clamp t and recompute s where needed
    s = np.where(t < 0, np.clip(-c / a, 0, 1), np.where(t > 1, np.clip((b - c) / a, 0, 1), s))
    t = np.clip(t, 0, 1)
    return np.linalg.norm((p1 + s[..., None] * d1) - (p2 + t[..., None] * d2), axis=-1)


def triangle_distance(A, B):
    """Distance between triangles ``A`` and ``B`` given as ``(..., 3, 3)`` arrays.

    Exact when the triangles do not cross, as for boundary triangles of a
    convex polytope: the closest pair then involves a vertex or two edges.
    """
    vals = []
    for i in range(3):
        vals.append(point_triangle_distance(A[..., i, :], B[..., 0, :], B[..., 1, :], B[..., 2, :]))
        vals.append(point_triangle_distance(B[..., i, :], A[..., 0, :], A[..., 1, :], A[..., 2, :]))
    for i in range(3):
        for j in range(3):
            vals.append(segment_segment_distance(A[..., i, :], A[..., (i + 1) % 3, :],
                                                 B[..., j, :], B[..., (j + 1) % 3, :]))
    return np.minimum.reduce(vals)


# -- moduli ----------------------------------------------------------------------

def body_normal_modulus(polytope: ConvexPolytope3, tau: float, norm: bool = False) -> float:
    """Largest normal angle between boundary points at most ``tau`` apart.

    Every boundary point lies on a closed facet whose normal belongs to its
    normal cone, so the supremum runs over facet pairs whose closures come
    within ``tau``.  With ``norm=True`` returns ``|u - w| = 2 sin(angle / 2)``.
    """
    if not tau > 0:
        raise ValueError("tau must be positive")
    V, T, lab = polytope.vertices, polytope.triangles, polytope.triangle_facet
    tris = V[T]
    cen = tris.mean(axis=1)
    rad = np.linalg.norm(tris - cen[:, None, :], axis=2).max()
    limit = tau + PLANE_TOL * max(1.0, polytope.outradius_R)
    tree = cKDTree(cen)
    best = 0.0
    for start in range(0, len(T), 2048):
        f = np.arange(start, min(start + 2048, len(T)))
        hits = tree.query_ball_point(cen[f], limit + 2 * rad)
        counts = np.fromiter((len(h) for h in hits), dtype=np.int64, count=len(f))
        ff = np.repeat(f, counts)
        gg = np.concatenate([np.asarray(h, dtype=np.int64) for h in hits]) if counts.sum() else ff
        keep = gg > ff
        ff, gg = ff[keep], gg[keep]
        cos = _dot(polytope.normals[lab[ff]], polytope.normals[lab[gg]])
        ang = np.arccos(np.clip(cos, -1.0, 1.0))
        keep = ang > best
        ff, gg, ang = ff[keep], gg[keep], ang[keep]
        order = np.argsort(-ang, kind="stable")
        for s in range(0, len(order), 4096):
            sel = order[s:s + 4096]
            d = triangle_distance(tris[ff[sel]], tris[gg[sel]])
            ok = np.flatnonzero(d <= limit)
            if len(ok):
                best = float(ang[sel[ok[0]]])
                break
    return 2 * math.sin(best / 2) if norm else best


def body_minimal_oscillation_estimate(polytope: ConvexPolytope3, tau: float) -> float:
    """Smallest angle between facet normals over facet pairs reaching ``tau``.

    An upper estimate of the minimal oscillation: normals interior to edge
    and vertex cones are not considered.  Quadratic in the facet count.
    """
    F = len(polytope.normals)
    best = math.inf
    for f in range(F):
        vf = polytope.vertices[polytope.facets[f]]
        for g in range(f + 1, F):
            vg = polytope.vertices[polytope.facets[g]]
            if np.linalg.norm(vf[:, None] - vg[None], axis=2).max() >= tau:
                c = float(polytope.normals[f] @ polytope.normals[g])
                best = min(best, math.acos(max(-1.0, min(1.0, c))))
    if any(np.linalg.norm(polytope.vertices[v][:, None] - polytope.vertices[v][None], axis=2).max() >= tau
           for v in polytope.facets):
        return 0.0
    return best


# -- sections ----------------------------------------------------------------------

@dataclass
class PlaneSection:
    """``K ∩ P`` in coordinates ``p = origin + s e1 + t e2``.

    ``edge_facets[i]`` is the facet of the polytope carrying section edge ``i``.
    """

    origin: np.ndarray
    e1: np.ndarray
    e2: np.ndarray
    polygon: ConvexPolyline2
    edge_facets: np.ndarray
    source: ConvexPolytope3 = field(repr=False)

    def to_plane(self, p) -> np.ndarray:
        d = np.asarray(p, dtype=float) - self.origin
        return np.stack([_dot(d, self.e1), _dot(d, self.e2)], axis=-1)

    def to_space(self, q) -> np.ndarray:
        q = np.asarray(q, dtype=float)
        return self.origin + q[..., :1] * self.e1 + q[..., 1:2] * self.e2


def _check_basis(e1, e2):
    e1, e2 = np.asarray(e1, dtype=float), np.asarray(e2, dtype=float)
    if (abs(e1 @ e1 - 1) > 1e-12 or abs(e2 @ e2 - 1) > 1e-12 or abs(e1 @ e2) > 1e-12):
        raise ValueError("plane basis must be orthonormal")
    return e1, e2


def section(polytope: ConvexPolytope3, e1, e2, origin=None) -> PlaneSection:
    """Intersect the polytope with the plane through ``origin`` (default: the
    center) spanned by the orthonormal pair ``e1, e2``.

    Only facets meeting the plane can carry section edges.  Their half-planes
    are intersected through the polar dual about the origin, which must be an
    interior point.
    """
    e1, e2 = _check_basis(e1, e2)
    c = polytope.center if origin is None else np.asarray(origin, dtype=float)
    m = np.cross(e1, e2)
    side = (polytope.vertices - c) @ m
    tol = PLANE_TOL * max(1.0, polytope.outradius_R)
    tri_side = side[polytope.triangles]
    meets = (tri_side.min(axis=1) <= tol) & (tri_side.max(axis=1) >= -tol)
    cand = np.unique(polytope.triangle_facet[meets])
    A = np.stack([polytope.normals[cand] @ e1, polytope.normals[cand] @ e2], axis=1)
    h = polytope.offsets[cand] - polytope.normals[cand] @ c
    if np.any(h <= 0):
        raise ValueError("section origin is not interior")
    good = np.linalg.norm(A, axis=1) > 1e-12
    A, h, cand = A[good], h[good], cand[good]
    dual = A / h[:, None]
    hull = ConvexHull(dual)
    ring = hull.vertices  # counterclockwise
    nxt = np.roll(ring, -1)
    # vertex between consecutive edge lines i, j: solve A[[i, j]] x = h[[i, j]]
    M = np.stack([A[ring], A[nxt]], axis=1)
    rhs = np.stack([h[ring], h[nxt]], axis=1)
    pts = np.linalg.solve(M, rhs[..., None])[..., 0]
    poly = ConvexPolyline2(np.roll(pts, 1, axis=0))
    # label each section edge with the facet whose line it lies on
    mid = 0.5 * (poly.vertices + np.roll(poly.vertices, -1, axis=0))
    resid = np.abs(mid @ A.T - h[None, :]) / np.linalg.norm(A, axis=1)[None, :]
    labels = cand[resid.argmin(axis=1)]
    return PlaneSection(c, e1, e2, poly, labels, polytope)


def project_normal(u, e1, e2) -> tuple[np.ndarray, bool, float]:
    """Unit in-plane direction of ``u`` in ``(e1, e2)`` coordinates.

    Returns ``(w, degenerate, |Pi u|)``; ``degenerate`` is set when the
    projection is shorter than 1e-12 (``w`` is then zero).
    """
    u = np.asarray(u, dtype=float)
    p = np.array([u @ np.asarray(e1, dtype=float), u @ np.asarray(e2, dtype=float)])
    length = float(np.linalg.norm(p))
    if length < 1e-12:
        return np.zeros(2), True, length
    return p / length, False, length


def section_normal_modulus(sec: PlaneSection, tau: float) -> float:
    return nf.modulus_of_continuity(sec.polygon, tau, "chord")


def random_plane(rng) -> tuple[np.ndarray, np.ndarray]:
    """Orthonormal pair spanning a plane with a uniformly random normal."""
    m = rng.unit_vector3()
    helper = np.array([1.0, 0.0, 0.0]) if abs(m[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
    e1 = np.cross(m, helper)
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(m, e1)
    return e1, e2


def fibonacci_directions(count: int) -> np.ndarray:
    """Nearly uniform unit vectors on the sphere (golden-angle spiral)."""
    i = np.arange(count) + 0.5
    z = 1 - 2 * i / count
    rho = np.sqrt(np.maximum(0.0, 1 - z * z))
    theta = math.pi * (3 - math.sqrt(5)) * i
    return np.stack([rho * np.cos(theta), rho * np.sin(theta), z], axis=1)


# -- checks --------------------------------------------------------------------------

@dataclass
class SectionBoundCheck:
    status: str
    tau: float
    ratio: float
    omega_body: float
    omega_section: float | None = None
    angle_bound: float | None = None
    norm_section: float | None = None
    norm_bound: float | None = None
    angle_ok: bool | None = None
    norm_ok: bool | None = None
    reason: str | None = None

    @property
    def passed(self) -> bool:
        return self.status == "passed"

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def space_gate(polytope: ConvexPolytope3, tau: float, omega_body: float) -> str | None:
    """Reason the section bound does not apply, or ``None``."""
    r, R = polytope.inradius_r, polytope.outradius_R
    if not tau < 2 * r:
        return "tau is not below 2r"
    if not omega_body < 2 * math.asin(r / (2 * R)):
        return "body modulus is not below 2 arcsin(r / 2R)"
    return None


def check_section_bound(polytope: ConvexPolytope3, sec: PlaneSection, tau: float,
                        omega_body: float | None = None, slack: float = 1e-9) -> SectionBoundCheck:
    """Compare the section modulus with ``2 arcsin((2R/r) sin(omega/2))`` and
    the chord form ``(2R/r) * 2 sin(omega/2)``."""
    w = body_normal_modulus(polytope, tau) if omega_body is None else omega_body
    ratio = 2 * polytope.outradius_R / polytope.inradius_r
    ws = section_normal_modulus(sec, tau)
    norm_sec, norm_body = 2 * math.sin(ws / 2), 2 * math.sin(w / 2)
    out = SectionBoundCheck("passed", tau, ratio, w, ws, norm_section=norm_sec, norm_bound=ratio * norm_body)
    out.norm_ok = norm_sec <= ratio * norm_body + slack
    reason = space_gate(polytope, tau, w)
    if reason:
        out.status, out.reason = UNSATISFIED, reason
        return out
    out.angle_bound = 2 * math.asin(min(1.0, ratio * math.sin(w / 2)))
    out.angle_ok = ws <= out.angle_bound + slack
    out.status = "passed" if out.angle_ok and out.norm_ok else "failed"
    return out


@dataclass
class ProjectionCheck:
    """Projected-normal facts on one section."""

    min_projection: float
    cone_violation: float
    pair_worst_ratio: float
    pairs_checked: int

    def holds(self, r_over_R: float, tol: float = 1e-6) -> bool:
        return (self.min_projection >= r_over_R - 1e-9 and self.cone_violation <= tol
                and self.pair_worst_ratio <= 1 + 1e-9)


def projection_checks(sec: PlaneSection) -> ProjectionCheck:
    """Projected normals on a section, edge by edge.

    * ``|Pi u| >= r/R`` for every normal carried by a section edge.
    * The normalized projection equals the section's own edge normal, and at
      every section vertex all normals of incident facets project into the
      vertex cone (reported as the largest angular excess).
    * ``|w - z| <= (2R/r) |u - v|`` over all pairs of section edges, reported
      as the worst ratio of the two sides.
    """
    P = sec.source
    poly = sec.polygon
    U = P.normals[sec.edge_facets]
    proj = np.stack([U @ sec.e1, U @ sec.e2], axis=1)
    plen = np.linalg.norm(proj, axis=1)
    W = proj / plen[:, None]
    V = poly.outer_normals
    # atan2 keeps tiny angles accurate where arccos of a dot product does not
    excess = float(np.abs(np.arctan2(W[:, 0] * V[:, 1] - W[:, 1] * V[:, 0], _dot(W, V))).max())
    # vertex cones
    field_ = nf.lift_normals(poly)
    X = sec.to_space(poly.vertices)
    tol = 1e-10 * max(1.0, P.outradius_R)
    resid = np.abs(X @ P.normals.T - P.offsets)
    for i in range(poly.n):
        fs = np.flatnonzero(resid[i] <= tol)
        pr = np.stack([P.normals[fs] @ sec.e1, P.normals[fs] @ sec.e2], axis=1)
        ang = np.arctan2(pr[:, 1], pr[:, 0])
        lo, hi = field_.vertex_lo[i], field_.vertex_hi[i]
        mid = 0.5 * (lo + hi)
        off = np.abs(np.mod(ang - mid + math.pi, 2 * math.pi) - math.pi) - 0.5 * (hi - lo)
        excess = max(excess, float(off.max()))
    ratio = 2 * P.outradius_R / P.inradius_r
    dW = np.linalg.norm(W[:, None] - W[None], axis=2)
    dU = np.linalg.norm(U[:, None] - U[None], axis=2)
    with np.errstate(divide="ignore", invalid="ignore"):
        rel = np.where(dW > 0, dW / (ratio * dU), 0.0)
    return ProjectionCheck(float(plen.min()), excess, float(np.nanmax(rel)), int(len(W) ** 2))


def _plane_through(polytope, x, directions):
    """Orthonormal bases of planes through ``x`` and the center, one per
    direction not parallel to ``x - c``, deduplicated."""
    a = x - polytope.center
    a = a / np.linalg.norm(a)
    out = []
    for d in directions:
        b = d - (d @ a) * a
        nb = np.linalg.norm(b)
        if nb < 1e-3:
            continue
        b = b / nb
        if any(abs(b @ q) > 1 - 1e-9 for _, q in out):
            continue
        out.append((a, b))
    return out


def verify_space_inscribed(polytope: ConvexPolytope3, tau: float, phi: float | None = None,
                           sample_count: int = 64, planes: int = 8, tol: float | None = None,
                           body_id: str = "polytope", omega_body: float | None = None) -> VerificationReport:
    """Mangled polygons in plane sections through boundary points and the center.

    ``phi`` defaults to the measured body modulus.  The hypotheses are
    ``0 < tau < 2r``, ``0 < phi < 2 arcsin(r / (4 sqrt2 R))`` and
    ``omega(tau) <= phi``; the placed polygons use
    ``Phi = 2 arcsin((2R/r) sin(phi/2))``.
    """
    if not tau > 0:
        raise ValueError("tau must be positive")
    if sample_count < 1 or planes < 1:
        raise ValueError("sample_count and planes must be >= 1")
    r, R = polytope.inradius_r, polytope.outradius_R
    w = body_normal_modulus(polytope, tau) if omega_body is None else omega_body
    phi = w if phi is None else float(phi)
    gate = 2 * math.asin(r / (4 * math.sqrt(2) * R))
    tol = 1e-9 * 2 * R if tol is None else tol
    hyp = {"tau": tau, "phi": phi, "metric": "chord", "measured_modulus": w, "gate": gate,
           "inradius_r": r, "outradius_R": R}
    report = VerificationReport(body_id, hyp, tolerance=tol)
    reasons = []
    if not tau < 2 * r:
        reasons.append("tau is not below 2r")
    if not 0 < phi < gate:
        reasons.append("phi is not below 2 arcsin(r / (4 sqrt2 R))")
    if not w <= phi:
        reasons.append("measured modulus exceeds phi")
    if reasons:
        report.status, report.reason = UNSATISFIED, "; ".join(reasons)
        return report
    Phi = 2 * math.asin((2 * R / r) * math.sin(phi / 2))
    ngon = standard_mangled(k_for_mangled(Phi))
    hyp.update(Phi=Phi, k=ngon.k, phi_star=ngon.phi_star)
    pts, on = polytope.ray_exit(fibonacci_directions(sample_count))
    plane_dirs = fibonacci_directions(4 * planes)
    worst = -math.inf
    checked = 0
    for i, (x, facets) in enumerate(zip(pts, on)):
        bases = _plane_through(polytope, x, plane_dirs)[:planes]
        for e1, e2 in bases:
            sec = section(polytope, e1, e2)
            x2 = sec.to_plane(x)
            angles = []
            for f in facets:
                wv, degenerate, _ = project_normal(polytope.normals[f], e1, e2)
                if degenerate:
                    raise AssertionError("normal projects to zero on a plane through an interior point")
                angles.append(math.atan2(wv[1], wv[0]))
            pen = inscribed_penetrations(sec.polygon, ngon.vertices, x2[None, :], np.array([angles]), tau)[0]
            checked += len(angles)
            j = int(pen.argmax())
            worst = max(worst, float(pen[j]))
            if pen[j] > tol:
                report.failures.append((i, x, angles[j], float(pen[j])))
    report.points_checked = len(pts)
    report.placements_checked = checked
    report.worst_penetration = worst
    report.status = "failed" if report.failures else "passed"
    return report


# -- bodies ---------------------------------------------------------------------------

def icosphere(subdivisions: int = 4, radius: float = 1.0) -> np.ndarray:
    """Vertices of a subdivided icosahedron projected to the sphere.

    ``20 * 4**subdivisions`` triangles; 4 gives 5120, 5 gives 20480.
    """
    if subdivisions < 0:
        raise ValueError("subdivisions must be >= 0")
    t = (1 + math.sqrt(5)) / 2
    verts = [(-1, t, 0), (1, t, 0), (-1, -t, 0), (1, -t, 0), (0, -1, t), (0, 1, t),
             (0, -1, -t), (0, 1, -t), (t, 0, -1), (t, 0, 1), (-t, 0, -1), (-t, 0, 1)]
    faces = [(0, 11, 5), (0, 5, 1), (0, 1, 7), (0, 7, 10), (0, 10, 11), (1, 5, 9), (5, 11, 4),
             (11, 10, 2), (10, 7, 6), (7, 1, 8), (3, 9, 4), (3, 4, 2), (3, 2, 6), (3, 6, 8),
             (3, 8, 9), (4, 9, 5), (2, 4, 11), (6, 2, 10), (8, 6, 7), (9, 8, 1)]
    verts = [np.array(v, dtype=float) / np.linalg.norm(v) for v in verts]
    for _ in range(subdivisions):
        cache = {}

        def midpoint(i, j):
            key = (min(i, j), max(i, j))
            if key not in cache:
                m = verts[i] + verts[j]
                verts.append(m / np.linalg.norm(m))
                cache[key] = len(verts) - 1
            return cache[key]

        new = []
        for a, b, c in faces:
            ab, bc, ca = midpoint(a, b), midpoint(b, c), midpoint(c, a)
            new += [(a, ab, ca), (b, bc, ab), (c, ca, bc), (ab, bc, ca)]
        faces = new
    return radius * np.array(verts)


def cube(side: float = 2.0) -> np.ndarray:
    h = side / 2
    return np.array([[x, y, z] for x in (-h, h) for y in (-h, h) for z in (-h, h)])


# -- exploration ----------------------------------------------------------------------

def explore_oscillation_ratio(rng, tau: float, bodies: int = 4, points: int = 200, planes: int = 8) -> list[dict]:
    """Random polytopes: smallest section oscillation over the body's.

    Reports, for each random body, the minimum over random central sections
    of ``Omega_sec(tau) / Omega_body(tau)`` (the body value is the facet-level
    estimate).  Nothing is asserted about the outcome.  Any facet wider
    than ``tau`` makes the body value zero, so ``tau`` should exceed the
    facet size of a ``points``-vertex hull.
    """
    rows = []
    for b in range(bodies):
        pts = np.array([rng.unit_vector3() for _ in range(points)])
        poly = ConvexPolytope3(pts)
        ob = body_minimal_oscillation_estimate(poly, tau)
        ratios = []
        for _ in range(planes):
            e1, e2 = random_plane(rng)
            sec = section(poly, e1, e2)
            os = nf.minimal_oscillation(sec.polygon, tau, "chord")
            if ob > 0 and not nf.is_vacuous(os) and math.isfinite(ob):
                ratios.append(os / ob)
        rows.append({"body": b, "facets": len(poly.normals), "Omega_body": ob,
                     "min_ratio": min(ratios) if ratios else None, "planes": len(ratios)})
    return rows
