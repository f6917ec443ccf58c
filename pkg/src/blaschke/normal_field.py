"""Lifted outer normals of a convex polygon and their moduli.

The outer normal of a convex polygon is constant on each edge and sweeps a
closed angular interval (its normal cone) at each vertex.  Unwrapping the
normal angle along the boundary gives a monotone multivalued function on the
real line that gains exactly ``2*pi`` per loop; everything here is computed
from that lift.

Two distance notions are supported for the moduli:

``"chord"``
    Euclidean distance between boundary points; angles are
    ``arccos <u, w>`` and so lie in ``[0, pi]``.
``"arc"``
    Boundary arc length; angles are differences of the lift and may exceed
    ``pi``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import chain

import numpy as np
from scipy.spatial import cKDTree

from .geom2d import ConvexPolyline2

TWO_PI = 2 * math.pi
VACUOUS = math.inf
"""Minimal oscillation over an empty set of point pairs."""

_REL_EPS = 1e-12


def is_vacuous(value: float) -> bool:
    return math.isinf(value)


@dataclass(frozen=True)
class ModulusQuery:
    tau: float
    metric: str = "chord"

    def __post_init__(self):
        if not self.tau > 0:
            raise ValueError("tau must be positive")
        if self.metric not in ("chord", "arc"):
            raise ValueError(f"unknown metric {self.metric!r}")


@dataclass(frozen=True, eq=False)
class LiftedNormalField:
    """Monotone lift of the outer normal angle along a convex polygon.

    ``edge_angles[i]`` is the lifted normal angle on edge ``i``; vertex ``i``
    carries the cone ``[vertex_lo[i], vertex_hi[i]]`` where
    ``vertex_hi[i] == edge_angles[i]`` and
    ``vertex_lo[i] == edge_angles[i - 1]`` (minus ``2*pi`` for ``i == 0``).
    """

    curve: ConvexPolyline2
    edge_angles: np.ndarray
    vertex_lo: np.ndarray
    vertex_hi: np.ndarray

    @property
    def perimeter(self) -> float:
        return self.curve.perimeter

    @property
    def arc_positions(self) -> np.ndarray:
        return self.curve.cumulative_arc[:-1]

    @property
    def cone_widths(self) -> np.ndarray:
        return self.vertex_hi - self.vertex_lo

    @property
    def total_turning(self) -> float:
        return float(self.vertex_hi[-1] - self.vertex_lo[0])

    @property
    def breakpoints(self) -> list[tuple[float, float, float]]:
        """``(arc_position, normal_angle_lo, normal_angle_hi)`` per vertex."""
        return list(zip(self.arc_positions.tolist(), self.vertex_lo.tolist(), self.vertex_hi.tolist()))

    def mid_angles(self) -> np.ndarray:
        """Bisector of each vertex cone."""
        return 0.5 * (self.vertex_lo + self.vertex_hi)


def lift_normals(curve: ConvexPolyline2) -> LiftedNormalField:
    e = curve.edges
    if np.any(curve.edge_lengths <= 0):
        raise ValueError("degenerate edge")
    prev = np.roll(e, 1, axis=0)
    # turn[i]: turning at vertex i, from edge i-1 to edge i, in (0, pi)
    turn = np.arctan2(prev[:, 0] * e[:, 1] - prev[:, 1] * e[:, 0], np.einsum("ij,ij->i", prev, e))
    theta0 = math.atan2(-e[0, 0], e[0, 1])  # angle of (e_y, -e_x)
    if theta0 <= -math.pi:
        theta0 += TWO_PI
    angles = theta0 + np.concatenate([[0.0], np.cumsum(turn[1:])])
    lo = np.concatenate([[theta0 - turn[0]], angles[:-1]])
    for arr in (angles, lo):
        arr.setflags(write=False)
    return LiftedNormalField(curve, angles, lo, angles)


def _field(body) -> LiftedNormalField:
    if isinstance(body, LiftedNormalField):
        return body
    if isinstance(body, ConvexPolyline2):
        return lift_normals(body)
    raise TypeError("expected ConvexPolyline2 or LiftedNormalField")


def _check_tau(tau: float):
    if not tau > 0:
        raise ValueError("tau must be positive")


# -- chord metric -----------------------------------------------------------
#
# Boundary features in boundary order: feature 2i is vertex i, feature 2i+1 is
# edge i.  Every feature is a (possibly degenerate) segment P -> Q with a lifted
# normal interval [lo, hi]; consecutive features have monotone intervals.

def _features(field: LiftedNormalField):
    v = field.curve.vertices
    n = len(v)
    nxt = np.roll(v, -1, axis=0)
    P = np.empty((2 * n, 2))
    Q = np.empty((2 * n, 2))
    P[0::2], Q[0::2] = v, v
    P[1::2], Q[1::2] = v, nxt
    lo = np.empty(2 * n)
    hi = np.empty(2 * n)
    lo[0::2], hi[0::2] = field.vertex_lo, field.vertex_hi
    lo[1::2], hi[1::2] = field.edge_angles, field.edge_angles
    return P, Q, lo, hi


def _point_segment_dist(p, a, b):
    ab = b - a
    denom = np.einsum("ij,ij->i", ab, ab)
    t = np.einsum("ij,ij->i", p - a, ab) / np.where(denom > 0, denom, 1.0)
    t = np.clip(np.where(denom > 0, t, 0.0), 0.0, 1.0)
    return np.linalg.norm(p - (a + t[:, None] * ab), axis=1)


def feature_min_distance(P1, Q1, P2, Q2):
    """Distance between boundary segments of a convex polygon.

    Boundary features of a convex polygon never cross, so the distance is
    attained at an endpoint of one of them.
    """
    return np.minimum.reduce([
        _point_segment_dist(P1, P2, Q2), _point_segment_dist(Q1, P2, Q2),
        _point_segment_dist(P2, P1, Q1), _point_segment_dist(Q2, P1, Q1),
    ])


def feature_max_distance(P1, Q1, P2, Q2):
    return np.maximum.reduce([
        np.linalg.norm(P1 - P2, axis=1), np.linalg.norm(P1 - Q2, axis=1),
        np.linalg.norm(Q1 - P2, axis=1), np.linalg.norm(Q1 - Q2, axis=1),
    ])


def _fold(delta):
    """Unsigned angle in [0, pi] represented by a lift difference."""
    return np.abs(np.mod(delta + math.pi, TWO_PI) - math.pi)


def _max_angle_forward(a, b):
    """max of the folded angle over lift differences in [a, b] within [0, 2pi]."""
    return np.where((a <= math.pi) & (b >= math.pi), math.pi, np.maximum(_fold(a), _fold(b)))


def _admissible_max(P, Q, f, g, ang, limit, best):
    """Largest ``ang`` over candidate pairs at feature distance <= limit."""
    keep = ang > best
    f, g, ang = f[keep], g[keep], ang[keep]
    order = np.argsort(-ang, kind="stable")
    for start in range(0, len(order), 4096):
        sel = order[start:start + 4096]
        d = feature_min_distance(P[f[sel]], Q[f[sel]], P[g[sel]], Q[g[sel]])
        ok = np.flatnonzero(d <= limit)
        if len(ok):
            return float(ang[sel[ok[0]]])
    return best


def _chord_omega(field: LiftedNormalField, tau: float) -> float:
    P, Q, lo, hi = _features(field)
    m = len(P)
    # self pairs: a vertex against itself realizes its whole cone
    best = float((hi - lo).max())
    limit = tau + _REL_EPS * max(1.0, field.curve.diameter)
    if limit >= field.curve.diameter:
        # every pair qualifies, and some pair has opposite normals
        return math.pi
    mid = 0.5 * (P + Q)
    half = 0.5 * np.linalg.norm(Q - P, axis=1)
    tree = cKDTree(mid)
    reach = limit + 2 * half.max()
    # blocks of features keep the candidate lists bounded in memory
    for start in range(0, m, 512):
        f = np.arange(start, min(start + 512, m))
        hits = tree.query_ball_point(mid[f], reach)
        counts = np.fromiter((len(h) for h in hits), dtype=np.int64, count=len(f))
        if counts.sum() == 0:
            continue
        ff = np.repeat(f, counts)
        gg = np.fromiter(chain.from_iterable(hits), dtype=np.int64, count=int(counts.sum()))
        ahead = gg > ff  # each unordered pair once, g ahead of f along the lift
        ff, gg = ff[ahead], gg[ahead]
        ang = _max_angle_forward(lo[gg] - hi[ff], hi[gg] - lo[ff])
        best = max(best, _admissible_max(P, Q, ff, gg, ang, limit, best))
    return best


def _first_far_vertex(v, tau, direction, block=128):
    """Offset ``d >= 1`` of the first vertex ``i + direction * d`` at distance
    ``>= tau`` from vertex ``i``; -1 when no vertex is that far."""
    n = len(v)
    result = np.full(n, -1)
    pending = np.arange(n)
    t2 = tau * tau
    for d0 in range(1, n, block):
        steps = np.arange(d0, min(d0 + block, n))
        j = (pending[:, None] + direction * steps[None, :]) % n
        far = ((v[pending][:, None, :] - v[j]) ** 2).sum(-1) >= t2
        hit = far.any(axis=1)
        result[pending[hit]] = steps[far[hit].argmax(axis=1)]
        pending = pending[~hit]
        if len(pending) == 0:
            break
    return result


def _chord_Omega(field: LiftedNormalField, tau: float) -> float:
    curve = field.curve
    tau_eff = tau * (1 - _REL_EPS)
    if curve.edge_lengths.max() >= tau_eff:
        return 0.0
    # Feature endpoints are vertices and every edge is shorter than tau, so the
    # first far feature ahead of vertex i (or of edge i) is the edge ending at
    # the first far vertex ahead of it; symmetrically behind.  Along the lift
    # both ends of an admissible forward pair only move up, so for each feature
    # the smallest angle min(a, 2pi - b) is attained at one of these two.
    n = curve.n
    idx = np.arange(n)
    theta = field.edge_angles
    vlo, vhi = field.vertex_lo, field.vertex_hi

    def edge_lift(e):
        return theta[e % n] + TWO_PI * np.floor_divide(e, n)

    F = _first_far_vertex(curve.vertices, tau_eff, +1)
    B = _first_far_vertex(curve.vertices, tau_eff, -1)
    F1, B1 = np.roll(F, -1), np.roll(B, -1)
    a_parts, b_parts = [], []

    ok = F >= 0  # vertex i forward
    e = edge_lift(idx[ok] + F[ok] - 1)
    a_parts.append(e - vhi[ok])
    b_parts.append(e - vlo[ok])

    ok = (F >= 0) | (F1 >= 0)  # edge i forward
    j = np.minimum(np.where(F >= 0, idx + F, np.iinfo(np.int64).max),
                   np.where(F1 >= 0, idx + 1 + F1, np.iinfo(np.int64).max))[ok]
    e = edge_lift(j - 1) - theta[ok]
    a_parts.append(e)
    b_parts.append(e)

    ok = B >= 0  # vertex i backward
    e = edge_lift(idx[ok] - B[ok])
    a_parts.append(vlo[ok] - e)
    b_parts.append(vhi[ok] - e)

    ok = (B >= 0) | (B1 >= 0)  # edge i backward
    j = np.maximum(np.where(B >= 0, idx - B, np.iinfo(np.int64).min),
                   np.where(B1 >= 0, idx + 1 - B1, np.iinfo(np.int64).min))[ok]
    e = theta[ok] - edge_lift(j)
    a_parts.append(e)
    b_parts.append(e)

    a = np.concatenate(a_parts)
    if len(a) == 0:
        return VACUOUS
    b = np.concatenate(b_parts)
    return float(np.maximum(np.minimum(a, TWO_PI - b), 0.0).min())


# -- arc metric -------------------------------------------------------------

def _extended(field: LiftedNormalField):
    s = field.arc_positions
    ell = field.perimeter
    s3 = np.concatenate([s - ell, s, s + ell])
    lo3 = np.concatenate([field.vertex_lo - TWO_PI, field.vertex_lo, field.vertex_lo + TWO_PI])
    hi3 = np.concatenate([field.vertex_hi - TWO_PI, field.vertex_hi, field.vertex_hi + TWO_PI])
    return s, s3, lo3, hi3


def _check_arc_tau(field, tau):
    if not tau < field.perimeter / 2:
        raise ValueError("arc metric needs tau < perimeter / 2")


def _arc_omega(field: LiftedNormalField, tau: float) -> float:
    _check_arc_tau(field, tau)
    s, s3, lo3, hi3 = _extended(field)
    n = len(s)
    eps = _REL_EPS * field.perimeter
    own = np.arange(n) + n
    # closed windows [s_i, s_i + tau] and [s_j - tau, s_j]
    last = np.searchsorted(s3, s + tau + eps, side="right") - 1
    first = np.searchsorted(s3, s - tau - eps, side="left")
    v1 = hi3[last] - lo3[own]
    v2 = hi3[own] - lo3[first]
    return float(max(v1.max(), v2.max()))


def _arc_Omega(field: LiftedNormalField, tau: float) -> float:
    _check_arc_tau(field, tau)
    s, s3, lo3, hi3 = _extended(field)
    n = len(s)
    eps = _REL_EPS * field.perimeter
    own = np.arange(n) + n
    # open windows (s_i, s_i + tau) and (s_j - tau, s_j)
    nxt = np.searchsorted(s3, s + tau - eps, side="left")
    prv = np.searchsorted(s3, s - tau + eps, side="right") - 1
    v1 = lo3[nxt] - hi3[own]
    v2 = lo3[own] - hi3[prv]
    return float(max(0.0, min(v1.min(), v2.min())))


def modulus_of_continuity(body, tau: float, metric: str = "chord") -> float:
    """Largest normal angle between boundary points at most ``tau`` apart."""
    q = ModulusQuery(tau, metric)
    field = _field(body)
    if q.metric == "chord":
        return _chord_omega(field, q.tau)
    return _arc_omega(field, q.tau)


def minimal_oscillation(body, tau: float, metric: str = "chord") -> float:
    """Smallest normal angle between boundary points at least ``tau`` apart.

    Returns :data:`VACUOUS` (``inf``) when no such pair exists.
    """
    q = ModulusQuery(tau, metric)
    field = _field(body)
    if q.metric == "chord":
        return _chord_Omega(field, q.tau)
    return _arc_Omega(field, q.tau)


def discretization_slack(body) -> float:
    """Two vertex turnings: how far a polygon modulus may sit from the
    modulus of the smooth curve it samples."""
    return 2.0 * float(_field(body).cone_widths.max())


def _normal_angles_at(field: LiftedNormalField, s) -> np.ndarray:
    # cone bisectors interpolated linearly in arc length, lifted
    curve = field.curve
    ell = curve.perimeter
    mids = field.mid_angles()
    s = np.asarray(s, dtype=float)
    turns = np.floor(s / ell)
    r = s - turns * ell
    i = np.clip(np.searchsorted(curve.cumulative_arc, r, side="right") - 1, 0, curve.n - 1)
    j = (i + 1) % curve.n
    nxt = mids[j] + np.where(j == 0, TWO_PI, 0.0)
    t = (r - curve.cumulative_arc[i]) / curve.edge_lengths[i]
    return mids[i] + t * (nxt - mids[i]) + turns * TWO_PI


def _points_at(curve: ConvexPolyline2, s) -> np.ndarray:
    s = np.mod(np.asarray(s, dtype=float), curve.perimeter)
    i = np.clip(np.searchsorted(curve.cumulative_arc, s, side="right") - 1, 0, curve.n - 1)
    t = (s - curve.cumulative_arc[i]) / curve.edge_lengths[i]
    return curve.vertices[i] + t[:, None] * curve.edges[i]


def curvature_profile(body, h: float) -> np.ndarray:
    """Difference-quotient curvature at every vertex.

    At vertex ``x0`` with bisector normal ``n0`` this is
    ``arccos <n0, n(y)> / |x0 - y|`` for the boundary points ``y`` at arc
    distance ``h`` on either side, averaged; ``n(y)`` interpolates the cone
    bisectors along edges.
    """
    field = _field(body)
    curve = field.curve
    if not 0 < h < curve.perimeter / 2:
        raise ValueError("h must lie in (0, perimeter / 2)")
    s0 = curve.cumulative_arc[:-1]
    a0 = field.mid_angles()
    total = np.zeros(curve.n)
    for sign in (1.0, -1.0):
        a = _normal_angles_at(field, s0 + sign * h)
        y = _points_at(curve, s0 + sign * h)
        # arccos of <n0, n(y)> without its loss of accuracy at small angles
        ang = np.abs(np.mod(a - a0 + math.pi, TWO_PI) - math.pi)
        total += ang / np.linalg.norm(curve.vertices - y, axis=1)
    return 0.5 * total


def estimate_curvature(body, index: int, h: float) -> float:
    """Difference-quotient curvature at vertex ``index``; see :func:`curvature_profile`."""
    field = _field(body)
    return float(curvature_profile(field, h)[int(index) % field.curve.n])


def check_bound_upper(body, tau: float, kappa0: float) -> bool:
    """``omega(tau) <= kappa0 * tau / cos(omega(tau))`` up to two vertex turnings."""
    field = _field(body)
    w = modulus_of_continuity(field, tau, "chord")
    if w >= math.pi / 2:
        return False
    return w <= kappa0 * tau / math.cos(w) + discretization_slack(field)


def check_bound_lower(body, tau: float, kappa0: float) -> bool:
    """``Omega(tau) >= kappa0 * tau`` up to two vertex turnings."""
    field = _field(body)
    w = minimal_oscillation(field, tau, "chord")
    return w >= kappa0 * tau - discretization_slack(field)
