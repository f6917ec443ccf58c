"""Planar primitives and convex polygon algorithms.

Points are ``numpy`` arrays of shape ``(2,)`` (or stacks of shape ``(..., 2)``).
Angles are plain floats in radians.  A :class:`ConvexPolyline2` is the
canonical closed convex boundary used throughout the package.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linprog

# Consecutive edges whose turning (sine of the angle) falls below this are
# treated as collinear and merged.
COLLINEAR_EPS = 1e-10

# Signed distances of points lying exactly on an edge line come out as a few
# ulps of the coordinate scale; containment predicates forgive that much.
ROUNDING = 16 * np.finfo(float).eps


def _cross(a, b):
    return a[..., 0] * b[..., 1] - a[..., 1] * b[..., 0]


def rotate(p, phi: float) -> np.ndarray:
    """Rotate point(s) counterclockwise about the origin by ``phi``."""
    p = np.asarray(p, dtype=float)
    c, s = math.cos(phi), math.sin(phi)
    return np.stack([c * p[..., 0] - s * p[..., 1], s * p[..., 0] + c * p[..., 1]], axis=-1)


def reflect_y_axis(p) -> np.ndarray:
    """Mirror point(s) in the y-axis: ``(x, y) -> (-x, y)``."""
    p = np.array(p, dtype=float)
    p[..., 0] = -p[..., 0]
    return p


class ConvexPolyline2:
    """Closed convex polygon, counterclockwise, with cumulative arc length.

    The constructor normalizes its input: repeated points are dropped, the
    orientation is made counterclockwise and collinear vertices are merged.
    Non-convex input raises ``ValueError``.

    Attributes
    ----------
    vertices : ndarray, shape (n, 2)
    cumulative_arc : ndarray, shape (n + 1,)
        ``cumulative_arc[i]`` is the arc position of vertex ``i``; the last
        entry is the perimeter.
    """

    __slots__ = ("vertices", "cumulative_arc", "_normals", "_offsets", "_diameter")

    def __init__(self, points):
        pts = np.array(points, dtype=float).reshape(-1, 2)
        if not np.all(np.isfinite(pts)):
            raise ValueError("polygon coordinates must be finite")
        pts = _normalize(pts)
        pts.setflags(write=False)
        self.vertices = pts
        lengths = np.linalg.norm(np.roll(pts, -1, axis=0) - pts, axis=1)
        arc = np.concatenate([[0.0], np.cumsum(lengths)])
        arc.setflags(write=False)
        self.cumulative_arc = arc
        self._normals = None
        self._offsets = None
        self._diameter = None

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return f"ConvexPolyline2(n={len(self)}, perimeter={self.perimeter:.6g})"

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def perimeter(self) -> float:
        return float(self.cumulative_arc[-1])

    @property
    def edges(self) -> np.ndarray:
        """Edge vectors; edge ``i`` runs from vertex ``i`` to vertex ``i + 1``."""
        return np.roll(self.vertices, -1, axis=0) - self.vertices

    @property
    def edge_lengths(self) -> np.ndarray:
        return np.diff(self.cumulative_arc)

    @property
    def outer_normals(self) -> np.ndarray:
        """Unit outer normal of every edge (edge direction turned by -pi/2)."""
        if self._normals is None:
            e = self.edges / self.edge_lengths[:, None]
            nrm = np.stack([e[:, 1], -e[:, 0]], axis=1)
            nrm.setflags(write=False)
            self._normals = nrm
        return self._normals

    @property
    def offsets(self) -> np.ndarray:
        """Support values ``<n_i, v_i>`` so that K = {p : n_i . p <= offset_i}."""
        if self._offsets is None:
            off = np.einsum("ij,ij->i", self.outer_normals, self.vertices)
            off.setflags(write=False)
            self._offsets = off
        return self._offsets

    @property
    def area(self) -> float:
        v = self.vertices
        return 0.5 * float(np.sum(_cross(v, np.roll(v, -1, axis=0))))

    @property
    def centroid(self) -> np.ndarray:
        v = self.vertices
        w = np.roll(v, -1, axis=0)
        cr = _cross(v, w)
        a = cr.sum() / 2.0
        return ((v + w) * cr[:, None]).sum(axis=0) / (6.0 * a)

    @property
    def diameter(self) -> float:
        """Largest vertex distance, by rotating calipers over antipodal pairs."""
        if self._diameter is None:
            pts = self.vertices.tolist()
            n = len(pts)

            def height(i, j):
                (ax, ay), (bx, by), (px, py) = pts[i], pts[(i + 1) % n], pts[j % n]
                return (bx - ax) * (py - ay) - (by - ay) * (px - ax)

            best2 = 0.0
            j = 1
            for i in range(n):
                # advance j while it moves away from the line of edge i
                while height(i, j + 1) > height(i, j):
                    j += 1
                px, py = pts[j % n]
                for ax, ay in (pts[i], pts[(i + 1) % n]):
                    best2 = max(best2, (px - ax) ** 2 + (py - ay) ** 2)
            self._diameter = math.sqrt(best2)
        return self._diameter

    def point_at(self, s: float) -> np.ndarray:
        """Boundary point at arc position ``s`` (taken modulo the perimeter)."""
        s = float(s) % self.perimeter
        i = int(np.searchsorted(self.cumulative_arc, s, side="right")) - 1
        i = min(max(i, 0), self.n - 1)
        t = (s - self.cumulative_arc[i]) / self.edge_lengths[i]
        return self.vertices[i] + t * self.edges[i]

    def transformed(self, phi: float = 0.0, shift=(0.0, 0.0), scale: float = 1.0) -> "ConvexPolyline2":
        """Rigid motion plus dilation: ``p -> U_phi(scale * p) + shift``."""
        return ConvexPolyline2(rotate(scale * self.vertices, phi) + np.asarray(shift, dtype=float))


def _normalize(pts: np.ndarray) -> np.ndarray:
    if len(pts) < 3:
        raise ValueError("a polygon needs at least 3 vertices")
    scale = float(np.abs(pts).max()) or 1.0
    # drop repeated points, including the closing one
    keep = np.linalg.norm(pts - np.roll(pts, 1, axis=0), axis=1) > 1e-13 * scale
    pts = pts[keep]
    if len(pts) < 3:
        raise ValueError("degenerate polygon (fewer than 3 distinct vertices)")
    area2 = float(np.sum(_cross(pts, np.roll(pts, -1, axis=0))))
    if abs(area2) <= 1e-13 * scale * scale:
        raise ValueError("degenerate polygon (zero area)")
    if area2 < 0:
        pts = pts[::-1].copy()
    while True:
        e_in = pts - np.roll(pts, 1, axis=0)
        e_out = np.roll(pts, -1, axis=0) - pts
        norms = np.linalg.norm(e_in, axis=1) * np.linalg.norm(e_out, axis=1)
        sin_turn = _cross(e_in, e_out) / norms
        if np.any(sin_turn < -COLLINEAR_EPS):
            raise ValueError("polygon is not convex")
        flat = np.abs(sin_turn) <= COLLINEAR_EPS
        if np.any(flat & (np.einsum("ij,ij->i", e_in, e_out) < 0)):
            raise ValueError("polygon has a spike (reversal of direction)")
        if not flat.any():
            break
        pts = pts[~flat]
        if len(pts) < 3:
            raise ValueError("degenerate polygon (all vertices collinear)")
    turning = np.arctan2(sin_turn, np.einsum("ij,ij->i", e_in, e_out) / norms).sum()
    if abs(turning - 2 * math.pi) > 1e-6:
        raise ValueError("polygon boundary winds more than once")
    return pts


@dataclass(frozen=True)
class Disk:
    center: np.ndarray
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError("disk radius must be positive")


def minkowski_sum(a: ConvexPolyline2, b: ConvexPolyline2) -> ConvexPolyline2:
    """Minkowski sum of two convex polygons by merging their edge sequences.

    Both edge sequences are rotated to start at the lowest (then leftmost)
    vertex, where edge directions begin just above angle 0, and are then
    interleaved by direction angle.
    """
    if not isinstance(a, ConvexPolyline2) or not isinstance(b, ConvexPolyline2):
        raise TypeError("minkowski_sum expects ConvexPolyline2 operands")

    def prepared(p):
        v = p.vertices
        start = int(np.lexsort((v[:, 0], v[:, 1]))[0])
        v = np.roll(v, -start, axis=0)
        e = np.roll(v, -1, axis=0) - v
        ang = np.mod(np.arctan2(e[:, 1], e[:, 0]), 2 * math.pi)
        return v[0], e, ang

    a0, ea, angs_a = prepared(a)
    b0, eb, angs_b = prepared(b)
    edges = np.concatenate([ea, eb])
    angs = np.concatenate([angs_a, angs_b])
    # stable merge keeps each operand's own order on ties
    order = np.argsort(angs, kind="stable")
    pts = (a0 + b0) + np.concatenate([[np.zeros(2)], np.cumsum(edges[order], axis=0)[:-1]])
    return ConvexPolyline2(pts)


def edge_distances(k: ConvexPolyline2, points) -> np.ndarray:
    """Largest signed distance of each point to the edge lines of ``k``.

    Negative inside; on the boundary it is zero.  Outside it is a lower bound
    for the Euclidean distance to ``k`` (exact off the vertex regions).
    """
    p = np.asarray(points, dtype=float).reshape(-1, 2)
    out = np.empty(len(p))
    nrm, off = k.outer_normals, k.offsets
    for start in range(0, len(p), 1024):
        blk = p[start:start + 1024]
        out[start:start + 1024] = (blk @ nrm.T - off).max(axis=1)
    return out


def contains_point(k: ConvexPolyline2, p, tol: float = 0.0) -> bool:
    if tol < 0:
        raise ValueError("tol must be non-negative")
    p = np.asarray(p, dtype=float)
    return bool(edge_distances(k, p)[0] <= tol + _slack(k, p))


def contains_polygon(outer: ConvexPolyline2, inner, tol: float = 0.0) -> tuple[bool, float]:
    """Check ``inner`` lies in ``outer``; return (ok, worst vertex penetration).

    ``inner`` may be a polygon or a bare vertex array.  Convexity of ``outer``
    makes the vertex test exact.
    """
    if tol < 0:
        raise ValueError("tol must be non-negative")
    verts = inner.vertices if isinstance(inner, ConvexPolyline2) else np.asarray(inner, dtype=float)
    worst = float(edge_distances(outer, verts).max())
    return worst <= tol + _slack(outer, verts), worst


def _slack(k, pts):
    return ROUNDING * max(float(np.abs(k.vertices).max()), float(np.abs(pts).max()))


def max_inscribed_ball(normals, offsets) -> tuple[np.ndarray, float]:
    """Largest ball inside ``{x : normals @ x <= offsets}`` (unit normals).

    Solves the LP ``max r  s.t.  n_i . c + r <= b_i`` with HiGHS and then
    snaps the solution onto its active constraints so the result is accurate
    to rounding rather than to solver tolerance.
    """
    A = np.asarray(normals, dtype=float)
    b = np.asarray(offsets, dtype=float)
    m, d = A.shape
    M = np.hstack([A, np.ones((m, 1))])
    cost = np.zeros(d + 1)
    cost[-1] = -1.0
    res = linprog(cost, A_ub=M, b_ub=b, bounds=[(None, None)] * (d + 1), method="highs")
    if res.status != 0 or res.x[-1] <= 0:
        raise ValueError("region has empty interior")
    z = res.x.copy()
    scale = max(1.0, float(np.abs(b).max()))
    slack = b - M @ z
    act = slack <= 1e-7 * scale
    if act.any():
        delta, *_ = np.linalg.lstsq(M[act], slack[act], rcond=None)
        z += delta
    c = z[:d]
    return c, float((b - A @ c).min())


def chebyshev_center(k: ConvexPolyline2) -> tuple[np.ndarray, float]:
    """Center and radius of a largest disk inscribed in ``k``."""
    return max_inscribed_ball(k.outer_normals, k.offsets)


_MEC_EPS = 1 + 1e-14


def _circle2(a, b):
    c = (a + b) / 2
    return c, max(np.linalg.norm(c - a), np.linalg.norm(c - b))


def _circle3(a, b, c):
    # circumcircle, computed relative to the bounding-box center for accuracy
    o = (np.minimum(np.minimum(a, b), c) + np.maximum(np.maximum(a, b), c)) / 2
    ax, ay = a - o
    bx, by = b - o
    cx, cy = c - o
    d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    if d == 0:
        return None
    x = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) + (cx * cx + cy * cy) * (ay - by)) / d
    y = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) + (cx * cx + cy * cy) * (bx - ax)) / d
    ctr = o + np.array([x, y])
    return ctr, max(np.linalg.norm(ctr - a), np.linalg.norm(ctr - b), np.linalg.norm(ctr - c))


def _inside(circ, p):
    return circ is not None and np.linalg.norm(p - circ[0]) <= circ[1] * _MEC_EPS


def _mec_two(pts, p, q):
    circ = _circle2(p, q)
    left = right = None
    pq = q - p
    for r in pts:
        if _inside(circ, r):
            continue
        cross = _cross(pq, r - p)
        c = _circle3(p, q, r)
        if c is None:
            continue
        side = _cross(pq, c[0] - p)
        if cross > 0 and (left is None or side > _cross(pq, left[0] - p)):
            left = c
        elif cross < 0 and (right is None or side < _cross(pq, right[0] - p)):
            right = c
    if left is None and right is None:
        return circ
    if left is None:
        return right
    if right is None:
        return left
    return left if left[1] <= right[1] else right


def _mec_one(pts, p):
    circ = (p, 0.0)
    for i, q in enumerate(pts):
        if not _inside(circ, q):
            circ = _circle2(p, q) if circ[1] == 0.0 else _mec_two(pts[: i + 1], p, q)
    return circ


def min_enclosing_circle(k) -> Disk:
    """Smallest disk containing all vertices (Welzl, iterative form).

    Accepts a polygon or an ``(n, 2)`` point array.  The point order is
    shuffled with a fixed seed, so results are deterministic.
    """
    pts = k.vertices if isinstance(k, ConvexPolyline2) else np.asarray(k, dtype=float).reshape(-1, 2)
    if len(pts) == 0:
        raise ValueError("need at least one point")
    pts = pts[np.random.default_rng(0).permutation(len(pts))]
    circ = None
    for i, p in enumerate(pts):
        if circ is None or not _inside(circ, p):
            circ = _mec_one(pts[: i + 1], p)
    center, radius = circ
    if radius == 0.0:
        raise ValueError("all points coincide; enclosing disk is degenerate")
    return Disk(np.asarray(center, dtype=float), float(radius))


def disk_in_polygon(k: ConvexPolyline2, center, radius: float) -> float:
    """Penetration of the disk through the polygon boundary (<= 0 when inside)."""
    return float((k.outer_normals @ np.asarray(center, dtype=float) + radius - k.offsets).max())


def polygon_in_disk(k: ConvexPolyline2, center, radius: float) -> float:
    """How far the polygon sticks out of the disk (<= 0 when inside)."""
    return float(np.linalg.norm(k.vertices - np.asarray(center, dtype=float), axis=1).max() - radius)
