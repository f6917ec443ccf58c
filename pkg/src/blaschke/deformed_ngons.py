"""Mangled and fattened polygons built from a regular 4k-gon of unit side.

Write ``e(t) = (cos t, sin t)`` and ``phi* = pi / (2k)``.  Walking the unit
edges ``e(phi*), e(2 phi*), ...`` traces a regular ``4k``-gon.  Removing the
four axis-parallel edges (those at multiples of ``k``) pushes the quadrants
together and gives the *mangled* polygon ``M_k`` with ``4k - 4`` unit edges.
Doubling them instead gives the *fattened* polygon ``F_k``: ``4k - 4`` unit
edges plus four edges of length 2.

With ``S`` the unit square and ``Q_n`` the regular unit ``n``-gon standing on
the x-axis, ``M_k + S = Q_4k`` and ``Q_4k + S = F_k``.

A placed copy ``U_alpha(tau P) + x`` puts the standard polygon's bottom point
(or bottom edge) at ``x`` with outer normal ``(sin alpha, -cos alpha)`` there.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .geom2d import ConvexPolyline2, rotate

_SNAP = 1e-9


def _e(t):
    t = np.asarray(t, dtype=float)
    return np.stack([np.cos(t), np.sin(t)], axis=-1)


def _ratio(phi: float) -> float:
    x = math.pi / (2 * phi)
    r = round(x)
    # pi / (2 * (pi / 50)) lands a hair off 25 in floating point
    return float(r) if abs(x - r) <= _SNAP * max(1.0, x) else x


def k_for_mangled(phi: float) -> int:
    """``floor(pi / 2phi)``, so that ``phi* >= phi``."""
    if not 0 < phi <= math.pi / 4 * (1 + _SNAP):
        raise ValueError("mangled polygons need 0 < phi <= pi/4")
    return max(2, math.floor(_ratio(phi)))


def k_for_fattened(phi: float) -> int:
    """``ceil(pi / 2phi)``, so that ``phi* <= phi``."""
    if not 0 < phi < math.pi:
        raise ValueError("fattened polygons need 0 < phi < pi")
    return max(1, math.ceil(_ratio(phi)))


def mangled_vertex(k: int, m: int) -> np.ndarray:
    """The point ``A_m`` of the mangled construction, for any ``1 <= m <= 4k``."""
    ps = math.pi / (2 * k)
    j = np.arange(1, m + 1)
    ell = np.arange(1, m // k + 1)
    return _e(j * ps).sum(axis=0) - _e(ell * k * ps).sum(axis=0)


def fattened_vertex(k: int, m: int) -> np.ndarray:
    """The point ``A_m`` of the fattened construction, for ``1 <= m <= 4k``."""
    ps = math.pi / (2 * k)
    j = np.arange(1, m + 1)
    ell = np.arange(0, m // k + 1)
    return _e(j * ps).sum(axis=0) + _e(ell * k * ps).sum(axis=0)


@dataclass(frozen=True, eq=False)
class DeformedNgon:
    """A standard deformed polygon together with a placement ``(x, alpha, tau)``."""

    k: int
    vertices: np.ndarray
    x: np.ndarray = field(default_factory=lambda: np.zeros(2))
    alpha: float = 0.0
    tau: float = 1.0

    @property
    def phi_star(self) -> float:
        return math.pi / (2 * self.k)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def standard(self) -> ConvexPolyline2:
        return ConvexPolyline2(self.vertices)

    def placed(self) -> ConvexPolyline2:
        return place(self, self.x, self.alpha, self.tau)

    def with_placement(self, x, alpha: float, tau: float):
        return type(self)(self.k, self.vertices, np.asarray(x, dtype=float), float(alpha), float(tau))

    def radii(self) -> tuple[float, float]:
        raise NotImplementedError

    def center(self) -> np.ndarray:
        """Common center of the in- and circumcircle, in standard position."""
        raise NotImplementedError


class MangledNgon(DeformedNgon):
    """``M_k``: vertices ``A_1 .. A_{4k-1}`` without ``A_k, A_2k, A_3k``; ``A_{4k-1}`` is the origin."""

    def radii(self):
        return mangled_radii(k=self.k)

    def center(self):
        return np.array([0.0, mangled_radii(k=self.k)[1]])


class FattenedNgon(DeformedNgon):
    """``F_k``: vertices ``A_1 .. A_4k``; the bottom edge runs from (-1, 0) to (1, 0)."""

    def radii(self):
        return fattened_radii(k=self.k)

    def center(self):
        return np.array([0.0, fattened_radii(k=self.k)[0]])


def standard_mangled(k: int) -> MangledNgon:
    if int(k) != k or k < 2:
        raise ValueError("mangled polygons need an integer k >= 2")
    k = int(k)
    ps = math.pi / (2 * k)
    j = np.arange(1, 4 * k)
    partial = np.cumsum(_e(j * ps), axis=0)
    # subtract the axis-parallel edges already passed
    axis_edges = np.cumsum(_e(np.arange(1, 4) * k * ps), axis=0)
    passed = j // k
    pts = partial - np.vstack([np.zeros(2), axis_edges])[passed]
    keep = j % k != 0
    pts = pts[keep]
    pts[-1] = 0.0  # A_{4k-1} is the origin up to rounding
    pts.setflags(write=False)
    return MangledNgon(k, pts)


def standard_fattened(k: int) -> FattenedNgon:
    if int(k) != k or k < 1:
        raise ValueError("fattened polygons need an integer k >= 1")
    k = int(k)
    ps = math.pi / (2 * k)
    j = np.arange(1, 4 * k + 1)
    partial = np.cumsum(_e(j * ps), axis=0)
    axis_edges = np.cumsum(_e(np.arange(0, 5) * k * ps), axis=0)
    pts = partial + axis_edges[j // k]
    pts[-2:] = [[-1.0, 0.0], [1.0, 0.0]]
    pts.setflags(write=False)
    return FattenedNgon(k, pts)


def regular_ngon_Q(n: int) -> ConvexPolyline2:
    """Regular unit-side ``n``-gon with bottom edge from (-1/2, 0) to (1/2, 0)."""
    if int(n) != n or n < 3:
        raise ValueError("need n >= 3")
    n = int(n)
    steps = _e(2 * math.pi * np.arange(n - 1) / n)
    pts = np.vstack([[-0.5, 0.0], [-0.5, 0.0] + np.cumsum(steps, axis=0)])
    return ConvexPolyline2(pts)


def unit_square() -> ConvexPolyline2:
    """``S = Q_4``."""
    return regular_ngon_Q(4)


def placed_vertices(vertices, x, alpha: float, tau: float) -> np.ndarray:
    if not tau > 0:
        raise ValueError("tau must be positive")
    return rotate(tau * np.asarray(vertices, dtype=float), alpha) + np.asarray(x, dtype=float)


def place(ngon: DeformedNgon, x, alpha: float, tau: float) -> ConvexPolyline2:
    """``U_alpha(tau * ngon) + x``, vertex order preserved."""
    return ConvexPolyline2(placed_vertices(ngon.vertices, x, alpha, tau))


def _k_arg(phi, k, chooser):
    if (phi is None) == (k is None):
        raise ValueError("give exactly one of phi and k")
    return chooser(phi) if k is None else int(k)


def mangled_radii(phi: float | None = None, *, k: int | None = None) -> tuple[float, float]:
    """Inradius and circumradius of ``M_k`` for ``k = floor(pi / 2phi)``."""
    k = _k_arg(phi, k, k_for_mangled)
    if k < 2:
        raise ValueError("k >= 2 required")
    cot = 1 / math.tan(math.pi / (4 * k))
    r = 0.5 * (cot - math.sqrt(2) * math.cos((1 - (-1) ** k) * math.pi / (8 * k)))
    R = 0.5 * (cot - 1)
    return r, R


def fattened_radii(phi: float | None = None, *, k: int | None = None) -> tuple[float, float]:
    """Inradius and circumradius of ``F_k`` for ``k = ceil(pi / 2phi)``."""
    k = _k_arg(phi, k, k_for_fattened)
    if k < 1:
        raise ValueError("k >= 1 required")
    s = math.sin(math.pi / (4 * k))
    cot = 1 / math.tan(math.pi / (4 * k))
    r = 0.5 * cot + 0.5
    if k % 2:
        R = 1 / (2 * s) + 1 / math.sqrt(2)
    else:
        R = math.sqrt(0.5 + 1 / (4 * s * s) + cot / math.sqrt(2))
    return r, R


def mangled_for(phi: float) -> MangledNgon:
    return standard_mangled(k_for_mangled(phi))


def fattened_for(phi: float) -> FattenedNgon:
    return standard_fattened(k_for_fattened(phi))
