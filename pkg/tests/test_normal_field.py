import math
import time

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blaschke import normal_field as nf
from blaschke.deformed_ngons import standard_mangled
from blaschke.geom2d import ConvexPolyline2

from conftest import circle, ellipse, random_convex

SLACK4096 = 2 * (2 * math.pi / 4096)


# -- independent oracles ----------------------------------------------------------
#
# Chord metric: features are vertices (degenerate segments) and edges.  The
# normal data of a feature is an arc of unit vectors given by its two
# endpoints.  Angles come from unit vectors, never from the lift.

def _seg_dist(p1, q1, p2, q2):
    def pt_seg(p, a, b):
        ab = b - a
        L = ab @ ab
        t = 0.0 if L == 0 else min(1.0, max(0.0, (p - a) @ ab / L))
        return float(np.linalg.norm(p - (a + t * ab)))
    return min(pt_seg(p1, p2, q2), pt_seg(q1, p2, q2), pt_seg(p2, p1, q1), pt_seg(q2, p1, q1))


def _angle(u, w):
    return math.atan2(abs(u[0] * w[1] - u[1] * w[0]), u @ w)


def _in_arc(x, a, b):
    """x on the counterclockwise arc from a to b (arcs shorter than pi)."""
    cr = lambda p, q: p[0] * q[1] - p[1] * q[0]
    return cr(a, x) >= -1e-15 and cr(x, b) >= -1e-15 and x @ (a + b) >= -1e-15


def _features(k):
    v = k.vertices
    n = k.n
    N = k.outer_normals
    out = []
    for i in range(n):
        out.append((v[i], v[i], N[i - 1], N[i]))
        out.append((v[i], v[(i + 1) % n], N[i], N[i]))
    return out


def brute_omega(k, tau):
    best = 0.0
    feats = _features(k)
    for f in feats:
        for g in feats:
            if _seg_dist(f[0], f[1], g[0], g[1]) > tau:
                continue
            if _in_arc(-f[2], g[2], g[3]) or _in_arc(-g[2], f[2], f[3]):
                return math.pi
            best = max(best, max(_angle(u, w) for u in f[2:] for w in g[2:]))
    return best


def brute_Omega(k, tau):
    best = math.inf
    feats = _features(k)
    for f in feats:
        for g in feats:
            far = max(np.linalg.norm(p - q) for p in f[:2] for q in g[:2])
            if far < tau:
                continue
            if _in_arc(f[2], g[2], g[3]) or _in_arc(g[2], f[2], f[3]):
                return 0.0
            best = min(best, min(_angle(u, w) for u in f[2:] for w in g[2:]))
    return best


def _widths(k):
    N = k.outer_normals
    prev = np.roll(N, 1, axis=0)
    return np.array([math.atan2(prev[i, 0] * N[i, 1] - prev[i, 1] * N[i, 0], prev[i] @ N[i]) for i in range(k.n)])


def brute_arc_omega(k, tau):
    s, ell, w = k.cumulative_arc[:-1], k.perimeter, _widths(k)
    best = 0.0
    for i in range(k.n):
        d = np.mod(s - s[i], ell)
        best = max(best, w[d <= tau].sum())
    return best


def brute_arc_Omega(k, tau):
    s, ell, w = k.cumulative_arc[:-1], k.perimeter, _widths(k)
    best = math.inf
    for lam in np.concatenate([s, s - tau]):
        d = np.mod(s - lam, ell)
        best = min(best, w[(d > 0) & (d < tau)].sum())
    return best


# -- lift ------------------------------------------------------------------------------

def test_square_lift(unit_square):
    f = nf.lift_normals(unit_square)
    assert np.allclose(np.diff(f.edge_angles), math.pi / 2, atol=1e-15)
    assert np.allclose(f.cone_widths, math.pi / 2, atol=1e-15)
    assert f.edge_angles[0] == pytest.approx(-math.pi / 2)
    assert f.total_turning == pytest.approx(2 * math.pi, abs=1e-12)


@pytest.mark.parametrize("n", [3, 5, 17, 256])
def test_regular_ngon_cones(n):
    f = nf.lift_normals(circle(max(n, 16)) if n >= 16 else ConvexPolyline2(
        np.stack([np.cos(2 * math.pi * np.arange(n) / n), np.sin(2 * math.pi * np.arange(n) / n)], 1)))
    m = f.curve.n
    assert np.allclose(f.cone_widths, 2 * math.pi / m, atol=1e-12)
    assert f.total_turning == pytest.approx(2 * math.pi, abs=1e-9)


def test_mangled_square_cones_are_right_angles():
    f = nf.lift_normals(standard_mangled(2).standard())
    assert np.allclose(f.cone_widths, math.pi / 2, atol=1e-12)


def test_lift_invariants_random():
    rng = np.random.default_rng(1)
    for _ in range(20):
        f = nf.lift_normals(random_convex(rng, int(rng.integers(3, 40))))
        assert -math.pi < f.edge_angles[0] <= math.pi
        assert np.all(np.diff(f.edge_angles) > 0)
        assert np.all((f.cone_widths >= 0) & (f.cone_widths < math.pi))
        assert np.array_equal(f.vertex_hi, f.edge_angles)
        assert np.array_equal(f.vertex_lo[1:], f.edge_angles[:-1])
        assert f.total_turning == pytest.approx(2 * math.pi, abs=1e-9)
        bp = f.breakpoints
        assert len(bp) == f.curve.n and bp[0][0] == 0.0


def test_query_validation():
    with pytest.raises(ValueError):
        nf.ModulusQuery(0.0)
    with pytest.raises(ValueError):
        nf.ModulusQuery(0.1, "geodesic")
    with pytest.raises(ValueError):
        nf.modulus_of_continuity(circle(64), 3.2, "arc")
    with pytest.raises(TypeError):
        nf.modulus_of_continuity(np.zeros((4, 2)), 0.1)


# -- moduli against the oracles -----------------------------------------------------

@pytest.mark.parametrize("seed", range(8))
def test_chord_moduli_match_all_pairs_oracle(seed):
    rng = np.random.default_rng(100 + seed)
    k = random_convex(rng, int(rng.integers(5, 36)))
    for tau in rng.uniform(0.05, 1.2 * k.diameter, size=4):
        assert nf.modulus_of_continuity(k, tau) == pytest.approx(brute_omega(k, tau), abs=1e-12)
        want = brute_Omega(k, tau)
        got = nf.minimal_oscillation(k, tau)
        assert (got == want) if math.isinf(want) else got == pytest.approx(want, abs=1e-12)


@pytest.mark.parametrize("seed", range(4))
def test_chord_moduli_oracle_on_fine_polygons(seed):
    rng = np.random.default_rng(200 + seed)
    k = random_convex(rng, 120)
    for tau in (0.2, 0.6):
        assert nf.modulus_of_continuity(k, tau) == pytest.approx(brute_omega(k, tau), abs=1e-12)
        assert nf.minimal_oscillation(k, tau) == pytest.approx(brute_Omega(k, tau), abs=1e-12)


@pytest.mark.parametrize("seed", range(8))
def test_arc_moduli_match_window_oracle(seed):
    rng = np.random.default_rng(300 + seed)
    k = random_convex(rng, int(rng.integers(5, 80)))
    for tau in rng.uniform(0.01, 0.49 * k.perimeter, size=5):
        assert nf.modulus_of_continuity(k, tau, "arc") == pytest.approx(brute_arc_omega(k, tau), abs=1e-12)
        assert nf.minimal_oscillation(k, tau, "arc") == pytest.approx(brute_arc_Omega(k, tau), abs=1e-12)


# -- analytic circle values -----------------------------------------------------------

@pytest.mark.parametrize("tau", [0.01, 0.05, 0.1])
def test_circle_moduli(circle4096, tau):
    chord = 2 * math.asin(tau / 2)
    assert abs(nf.modulus_of_continuity(circle4096, tau) - chord) <= SLACK4096
    assert abs(nf.minimal_oscillation(circle4096, tau) - chord) <= SLACK4096
    assert abs(nf.modulus_of_continuity(circle4096, tau, "arc") - tau) <= SLACK4096
    assert abs(nf.minimal_oscillation(circle4096, tau, "arc") - tau) <= SLACK4096


def test_circle_scan_is_fast(circle4096):
    t = time.perf_counter()
    for tau in (0.01, 0.05, 0.1):
        nf.modulus_of_continuity(circle4096, tau)
        nf.minimal_oscillation(circle4096, tau)
    assert time.perf_counter() - t < 60


def test_vertex_cone_bounds_modulus():
    rng = np.random.default_rng(4)
    for _ in range(10):
        k = random_convex(rng, 15)
        beta = nf.lift_normals(k).cone_widths.max()
        for tau in (1e-6, 0.3):
            assert nf.modulus_of_continuity(k, tau) >= beta
            assert nf.modulus_of_continuity(k, tau, "arc") >= beta


def test_long_edge_gives_zero_oscillation(unit_square):
    assert nf.minimal_oscillation(unit_square, 0.5) == 0.0
    assert nf.minimal_oscillation(unit_square, 1.0) == 0.0
    assert nf.minimal_oscillation(unit_square, 0.5, "arc") == 0.0


def test_vacuous_beyond_diameter(unit_square):
    v = nf.minimal_oscillation(circle(64), 2.5)
    assert nf.is_vacuous(v) and v == nf.VACUOUS
    assert nf.modulus_of_continuity(circle(64), 2.5) == math.pi


# -- structural properties ---------------------------------------------------------

def test_monotone_in_tau():
    k = ellipse(1024)
    grid = np.linspace(0.01, 1.5, 25)
    for metric in ("chord", "arc"):
        w = [nf.modulus_of_continuity(k, t, metric) for t in grid]
        W = [nf.minimal_oscillation(k, t, metric) for t in grid]
        assert np.all(np.diff(w) >= 0) and np.all(np.diff(W) >= 0)


def test_arc_and_chord_ordering():
    # chord-close pairs include every arc-close pair; arc-far pairs include every chord-far pair
    for k in (ellipse(1024), circle(512), random_convex(np.random.default_rng(6), 60)):
        for tau in np.linspace(0.02, 0.9, 12):
            assert nf.modulus_of_continuity(k, tau, "arc") <= nf.modulus_of_continuity(k, tau) + 1e-12
            assert nf.minimal_oscillation(k, tau, "arc") <= nf.minimal_oscillation(k, tau) + 1e-12


def test_chord_oscillation_can_exceed_arc_oscillation():
    k = circle(4096)
    assert nf.minimal_oscillation(k, 1.0) > nf.minimal_oscillation(k, 1.0, "arc") + 0.04


@settings(max_examples=30, deadline=None)
@given(st.floats(0.01, 1.4), st.floats(0.01, 1.4), st.integers(0, 5))
def test_arc_sub_and_superadditivity(t1, t2, seed):
    k = random_convex(np.random.default_rng(seed), 50)
    if t1 + t2 >= k.perimeter / 2:
        return
    w = lambda t: nf.modulus_of_continuity(k, t, "arc")
    W = lambda t: nf.minimal_oscillation(k, t, "arc")
    assert w(t1 + t2) <= w(t1) + w(t2) + 1e-12
    assert W(t1 + t2) >= W(t1) + W(t2) - 1e-12


def test_rigid_motion_invariance():
    k = ellipse(2048)
    m = k.transformed(1.234, (3.5, -7.25))
    for tau in (0.05, 0.3):
        for metric in ("chord", "arc"):
            assert nf.modulus_of_continuity(m, tau, metric) == pytest.approx(
                nf.modulus_of_continuity(k, tau, metric), abs=1e-9)
            assert nf.minimal_oscillation(m, tau, metric) == pytest.approx(
                nf.minimal_oscillation(k, tau, metric), abs=1e-9)


@pytest.mark.parametrize("rho", [0.5, 2.0])
def test_arc_rates_approach_curvature(rho):
    # each window end can gain or lose one cone of width 2 pi / N
    n = 16384
    k = circle(n, rho)
    errors = []
    for tau in (0.02, 0.05, 0.2):
        bound = 2 * (2 * math.pi / n) / tau
        e1 = abs(nf.modulus_of_continuity(k, tau, "arc") / tau - 1 / rho)
        e2 = abs(nf.minimal_oscillation(k, tau, "arc") / tau - 1 / rho)
        assert e1 <= bound and e2 <= bound
        errors.append(max(e1, e2))
    assert errors[-1] < 0.01 / rho


# -- curvature ----------------------------------------------------------------------------

def test_curvature_on_circles(circle4096):
    kap = nf.curvature_profile(circle4096, 0.01)
    assert np.all(np.abs(kap - 1) <= 0.01)
    assert nf.estimate_curvature(circle(4096, 2.0), 17, 0.01) == pytest.approx(0.5, abs=0.005)


def test_curvature_on_ellipse():
    k = ellipse(8192)
    assert nf.estimate_curvature(k, 0, 0.002) == pytest.approx(2.0, abs=2e-3)
    assert nf.estimate_curvature(k, 2048, 0.002) == pytest.approx(0.25, abs=2e-4)
    kap = nf.curvature_profile(k, 0.002)
    assert kap.max() == pytest.approx(2.0, abs=2e-3)
    assert kap.min() == pytest.approx(0.25, abs=2e-4)


def test_curvature_h_range(circle4096):
    with pytest.raises(ValueError):
        nf.estimate_curvature(circle4096, 0, 0.0)
    with pytest.raises(ValueError):
        nf.estimate_curvature(circle4096, 0, 4.0)


# -- curvature bounds --------------------------------------------------------------------

def test_bound_checks_examples(circle4096, ellipse4096):
    assert nf.check_bound_upper(circle4096, 0.1, 1.0)
    assert nf.check_bound_upper(ellipse4096, 0.05, 2.0)
    assert not nf.check_bound_upper(circle4096, 0.1, 0.5)
    assert nf.check_bound_lower(circle4096, 0.1, 1.0)
    assert nf.check_bound_lower(ellipse4096, 0.1, 0.25)
    assert not nf.check_bound_lower(circle4096, 1.0, 1.5)
