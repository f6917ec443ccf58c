import json
import math

import numpy as np
import pytest

from blaschke import normal_field as nf
from blaschke import theorem_harness as th
from blaschke.bodies import BodySpec
from blaschke.deformed_ngons import place, standard_fattened, standard_mangled
from blaschke.geom2d import ConvexPolyline2, contains_polygon

from conftest import circle, ellipse, random_convex


def sagitta_tol(curve, spec):
    return max(1e-9 * curve.diameter, spec.sagitta())


CIRCLE = BodySpec("circle", {"radius": 1.0}, 4096)
ELLIPSE = BodySpec("ellipse", {"a": 2.0, "b": 1.0}, 4096)


# -- containment oracle ----------------------------------------------------------

def brute_penetrations(curve, ngon, idx, angles, tau, inside):
    out = np.empty(angles.shape)
    for s, i in enumerate(idx):
        for t, theta in enumerate(angles[s]):
            placed = place(ngon, curve.vertices[i], theta + math.pi / 2, tau)
            out[s, t] = contains_polygon(curve, placed)[1] if inside else contains_polygon(placed, curve)[1]
    return out


@pytest.mark.parametrize("seed", range(4))
def test_support_lookup_matches_vertex_containment(seed):
    rng = np.random.default_rng(seed)
    curve = random_convex(rng, 150)
    field = nf.lift_normals(curve)
    idx = th.sample_vertices(curve, 40)
    angles = th.sample_normals(field, idx)
    tau = 0.15
    m = standard_mangled(3)
    got = th.inscribed_penetrations(curve, m.vertices, curve.vertices[idx], angles, tau)
    assert np.allclose(got, brute_penetrations(curve, m, idx, angles, tau, True), atol=1e-12)
    f = standard_fattened(2)
    got = th.outscribed_penetrations(curve, f.vertices, curve.vertices[idx], angles, 1.5)
    assert np.allclose(got, brute_penetrations(curve, f, idx, angles, 1.5, False), atol=1e-12)


def test_sample_vertices_are_stratified(circle4096):
    idx = th.sample_vertices(circle4096, 256)
    assert len(idx) == 256
    assert np.array_equal(idx, np.arange(0, 4096, 16))
    assert len(th.sample_vertices(ConvexPolyline2([[0, 0], [1, 0], [0, 1]]), 50)) == 3


def test_sample_normals_cover_the_cone(unit_square):
    f = nf.lift_normals(unit_square)
    a = th.sample_normals(f, np.arange(4))
    assert np.allclose(a[:, 1] - a[:, 0], math.pi / 2)
    assert np.allclose(a[:, 2], a[:, :2].mean(axis=1))


# -- the discrete theorems ---------------------------------------------------------

@pytest.mark.parametrize("metric", ["chord", "arc"])
def test_inscribed_circle_and_ellipse(circle4096, ellipse4096, metric):
    for curve, spec in ((circle4096, CIRCLE), (ellipse4096, ELLIPSE)):
        tol = sagitta_tol(curve, spec)
        rep = th.verify_inscribed(curve, 0.05, metric, 256, tol)
        assert rep.status == th.PASSED, rep.failures[:3]
        assert rep.worst_penetration <= tol
        assert rep.points_checked == 256 and rep.placements_checked == 768
        assert rep.hypothesis["phi"] < math.pi / 4


def test_outscribed_circle_and_ellipse(circle4096, ellipse4096):
    for curve, spec, tau in ((circle4096, CIRCLE, 0.05), (ellipse4096, ELLIPSE, 0.05), (ellipse4096, ELLIPSE, 0.1)):
        tol = sagitta_tol(curve, spec)
        rep = th.verify_outscribed(curve, tau, 256, tol)
        assert rep.status == th.PASSED
        assert rep.worst_penetration <= tol


def test_outscribed_ellipse_phi_above_curvature_bound(ellipse4096):
    rep = th.verify_outscribed(ellipse4096, 0.1)
    assert rep.hypothesis["phi"] >= 0.25 * 0.1 - nf.discretization_slack(ellipse4096)


def test_oversized_inscribed_control_fails(circle4096, ellipse4096):
    for curve in (circle4096, ellipse4096):
        rep = th.verify_inscribed(curve, 0.05, place_tau=0.5)
        assert rep.status == th.FAILED and len(rep.failures) > 0


def test_undersized_outscribed_control_fails(circle4096, ellipse4096):
    for curve in (circle4096, ellipse4096):
        rep = th.verify_outscribed(curve, 0.05, place_tau=0.005)
        assert rep.status == th.FAILED


def test_square_is_unsatisfied(unit_square):
    rep = th.verify_outscribed(unit_square, 0.5)
    assert rep.status == th.UNSATISFIED and rep.reason == "edge longer than tau"
    rep = th.verify_inscribed(unit_square, 0.5)
    assert rep.status == th.UNSATISFIED
    assert not rep.passed and rep.failures == []


def test_vacuous_oscillation_is_unsatisfied():
    rep = th.verify_outscribed(circle(64), 3.0)
    assert rep.status == th.UNSATISFIED


def test_report_invariants(ellipse4096):
    for rep in (th.verify_inscribed(ellipse4096, 0.05), th.verify_inscribed(ellipse4096, 0.05, place_tau=0.3),
                th.verify_outscribed(ellipse4096, 0.05)):
        assert rep.passed == (not rep.failures) == (rep.worst_penetration <= rep.tolerance)
        d = json.loads(json.dumps(rep.to_dict()))
        assert d["status"] == rep.status and len(d["failures"]) == len(rep.failures)


def test_argument_errors(circle4096):
    with pytest.raises(ValueError):
        th.verify_inscribed(circle4096, 0.0)
    with pytest.raises(ValueError):
        th.verify_outscribed(circle4096, 0.1, sample_count=0)


def test_hypothesis_monotone_in_tau(ellipse4096):
    for tau in (0.1, 0.05, 0.02, 0.01):
        assert th.verify_inscribed(ellipse4096, tau).passed


def test_scale_equivariance():
    k = ellipse(2048)
    for lam in (0.1, 7.0):
        big = k.transformed(scale=lam)
        for tau in (0.05, 0.2):
            a, b = th.verify_inscribed(k, tau), th.verify_inscribed(big, lam * tau)
            assert a.status == b.status
            assert a.hypothesis["k"] == b.hypothesis["k"]
            a, b = th.verify_outscribed(k, tau), th.verify_outscribed(big, lam * tau)
            assert a.status == b.status


def test_rigid_motion_equivariance():
    k = ellipse(2048)
    m = k.transformed(0.7, (-3.0, 11.0))
    for tau in (0.05, 0.2):
        a, b = th.verify_inscribed(k, tau), th.verify_inscribed(m, tau)
        assert a.status == b.status and a.hypothesis["k"] == b.hypothesis["k"]
        a, b = th.verify_outscribed(k, tau), th.verify_outscribed(m, tau)
        assert a.status == b.status


# -- rolling disk limits ------------------------------------------------------------

def test_blaschke_ellipse(ellipse8192):
    t = th.blaschke_limit_inscribed(ellipse8192, 2.0, [0.05, 0.02, 0.01])
    assert t.disk_contained and t.disk_worst_penetration <= 1e-3
    assert t.target_radius == 0.5
    assert all(r.contained for r in t.rows)
    radii = [r.certified_radius for r in t.rows]
    assert np.all(np.diff(radii) > 0) and radii[-1] <= 0.5 and abs(radii[-1] - 0.5) < 0.05


def test_blaschke_false_bound_fails_at_the_vertices(ellipse8192):
    t = th.blaschke_limit_inscribed(ellipse8192, 1.9, [0.01])
    assert not t.disk_contained
    pts = np.array([p for _, p, _ in t.disk_failures])
    assert np.all(np.abs(pts[:, 0]) > 1.8)


def test_strantzen_ellipse(ellipse8192):
    t = th.strantzen_limit_outscribed(ellipse8192, 0.25, [0.05, 0.02, 0.01])
    assert t.disk_contained and t.disk_worst_penetration <= 1e-3
    assert all(r.contained and r.hypothesis_holds for r in t.rows)
    radii = [r.certified_radius for r in t.rows]
    assert np.all(np.diff(radii) < 0) and radii[-1] >= 4


def test_strantzen_false_bound_fails_near_minor_vertices(ellipse8192):
    # kappa = 1/4 < 0.3 around (0, +-1): failures form one arc about each
    # minor vertex, symmetric in x, and stay clear of the major vertices
    t = th.strantzen_limit_outscribed(ellipse8192, 0.3, [0.01])
    assert not t.disk_contained
    pts = np.array([p for _, p, _ in t.disk_failures])
    assert np.all(np.abs(pts[:, 0]) < 1.3)
    for side in (1, -1):
        arc = pts[np.sign(pts[:, 1]) == side]
        assert len(arc) > 10
        assert abs(arc[:, 0].mean()) < 0.05
        assert np.linalg.norm(arc - [0, side], axis=1).min() < 0.02
    # the major vertices were sampled, so their absence above is meaningful
    sampled = ellipse8192.vertices[th.sample_vertices(ellipse8192, 256)]
    assert np.any(np.abs(sampled[:, 0]) > 1.99)


def test_circle_disks_are_the_body():
    k = circle(8192)
    a = th.blaschke_limit_inscribed(k, 1.0, [0.01])
    b = th.strantzen_limit_outscribed(k, 1.0, [0.01])
    assert a.disk_contained and b.disk_contained
    assert abs(a.disk_worst_penetration) <= 1e-6 and abs(b.disk_worst_penetration) <= 1e-6
    # proof-phi column of the inscribed table: within 2% of the radius
    assert abs(a.rows[0].certified_radius - 1) <= 0.02


def test_limit_table_serializes(ellipse8192):
    t = th.blaschke_limit_inscribed(ellipse8192, 2.0, [0.5, 0.01])
    d = json.loads(json.dumps(t.to_dict(), allow_nan=False))
    assert d["rows"][0]["hypothesis_holds"] is False
    assert d["rows"][0]["worst_penetration"] is None
    with pytest.raises(ValueError):
        th.blaschke_limit_inscribed(ellipse8192, 0.0, [0.1])
