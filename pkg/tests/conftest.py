import math

import numpy as np
import pytest

from blaschke.bodies import BodySpec, generate_body
from blaschke.geom2d import ConvexPolyline2
from blaschke.space3d import ConvexPolytope3, cube, icosphere

# acceptance verdicts, one (criterion, ok, detail) per check
ACCEPTANCE = []


def circle(n, radius=1.0):
    return generate_body(BodySpec("circle", {"radius": radius}, n))


def ellipse(n, a=2.0, b=1.0):
    return generate_body(BodySpec("ellipse", {"a": a, "b": b}, n))


def random_convex(rng, n=12, spread=1.0):
    """Convex polygon: hull-sorted points on a jittered circle."""
    t = np.sort(rng.uniform(0, 2 * math.pi, n))
    r = spread * (1 + 0.3 * rng.uniform(size=n))
    pts = np.stack([r * np.cos(t), r * np.sin(t)], axis=1)
    from scipy.spatial import ConvexHull
    return ConvexPolyline2(pts[ConvexHull(pts).vertices])


@pytest.fixture(scope="session")
def circle4096():
    return circle(4096)


@pytest.fixture(scope="session")
def ellipse4096():
    return ellipse(4096)


@pytest.fixture(scope="session")
def ellipse8192():
    return ellipse(8192)


@pytest.fixture(scope="session")
def unit_square():
    return ConvexPolyline2([[0, 0], [1, 0], [1, 1], [0, 1]])


@pytest.fixture(scope="session")
def ball():
    return ConvexPolytope3(icosphere(4))


@pytest.fixture(scope="session")
def ellipsoid():
    return ConvexPolytope3(icosphere(5) * np.array([2.0, 1.5, 1.0]))


@pytest.fixture(scope="session")
def cube3():
    return ConvexPolytope3(cube(2.0))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n, ok, detail in sorted(ACCEPTANCE, key=lambda row: row[0]):
        terminalreporter.write_line(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
