import math

import pytest
from hypothesis import strategies as st

from trigeom.errors import GeometryError
from trigeom.kernel import Point, Triangle

T0_COORDS = (0.0, 0.0, 4.0, 0.0, 1.0, 3.0)
EQ_COORDS = (0.0, math.sqrt(3.0), -1.0, 0.0, 1.0, 0.0)


@pytest.fixture
def T0() -> Triangle:
    return Triangle.from_coords(T0_COORDS)


@pytest.fixture
def EQ() -> Triangle:
    return Triangle.from_coords(EQ_COORDS)


def close(p: Point, q: Point, tol: float = 1e-12) -> bool:
    return abs(p.x - q.x) <= tol and abs(p.y - q.y) <= tol


coord = st.floats(-10.0, 10.0, allow_nan=False, allow_infinity=False)
points = st.builds(Point, coord, coord)


@st.composite
def triangles(draw, min_angle_deg: float = 10.0):
    """Reasonably conditioned triangles for property tests."""
    a, b, c = draw(points), draw(points), draw(points)
    try:
        t = Triangle(a, b, c)
    except GeometryError:
        t = None
    from hypothesis import assume
    assume(t is not None and t.diameter > 0.5 and t.min_angle > math.radians(min_angle_deg))
    return t


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[key])
