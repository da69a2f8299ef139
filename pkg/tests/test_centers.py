import math

import pytest
from hypothesis import given, settings

from trigeom import centers as C
from trigeom import kernel as K
from trigeom.errors import EquilateralDegenerate
from trigeom.kernel import Point
from trigeom.theorems import random_triangles

from conftest import close, triangles

A_X = Point(28 / 17, 24 / 17)
A_Y = Point(20 / 17, 12 / 17)


def test_basic_centers_reference(T0):
    b = C.basic_centers(T0)
    assert close(b.O, Point(2, 1))
    assert close(b.H, Point(1, 1))
    assert close(b.G, Point(5 / 3, 1))
    assert close(b.L, Point(14 / 11, 12 / 11))
    assert close(b.N, K.midpoint(b.O, b.H))


def test_lemoine_matches_squared_side_barycentrics(T0):
    # a^2 = 18, b^2 = 10, c^2 = 16
    A, B, Cv = T0.vertices
    expect = (A * 18 + B * 10 + Cv * 16) / 44
    assert close(C.lemoine_point(T0), expect)


def test_basic_centers_equilateral(EQ):
    b = C.basic_centers(EQ)
    c = Point(0, 1 / math.sqrt(3))
    for p in (b.G, b.O, b.H, b.L):
        assert close(p, c)


def test_vertex_fixed_points_reference(T0):
    v = C.vertex_fixed_points(T0, "A")
    assert close(v.X, A_X)
    assert close(v.Y, A_Y)
    # A_GY by parallelogram completion equals the midpoint of A A_M
    assert close(v.GY, K.midpoint(T0.a, v.M))
    assert v.GY.dist(v.G_mid) > 0.1


def test_vertex_fixed_points_equilateral(EQ):
    v = C.vertex_fixed_points(EQ, "A")
    O = Point(0, 1 / math.sqrt(3))
    assert close(v.X, O) and close(v.Y, O)


def test_problem_circles_reference(T0):
    w1, w2 = C.problem1_circles(T0)
    assert close(w1.center, Point(2, -2 / 3)) and abs(w1.r2 - 40 / 9) < 1e-12
    assert close(w2.center, Point(0, 5 / 3)) and abs(w2.r2 - 25 / 9) < 1e-12


def test_brocard_equilateral(EQ):
    br = C.brocard(EQ)
    O = Point(0, 1 / math.sqrt(3))
    assert close(br.Z1, O, 1e-12) and close(br.Z2, O, 1e-12)
    assert br.omega == pytest.approx(math.pi / 6, abs=1e-12)
    assert br.degenerate


def test_brocard_angle_cot_identity(T0):
    br = C.brocard(T0)
    cot = lambda x: 1 / math.tan(x)
    assert cot(br.omega) == pytest.approx(sum(cot(a) for a in T0.angles), rel=1e-12)


def test_brocard_points_on_brocard_circle(T0):
    br = C.brocard(T0)
    b = C.basic_centers(T0)
    circ = K.circle_on_diameter(b.O, b.L)
    for p in (br.Z1, br.Z2, *br.second_triangle):
        assert K.on_circle_residual(p, circ, T0.diameter) < 1e-9


def test_brocard_angle_definition(T0):
    # angle Z1AB = Z1BC = Z1CA = omega for one of the two points
    br = C.brocard(T0)
    A, B, Cv = T0.vertices

    def ang(p, q, r):
        u, v = q - p, r - p
        return math.atan2(abs(u.cross(v)), u.dot(v))

    for Z in (br.Z1, br.Z2):
        first = [ang(A, Z, B), ang(B, Z, Cv), ang(Cv, Z, A)]
        second = [ang(A, Z, Cv), ang(B, Z, A), ang(Cv, Z, B)]
        assert any(max(abs(x - br.omega) for x in angs) < 1e-12 for angs in (first, second))


def test_first_brocard_pairing_alternative_fails(T0):
    br = C.brocard(T0)
    swapped = C.first_brocard_triangle(T0, br.Z1, br.Z2, pairing="swapped")
    s = K.circle_through(*br.second_triangle)
    assert max(K.on_circle_residual(p, s, T0.diameter) for p in br.first_triangle) < 1e-12
    assert max(K.on_circle_residual(p, s, T0.diameter) for p in swapped) > 1e-3


def test_hagge_lemoine_is_orthocentroidal(T0):
    hc = C.hagge(T0, C.basic_centers(T0).L).circle
    assert close(hc.center, Point(4 / 3, 1), 1e-9)
    assert hc.r2 == pytest.approx(1 / 9, abs=1e-9)


def test_hagge_circumcenter_pivot_contains_H(T0):
    b = C.basic_centers(T0)
    h = C.hagge(T0, b.O, b)
    assert K.on_circle_residual(b.H, h.circle, T0.diameter) < 1e-12
    # pivot O: A1 is the antipode of A
    assert close(h.A1, b.O * 2 - T0.a, 1e-12)


def test_hagge_equilateral_center_pivot(EQ):
    b = C.basic_centers(EQ)
    h = C.hagge(EQ, b.O, b)
    assert K.on_circle_residual(b.H, h.circle, EQ.diameter) < 1e-12


def test_orthocentroidal_reference(T0):
    oc = C.orthocentroidal(T0)
    assert close(oc.circle.center, Point(4 / 3, 1))
    assert oc.circle.r2 == pytest.approx(1 / 9, abs=1e-12)
    assert abs(A_Y.dist2(oc.circle.center) - 1 / 9) < 1e-12
    for p in (oc.H_A, oc.H_B, oc.H_C, *oc.Y_triangle):
        assert K.on_circle_residual(p, oc.circle, T0.diameter) < 1e-12


def test_orthocentroidal_rejects_equilateral(EQ):
    with pytest.raises(EquilateralDegenerate):
        C.orthocentroidal(EQ)


def test_orthocentroidal_isosceles_symmetry():
    t = K.Triangle(Point(0, 3), Point(-1, 0), Point(1, 0))
    oc = C.orthocentroidal(t)
    b = C.basic_centers(t)
    assert K.on_line_residual(oc.H_A, K.line_through(b.G, b.H), t.diameter) < 1e-12


def test_configuration_reference(T0):
    cfg = C.configuration(T0)
    assert close(cfg.M_BC, Point(2.5, 1.5))
    assert close(cfg.M_CA, Point(0.5, 1.5))
    assert close(cfg.M_AB, Point(2, 0))
    assert close(cfg.vertex("A").N_mid, Point(1.25, 0.75))
    named = cfg.named()
    assert close(named["A_X"], A_X) and close(named["A_Y"], A_Y)
    assert not cfg.degenerate


def test_configuration_equilateral(EQ):
    cfg = C.configuration(EQ)
    assert cfg.degenerate and cfg.brocard.degenerate and cfg.orthocentroidal is None
    O = cfg.basic.O
    for v in cfg.vertices:
        assert close(v.X, O) and close(v.Y, O)


def test_configuration_names_are_stable(T0):
    assert list(C.configuration(T0).named()) == list(C.configuration(T0.rotated(0)).named())


def test_theorem_equivalences_on_seeded_triangles():
    for t in random_triangles(7, 150):
        b = C.basic_centers(t)
        for k in range(3):
            r = t.rotated(k)
            A = r.a
            X = C.fixed_point_parallel(r)
            Y = C.fixed_point_antiparallel(r)
            assert K.coincide_residual(X, K.project(b.O, K.line_through(A, b.L)), t.diameter) < 1e-9
            assert K.coincide_residual(Y, K.project(b.H, K.line_through(A, b.G)), t.diameter) < 1e-9


@settings(max_examples=60, deadline=None)
@given(triangles(15.0))
def test_fixed_points_are_isogonal(t):
    # a right angle at A puts H, and hence A_Y, on the vertex itself
    if abs(t.angles[0] - math.pi / 2) < 0.05:
        return
    X, Y = C.fixed_point_parallel(t), C.fixed_point_antiparallel(t)
    assert K.coincide_residual(K.isogonal_conjugate(Y, t), X, t.diameter) < 1e-8
