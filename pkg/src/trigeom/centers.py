"""Named points, circles and triangles attached to a triangle ABC.

Everything is built from kernel constructions.  Per-vertex data is computed
for vertex A and obtained for B and C by relabelling the triangle cyclically,
so every statement made about A is available for all three vertices.

Naming follows the usual convention ``M_BC`` = midpoint of segment BC.
Per-vertex fields that cannot be constructed for a given triangle (typically
because two defining points coincide on an isosceles or equilateral input)
are ``None``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, fields, replace
from typing import Callable, Iterator, Optional, TypeVar

from trigeom import kernel as K
from trigeom.errors import (
    ConstructionError,
    EquilateralDegenerate,
    PivotIsVertex,
    PivotOutsideCircumcircle,
)
from trigeom.kernel import Circle, Point, Triangle

VERTEX_IDS = ("A", "B", "C")

T = TypeVar("T")


def _maybe(build: Callable[[], T]) -> Optional[T]:
    try:
        return build()
    except ConstructionError:
        return None


@dataclass(frozen=True)
class BasicCenters:
    G: Point
    O: Point
    H: Point
    N: Point
    L: Point
    circumcircle: Circle
    euler_circle: Circle


@dataclass(frozen=True)
class VertexConfiguration:
    vertex: str
    X: Point
    Y: Point
    S: Point
    M: Point
    Opp: Point
    G_mid: Point
    GY: Point
    N_mid: Point
    L_N: Optional[Point]
    LX: Point
    L_BC: Point
    BY: Optional[Point]
    CY: Optional[Point]
    BY_r: Optional[Point]
    CY_r: Optional[Point]
    O_W: Optional[Point]
    C_W: Optional[Point]
    B_W: Optional[Point]
    omega1: Circle
    omega2: Circle
    gamma1: Circle
    gamma2: Circle


@dataclass(frozen=True)
class BrocardData:
    Z1: Point
    Z2: Point
    omega: float
    brocard_circle: Circle
    second_triangle: tuple[Point, Point, Point]
    first_triangle: Optional[tuple[Point, Point, Point]]
    X39: Point

    @property
    def degenerate(self) -> bool:
        return self.brocard_circle.degenerate


@dataclass(frozen=True)
class HaggeData:
    P: Point
    circle: Circle
    A1: Point
    B1: Point
    C1: Point
    A2: Point
    B2: Point
    C2: Point
    A3: Optional[Point]
    B3: Optional[Point]
    C3: Optional[Point]
    Hprime: Point


@dataclass(frozen=True)
class OrthocentroidalData:
    circle: Circle
    H_A: Point
    H_B: Point
    H_C: Point
    Y_triangle: tuple[Point, Point, Point]


# -- basic centers ---------------------------------------------------------


def _altitude(t: Triangle, i: int) -> K.Line:
    return K.perpendicular_through(t.vertices[i], t.side_line(i))


def lemoine_point(t: Triangle) -> Point:
    a, b, c = t.side_lengths
    return t.from_barycentric(a * a, b * b, c * c)


def basic_centers(t: Triangle) -> BasicCenters:
    circ = K.circle_through(t.a, t.b, t.c, t.tol)
    O = circ.center
    H = K.intersect_lines(_altitude(t, 0), _altitude(t, 1), t.tol)
    N = K.midpoint(O, H)
    return BasicCenters(
        G=t.centroid(),
        O=O,
        H=H,
        N=N,
        L=lemoine_point(t),
        circumcircle=circ,
        euler_circle=Circle(N, circ.r2 / 4.0),
    )


# -- per-vertex points -----------------------------------------------------


def _second_on_line(line: K.Line, circle: Circle, anchor: Point, t: Triangle) -> Point:
    return K.second_intersection(K.intersect_line_circle(line, circle, t.tol), anchor, t.tol, t.diameter)


def _second_on_ray(origin: Point, through: Point, circle: Circle, t: Triangle) -> Point:
    line = K.line_through(origin, through, t.tol, t.diameter)
    pts = K.ray_filter(K.intersect_line_circle(line, circle, t.tol), origin, through, t.tol)
    return K.second_intersection(pts, origin, t.tol, t.diameter)


def problem1_circles(t: Triangle) -> tuple[Circle, Circle]:
    """Circles through A, B tangent to AC and through A, C tangent to AB."""
    A, B, C = t.vertices
    tol = t.tol
    w1 = K.circle_through_tangent(A, B, K.line_through(A, C, tol), tol)
    w2 = K.circle_through_tangent(A, C, K.line_through(A, B, tol), tol)
    return w1, w2


def problem2_circles(t: Triangle) -> tuple[Circle, Circle]:
    """Circles through A, B and through A, C, both tangent to BC (at B and at C)."""
    A, B, C = t.vertices
    bc = K.line_through(B, C, t.tol)
    return K.circle_through_tangent(B, A, bc, t.tol), K.circle_through_tangent(C, A, bc, t.tol)


def fixed_point_parallel(t: Triangle) -> Point:
    """The common point of every circle (AQR) with PQ || AB, PR || AC."""
    w1, w2 = problem1_circles(t)
    return K.second_intersection(K.intersect_circles(w1, w2, t.tol), t.a, t.tol, t.diameter)


def fixed_point_antiparallel(t: Triangle) -> Point:
    """The common point of every circle (AQR) with PQ, PR antiparallel to AB, AC."""
    g1, g2 = problem2_circles(t)
    return K.second_intersection(K.intersect_circles(g1, g2, t.tol), t.a, t.tol, t.diameter)


def _vertex_config(t: Triangle, name: str, bc: BasicCenters, Z1: Point, Z2: Point) -> VertexConfiguration:
    A, B, C = t.vertices
    tol = t.tol
    scale = t.diameter
    w1, w2 = problem1_circles(t)
    g1, g2 = problem2_circles(t)
    X = K.second_intersection(K.intersect_circles(w1, w2, tol), A, tol, scale)
    Y = K.second_intersection(K.intersect_circles(g1, g2, tol), A, tol, scale)
    circ = bc.circumcircle
    S = _second_on_line(K.line_through(A, X, tol, scale), circ, A, t)
    # full lines, not rays: for an obtuse angle at A the point Y lies beyond A
    M = _second_on_line(K.line_through(A, Y, tol, scale), circ, A, t)
    M_AB, M_CA = K.midpoint(A, B), K.midpoint(C, A)
    G_mid = K.midpoint(A, Y)
    GY = K.complete_parallelogram(M_AB, G_mid, M_CA)
    AL = K.line_through(A, bc.L, tol, scale)
    L_N = _maybe(lambda: K.intersect_lines(K.perpendicular_bisector(X, GY, tol), AL, tol))
    BY = _maybe(lambda: _second_on_line(K.line_through(B, Y, tol, scale), circ, B, t))
    CY = _maybe(lambda: _second_on_line(K.line_through(C, Y, tol, scale), circ, C, t))
    return VertexConfiguration(
        vertex=name,
        X=X,
        Y=Y,
        S=S,
        M=M,
        Opp=K.reflect_point(A, bc.O),
        G_mid=G_mid,
        GY=GY,
        N_mid=K.midpoint(M_AB, M_CA),
        L_N=L_N,
        LX=K.project(bc.H, AL),
        L_BC=K.intersect_lines(AL, K.line_through(B, C, tol), tol),
        BY=BY,
        CY=CY,
        BY_r=None if BY is None else K.reflect_line(BY, K.line_through(C, A, tol)),
        CY_r=None if CY is None else K.reflect_line(CY, K.line_through(A, B, tol)),
        O_W=_maybe(lambda: _second_on_line(K.line_through(bc.O, X, tol, scale), w1, X, t)),
        C_W=_maybe(lambda: _second_on_line(K.line_through(C, Z2, tol, scale), w1, Z2, t)),
        B_W=_maybe(lambda: _second_on_line(K.line_through(B, Z1, tol, scale), w2, Z1, t)),
        omega1=w1,
        omega2=w2,
        gamma1=g1,
        gamma2=g2,
    )


def brocard_points(t: Triangle) -> tuple[Point, Point]:
    """First and second Brocard points from pairs of tangent circles.

    Z1 satisfies angle(Z1 A B) = angle(Z1 B C) = angle(Z1 C A); Z2 the mirror
    relation angle(Z2 A C) = angle(Z2 C B) = angle(Z2 B A).
    """
    A, B, C = t.vertices
    tol, scale = t.tol, t.diameter
    ab, bc, ca = K.line_through(A, B, tol), K.line_through(B, C, tol), K.line_through(C, A, tol)
    c1 = K.circle_through_tangent(B, A, bc, tol)
    c2 = K.circle_through_tangent(C, B, ca, tol)
    Z1 = K.second_intersection(K.intersect_circles(c1, c2, tol), B, tol, scale)
    c3 = K.circle_through_tangent(C, A, bc, tol)
    c4 = K.circle_through_tangent(B, C, ab, tol)
    Z2 = K.second_intersection(K.intersect_circles(c3, c4, tol), C, tol, scale)
    return Z1, Z2


def vertex_fixed_points(t: Triangle, v: str) -> VertexConfiguration:
    k = VERTEX_IDS.index(v)
    bc = basic_centers(t)
    Z1, Z2 = brocard_points(t)
    return _vertex_config(t.rotated(k), v, bc, Z1, Z2)


def first_brocard_triangle(t: Triangle, Z1: Point, Z2: Point,
                           pairing: str = "standard") -> tuple[Point, Point, Point]:
    """Vertices Z_A, Z_B, Z_C.

    ``standard`` pairs Z_A = B Z1 & C Z2 (cyclically); ``swapped`` uses
    B Z2 & C Z1.  Only the standard pairing lies on the Brocard circle.
    """
    tol, scale = t.tol, t.diameter
    out = []
    v = t.vertices
    for i in range(3):
        P, Q = v[(i + 1) % 3], v[(i + 2) % 3]
        z_p, z_q = (Z1, Z2) if pairing == "standard" else (Z2, Z1)
        out.append(K.intersect_lines(K.line_through(P, z_p, tol, scale), K.line_through(Q, z_q, tol, scale), tol))
    return tuple(out)


def brocard(t: Triangle, pairing: str = "standard") -> BrocardData:
    bc = basic_centers(t)
    Z1, Z2 = brocard_points(t)
    second = tuple(fixed_point_parallel(t.rotated(k)) for k in range(3))
    return _brocard_data(t, bc, Z1, Z2, second, pairing)


def _brocard_data(t: Triangle, bc: BasicCenters, Z1: Point, Z2: Point,
                  second: tuple[Point, Point, Point], pairing: str = "standard") -> BrocardData:
    # Brocard angle: inclination of AZ1 against AB, folded to (0, pi/2]
    if Z1.dist(t.a) > 0.0:
        theta = K.directed_angle(K.line_through(t.a, t.b, t.tol), K.Line.through_direction(t.a, Z1 - t.a)).theta
        omega = min(theta, math.pi - theta)
    else:
        omega = 0.0
    return BrocardData(
        Z1=Z1,
        Z2=Z2,
        omega=omega,
        brocard_circle=K.circle_on_diameter(bc.O, bc.L, t.tol, t.diameter),
        second_triangle=second,
        first_triangle=_maybe(lambda: first_brocard_triangle(t, Z1, Z2, pairing)),
        X39=K.midpoint(Z1, Z2),
    )


# -- Hagge circle ----------------------------------------------------------


def hagge(t: Triangle, p: Point, bc: BasicCenters | None = None) -> HaggeData:
    """Hagge circle of the pivot ``p``: reflect the second intersections of
    AP, BP, CP with the circumcircle in the sides BC, CA, AB."""
    bc = bc or basic_centers(t)
    tol, scale = t.tol, t.diameter
    for v in t.vertices:
        if p.dist(v) <= tol.eps_rel * scale:
            raise PivotIsVertex(f"pivot {p} coincides with vertex {v}")
    circ = bc.circumcircle
    if p.dist(circ.center) >= circ.r * (1.0 - tol.eps_rel):
        raise PivotOutsideCircumcircle(f"pivot {p} is not inside the circumcircle")
    v = t.vertices
    firsts, seconds = [], []
    for i in range(3):
        P1 = _second_on_ray(v[i], p, circ, t)
        firsts.append(P1)
        seconds.append(K.reflect_line(P1, t.side_line(i)))
    if K._spread(seconds) <= tol.degeneracy_eps * scale:
        circle = Circle(seconds[0], 0.0, degenerate=True)
    else:
        circle = K.circle_through(*seconds, tol=tol)
    thirds = [
        _maybe(lambda i=i: _second_on_line(_altitude(t, i), circle, bc.H, t)) for i in range(3)
    ]
    return HaggeData(
        P=p,
        circle=circle,
        A1=firsts[0], B1=firsts[1], C1=firsts[2],
        A2=seconds[0], B2=seconds[1], C2=seconds[2],
        A3=thirds[0], B3=thirds[1], C3=thirds[2],
        Hprime=K.reflect_point(bc.H, circle.center),
    )


# -- orthocentroidal circle ------------------------------------------------


def is_near_equilateral(t: Triangle, bc: BasicCenters | None = None) -> bool:
    bc = bc or basic_centers(t)
    return bc.G.dist(bc.H) <= t.tol.degeneracy_eps * t.diameter


def orthocentroidal(t: Triangle, bc: BasicCenters | None = None,
                    Y_triangle: tuple[Point, Point, Point] | None = None) -> OrthocentroidalData:
    bc = bc or basic_centers(t)
    if is_near_equilateral(t, bc):
        raise EquilateralDegenerate("G and H coincide: the circle on diameter GH is a point")
    if Y_triangle is None:
        Y_triangle = tuple(fixed_point_antiparallel(t.rotated(k)) for k in range(3))
    feet = [K.project(bc.G, _altitude(t, i)) for i in range(3)]
    return OrthocentroidalData(
        circle=K.circle_on_diameter(bc.G, bc.H, t.tol, t.diameter),
        H_A=feet[0], H_B=feet[1], H_C=feet[2],
        Y_triangle=Y_triangle,
    )


# -- bulk configuration ----------------------------------------------------


@dataclass(frozen=True)
class Configuration:
    triangle: Triangle
    basic: BasicCenters
    vertices: tuple[VertexConfiguration, VertexConfiguration, VertexConfiguration]
    brocard: BrocardData
    orthocentroidal: Optional[OrthocentroidalData]
    M_BC: Point
    M_CA: Point
    M_AB: Point
    degenerate: bool = False

    def vertex(self, v: str | int) -> VertexConfiguration:
        return self.vertices[v if isinstance(v, int) else VERTEX_IDS.index(v)]

    def replace_vertex(self, v: str | int, **changes) -> Configuration:
        k = v if isinstance(v, int) else VERTEX_IDS.index(v)
        vs = list(self.vertices)
        vs[k] = replace(vs[k], **changes)
        return replace(self, vertices=tuple(vs))

    def named(self) -> dict[str, Point | Circle | None]:
        """Flat name -> object dictionary, in a stable order."""
        t, b, br = self.triangle, self.basic, self.brocard
        out: dict[str, Point | Circle | None] = {
            "A": t.a, "B": t.b, "C": t.c,
            "G": b.G, "O": b.O, "H": b.H, "N": b.N, "L": b.L,
            "M_BC": self.M_BC, "M_CA": self.M_CA, "M_AB": self.M_AB,
        }
        for vc in self.vertices:
            for f in fields(VertexConfiguration):
                if f.name == "vertex":
                    continue
                out[f"{vc.vertex}_{f.name}"] = getattr(vc, f.name)
        out["Z1"], out["Z2"], out["X39"] = br.Z1, br.Z2, br.X39
        ft = br.first_triangle or (None, None, None)
        out["Z_A"], out["Z_B"], out["Z_C"] = ft
        out["circumcircle"] = b.circumcircle
        out["euler_circle"] = b.euler_circle
        out["brocard_circle"] = br.brocard_circle
        oc = self.orthocentroidal
        out["H_A"] = oc.H_A if oc else None
        out["H_B"] = oc.H_B if oc else None
        out["H_C"] = oc.H_C if oc else None
        out["orthocentroidal_circle"] = oc.circle if oc else None
        return out

    def points(self) -> Iterator[tuple[str, Point]]:
        for name, obj in self.named().items():
            if isinstance(obj, Point):
                yield name, obj


def configuration(t: Triangle, pairing: str = "standard") -> Configuration:
    bc = basic_centers(t)
    Z1, Z2 = brocard_points(t)
    verts = tuple(_vertex_config(t.rotated(k), VERTEX_IDS[k], bc, Z1, Z2) for k in range(3))
    br = _brocard_data(t, bc, Z1, Z2, tuple(v.X for v in verts), pairing)
    degenerate = is_near_equilateral(t, bc)
    oc = None if degenerate else orthocentroidal(t, bc, tuple(v.Y for v in verts))
    return Configuration(
        triangle=t,
        basic=bc,
        vertices=verts,
        brocard=br,
        orthocentroidal=oc,
        M_BC=K.midpoint(t.b, t.c),
        M_CA=K.midpoint(t.c, t.a),
        M_AB=K.midpoint(t.a, t.b),
        degenerate=degenerate,
    )
