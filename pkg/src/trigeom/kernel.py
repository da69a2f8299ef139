"""Numeric plane-geometry primitives.

Points, lines and circles are small immutable values.  Constructions raise a
:class:`~trigeom.errors.ConstructionError` subclass when the requested object
does not exist; predicates never raise for well-typed input and instead return
a nonnegative residual that is zero exactly when the relation holds.

All thresholds are relative: a construction compares its degeneracy measure to
``tol.degeneracy_eps`` (or ``tol.eps_rel``) times a length ``scale``.  When the
caller does not know a natural scale (the diameter of the triangle being
studied) one is derived from the inputs.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from trigeom.errors import (
    ArityMismatch,
    CoincidentPoints,
    CollinearPoints,
    ConcentricCircles,
    ConjugateAtInfinity,
    DegenerateTriangle,
    IdenticalCircles,
    NoSecondIntersection,
    OnSideline,
    ParallelLines,
    PointNotOnTangent,
    QOnTangent,
)


@dataclass(frozen=True)
class Tolerance:
    eps_rel: float = 1e-9
    degeneracy_eps: float = 1e-12

    def __post_init__(self):
        if not 0.0 < self.degeneracy_eps < self.eps_rel < 1.0:
            raise ValueError(
                f"need 0 < degeneracy_eps < eps_rel < 1, got "
                f"{self.degeneracy_eps!r}, {self.eps_rel!r}"
            )


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True, slots=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite point ({self.x}, {self.y})")

    def __add__(self, other: Point) -> Point:
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, k: float) -> Point:
        return Point(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __truediv__(self, k: float) -> Point:
        return Point(self.x / k, self.y / k)

    def __neg__(self) -> Point:
        return Point(-self.x, -self.y)

    def dot(self, other: Point) -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: Point) -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def dist(self, other: Point) -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def dist2(self, other: Point) -> float:
        dx, dy = self.x - other.x, self.y - other.y
        return dx * dx + dy * dy

    def rot90(self) -> Point:
        return Point(-self.y, self.x)

    def unit(self) -> Point:
        n = self.norm()
        if n == 0.0:
            raise CoincidentPoints("zero vector has no direction")
        return Point(self.x / n, self.y / n)


def _canonical_sign(a: float, b: float, c: float) -> tuple[float, float, float]:
    if a < 0.0 or (a == 0.0 and b < 0.0):
        return -a, -b, -c
    # avoid -0.0 so equal lines compare bitwise
    return a + 0.0, b + 0.0, c + 0.0


@dataclass(frozen=True, slots=True)
class Line:
    """The line ``a*x + b*y + c = 0`` with ``a**2 + b**2 == 1``.

    Use :meth:`from_coeffs` (or one of the constructors below) to build a
    line from arbitrary coefficients; the raw initializer expects normalized
    input and only re-canonicalizes the sign.
    """

    a: float
    b: float
    c: float

    def __post_init__(self):
        n = math.hypot(self.a, self.b)
        if n == 0.0 or not math.isfinite(n) or not math.isfinite(self.c):
            raise ValueError(f"invalid line coefficients ({self.a}, {self.b}, {self.c})")
        a, b, c = _canonical_sign(self.a / n, self.b / n, self.c / n)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @classmethod
    def from_coeffs(cls, a: float, b: float, c: float) -> Line:
        return cls(a, b, c)

    @classmethod
    def through_direction(cls, p: Point, d: Point) -> Line:
        if d.x == 0.0 and d.y == 0.0:
            raise CoincidentPoints("zero direction vector")
        # normal is d rotated by -90 degrees
        a, b = d.y, -d.x
        return cls(a, b, -(a * p.x + b * p.y))

    @property
    def normal(self) -> Point:
        return Point(self.a, self.b)

    @property
    def direction(self) -> Point:
        return Point(self.b, -self.a)

    def angle(self) -> float:
        """Inclination in [0, pi)."""
        theta = math.atan2(-self.a, self.b) % math.pi
        return 0.0 if theta >= math.pi else theta

    def signed_distance(self, p: Point) -> float:
        return self.a * p.x + self.b * p.y + self.c

    def distance(self, p: Point) -> float:
        return abs(self.signed_distance(p))

    def point(self) -> Point:
        """The foot of the origin on the line."""
        return Point(-self.a * self.c, -self.b * self.c)


@dataclass(frozen=True, slots=True)
class Circle:
    center: Point
    r2: float
    degenerate: bool = False

    def __post_init__(self):
        if not math.isfinite(self.r2) or self.r2 < 0.0:
            raise ValueError(f"invalid squared radius {self.r2!r}")
        if self.r2 == 0.0 and not self.degenerate:
            object.__setattr__(self, "degenerate", True)

    @property
    def r(self) -> float:
        return math.sqrt(self.r2)

    def power(self, p: Point) -> float:
        return p.dist2(self.center) - self.r2


@dataclass(frozen=True, slots=True)
class DirectedAngle:
    """An angle between two lines, taken modulo pi."""

    theta: float

    def __post_init__(self):
        t = self.theta % math.pi
        object.__setattr__(self, "theta", 0.0 if t >= math.pi else t)

    def __add__(self, other: DirectedAngle) -> DirectedAngle:
        return DirectedAngle(self.theta + other.theta)

    def __sub__(self, other: DirectedAngle) -> DirectedAngle:
        return DirectedAngle(self.theta - other.theta)

    def __neg__(self) -> DirectedAngle:
        return DirectedAngle(-self.theta)

    def scaled(self, k: int) -> DirectedAngle:
        return DirectedAngle(self.theta * k)

    def gap(self, other: DirectedAngle) -> float:
        """Distance between two angles on the circle R / pi Z, in radians."""
        d = abs(self.theta - other.theta)
        return min(d, math.pi - d)

    def close(self, other: DirectedAngle, eps: float = DEFAULT_TOL.eps_rel) -> bool:
        return self.gap(other) < eps


@dataclass(frozen=True)
class Triangle:
    a: Point
    b: Point
    c: Point
    tol: Tolerance = field(default=DEFAULT_TOL, compare=False, repr=False)

    def __post_init__(self):
        d = self.diameter
        if d == 0.0 or abs((self.b - self.a).cross(self.c - self.a)) <= self.tol.degeneracy_eps * d * d:
            raise DegenerateTriangle(f"collinear vertices {self.a}, {self.b}, {self.c}")

    @classmethod
    def from_coords(cls, coords: Sequence[float], tol: Tolerance = DEFAULT_TOL) -> Triangle:
        if len(coords) != 6:
            raise ValueError(f"expected 6 coordinates, got {len(coords)}")
        x1, y1, x2, y2, x3, y3 = (float(v) for v in coords)
        return cls(Point(x1, y1), Point(x2, y2), Point(x3, y3), tol)

    @property
    def vertices(self) -> tuple[Point, Point, Point]:
        return (self.a, self.b, self.c)

    def rotated(self, k: int = 1) -> Triangle:
        """Relabel cyclically: k=1 maps (A, B, C) to (B, C, A)."""
        v = self.vertices
        k %= 3
        return Triangle(v[k], v[(k + 1) % 3], v[(k + 2) % 3], self.tol)

    @property
    def side_lengths(self) -> tuple[float, float, float]:
        """|BC|, |CA|, |AB|."""
        return (self.b.dist(self.c), self.c.dist(self.a), self.a.dist(self.b))

    @property
    def diameter(self) -> float:
        return max(self.b.dist(self.c), self.c.dist(self.a), self.a.dist(self.b))

    @property
    def angles(self) -> tuple[float, float, float]:
        out = []
        for p, q, r in ((self.a, self.b, self.c), (self.b, self.c, self.a), (self.c, self.a, self.b)):
            u, v = q - p, r - p
            out.append(math.atan2(abs(u.cross(v)), u.dot(v)))
        return tuple(out)

    @property
    def min_angle(self) -> float:
        return min(self.angles)

    @property
    def orientation(self) -> int:
        return 1 if (self.b - self.a).cross(self.c - self.a) > 0 else -1

    def side_line(self, i: int) -> Line:
        """Side opposite vertex i (0 -> BC, 1 -> CA, 2 -> AB)."""
        v = self.vertices
        return line_through(v[(i + 1) % 3], v[(i + 2) % 3], self.tol)

    def centroid(self) -> Point:
        return Point((self.a.x + self.b.x + self.c.x) / 3.0, (self.a.y + self.b.y + self.c.y) / 3.0)

    def from_barycentric(self, u: float, v: float, w: float) -> Point:
        s = u + v + w
        if s == 0.0:
            raise ConjugateAtInfinity("barycentric weights sum to zero")
        return (self.a * u + self.b * v + self.c * w) / s


# -- helpers ---------------------------------------------------------------


def _magnitude(points: Iterable[Point]) -> float:
    m = 0.0
    for p in points:
        m = max(m, abs(p.x), abs(p.y))
    return m


def _spread(points: Sequence[Point]) -> float:
    m = 0.0
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            m = max(m, points[i].dist(points[j]))
    return m


def _lex(points: list[Point]) -> list[Point]:
    return sorted(points, key=lambda p: (p.x, p.y))


# -- constructions ---------------------------------------------------------


def midpoint(p: Point, q: Point) -> Point:
    return Point(0.5 * (p.x + q.x), 0.5 * (p.y + q.y))


def lerp(p: Point, q: Point, t: float) -> Point:
    return Point(p.x + t * (q.x - p.x), p.y + t * (q.y - p.y))


def line_through(p: Point, q: Point, tol: Tolerance = DEFAULT_TOL, scale: float | None = None) -> Line:
    if scale is None:
        scale = _magnitude((p, q))
    if p.dist(q) <= tol.degeneracy_eps * scale:
        raise CoincidentPoints(f"cannot draw a line through coincident points {p} and {q}")
    return Line.through_direction(p, q - p)


def parallel_through(p: Point, l: Line) -> Line:
    return Line(l.a, l.b, -(l.a * p.x + l.b * p.y))


def perpendicular_through(p: Point, l: Line) -> Line:
    return Line.through_direction(p, l.normal)


def perpendicular_bisector(p: Point, q: Point, tol: Tolerance = DEFAULT_TOL) -> Line:
    if p.dist(q) <= tol.degeneracy_eps * max(_magnitude((p, q)), 1e-300):
        raise CoincidentPoints("perpendicular bisector of coincident points")
    return Line.through_direction(midpoint(p, q), (q - p).rot90())


def intersect_lines(l1: Line, l2: Line, tol: Tolerance = DEFAULT_TOL) -> Point:
    det = l1.a * l2.b - l2.a * l1.b
    if abs(det) <= tol.degeneracy_eps:
        raise ParallelLines("lines are parallel")
    x = (l1.b * l2.c - l2.b * l1.c) / det
    y = (l2.a * l1.c - l1.a * l2.c) / det
    return Point(x, y)


def circle_through(p: Point, q: Point, r: Point, tol: Tolerance = DEFAULT_TOL) -> Circle:
    s = _spread((p, q, r))
    u, v = q - p, r - p
    d = 2.0 * u.cross(v)
    if s == 0.0 or abs(d) <= 2.0 * tol.degeneracy_eps * s * s:
        raise CollinearPoints(f"no circle through collinear points {p}, {q}, {r}")
    uu, vv = u.dot(u), v.dot(v)
    cx = (v.y * uu - u.y * vv) / d
    cy = (u.x * vv - v.x * uu) / d
    off = Point(cx, cy)
    # average the three squared distances so no vertex is privileged
    center = p + off
    r2 = (center.dist2(p) + center.dist2(q) + center.dist2(r)) / 3.0
    return Circle(center, r2)


def circle_on_diameter(p: Point, q: Point, tol: Tolerance = DEFAULT_TOL, scale: float | None = None) -> Circle:
    """Circle with segment pq as a diameter; flagged degenerate when p ~ q."""
    if scale is None:
        scale = max(_magnitude((p, q)), 1e-300)
    r2 = p.dist2(q) / 4.0
    return Circle(midpoint(p, q), r2, degenerate=r2 < tol.degeneracy_eps * scale * scale)


def circle_through_tangent(p: Point, q: Point, tangent: Line, tol: Tolerance = DEFAULT_TOL) -> Circle:
    """The circle through ``p`` and ``q`` touching ``tangent`` at ``p``."""
    s = p.dist(q)
    if s == 0.0:
        raise CoincidentPoints("p and q coincide")
    if tangent.distance(p) > tol.eps_rel * s:
        raise PointNotOnTangent(f"{p} is not on the tangent line")
    n = tangent.normal
    k = n.dot(p - q)
    if abs(k) <= tol.degeneracy_eps * s:
        raise QOnTangent(f"{q} lies on the tangent line: the circle would be infinite")
    t = -p.dist2(q) / (2.0 * k)
    center = p + n * t
    return Circle(center, t * t)


def intersect_circles(c1: Circle, c2: Circle, tol: Tolerance = DEFAULT_TOL) -> list[Point]:
    d = c1.center.dist(c2.center)
    scale = max(d, c1.r, c2.r, 1e-300)
    if d <= tol.degeneracy_eps * scale:
        if abs(c1.r - c2.r) <= tol.degeneracy_eps * scale:
            raise IdenticalCircles("the circles coincide")
        return []
    u = (c2.center - c1.center) / d
    a = (d * d + c1.r2 - c2.r2) / (2.0 * d)
    h2 = c1.r2 - a * a
    foot = c1.center + u * a
    if h2 < -tol.eps_rel * scale * scale:
        return []
    if h2 <= tol.degeneracy_eps * scale * scale:
        return [foot]
    h = math.sqrt(h2)
    w = u.rot90() * h
    return _lex([foot + w, foot - w])


def intersect_line_circle(l: Line, c: Circle, tol: Tolerance = DEFAULT_TOL) -> list[Point]:
    scale = max(c.r, 1e-300)
    sd = l.signed_distance(c.center)
    foot = c.center - l.normal * sd
    h2 = c.r2 - sd * sd
    if h2 < -tol.eps_rel * scale * scale:
        return []
    if h2 <= tol.degeneracy_eps * scale * scale:
        return [foot]
    w = l.direction * math.sqrt(h2)
    return _lex([foot + w, foot - w])


def ray_filter(points: Sequence[Point], origin: Point, through: Point,
               tol: Tolerance = DEFAULT_TOL) -> list[Point]:
    """Keep the points on the closed ray from ``origin`` towards ``through``."""
    d = through - origin
    n = d.norm()
    if n == 0.0:
        raise CoincidentPoints("ray direction is undefined")
    return [p for p in points if (p - origin).dot(d) >= -tol.eps_rel * n * n]


def second_intersection(candidates: Sequence[Point], anchor: Point, tol: Tolerance = DEFAULT_TOL,
                        scale: float | None = None) -> Point:
    """The candidate farthest from ``anchor``, which must itself be a known common point."""
    if not candidates:
        raise NoSecondIntersection("no intersection points")
    if scale is None:
        scale = max(_magnitude(list(candidates) + [anchor]), 1e-300)
    best = max(candidates, key=lambda p: p.dist2(anchor))
    if best.dist(anchor) <= tol.eps_rel * scale:
        raise NoSecondIntersection(f"every candidate coincides with the anchor {anchor}")
    return best


def project(p: Point, l: Line) -> Point:
    return p - l.normal * l.signed_distance(p)


def reflect_line(p: Point, l: Line) -> Point:
    return p - l.normal * (2.0 * l.signed_distance(p))


def reflect_point(p: Point, center: Point) -> Point:
    return Point(2.0 * center.x - p.x, 2.0 * center.y - p.y)


def complete_parallelogram(p: Point, q: Point, r: Point) -> Point:
    """Fourth vertex s such that p, q, r, s (in order) is a parallelogram."""
    return p - q + r


def directed_angle(l1: Line, l2: Line) -> DirectedAngle:
    return DirectedAngle(l2.angle() - l1.angle())


def radical_axis(c1: Circle, c2: Circle, tol: Tolerance = DEFAULT_TOL) -> Line:
    d = c2.center - c1.center
    scale = max(d.norm(), c1.r, c2.r, 1e-300)
    if d.norm() <= tol.degeneracy_eps * scale:
        raise ConcentricCircles("concentric circles have no radical axis")
    c = (c1.center.dot(c1.center) - c1.r2) - (c2.center.dot(c2.center) - c2.r2)
    return Line(2.0 * d.x, 2.0 * d.y, c)


def anticomplement(p: Point, t: Triangle) -> Point:
    """Image of ``p`` under the homothety about the centroid with ratio -2."""
    g = t.centroid()
    return g * 3.0 - p * 2.0


def complement(p: Point, t: Triangle) -> Point:
    """Image of ``p`` under the homothety about the centroid with ratio -1/2."""
    g = t.centroid()
    return (g * 3.0 - p) * 0.5


def _reflect_direction(d: Point, axis: Point) -> Point:
    return axis * (2.0 * d.dot(axis)) - d


def isogonal_conjugate(p: Point, t: Triangle) -> Point:
    """Isogonal conjugate of ``p``: reflect the cevians through ``p`` in the
    internal bisectors and intersect two of the reflected lines."""
    tol = t.tol
    scale = t.diameter
    v = t.vertices
    for i in range(3):
        if t.side_line(i).distance(p) <= tol.eps_rel * scale:
            raise OnSideline(f"{p} lies on a side line of the triangle")
    reflected = []
    for i in range(3):
        apex, u, w = v[i], v[(i + 1) % 3], v[(i + 2) % 3]
        bis = ((u - apex).unit() + (w - apex).unit()).unit()
        reflected.append(Line.through_direction(apex, _reflect_direction(p - apex, bis)))
    # intersect the best-conditioned pair
    best = None
    for i, j in ((0, 1), (1, 2), (0, 2)):
        s = abs(reflected[i].a * reflected[j].b - reflected[j].a * reflected[i].b)
        if best is None or s > best[0]:
            best = (s, i, j)
    s, i, j = best
    if s <= tol.degeneracy_eps:
        raise ConjugateAtInfinity(f"the isogonal conjugate of {p} is at infinity")
    return intersect_lines(reflected[i], reflected[j], tol)


# -- residual predicates ---------------------------------------------------


class PredicateKind(str, enum.Enum):
    CONCYCLIC = "concyclic"
    COLLINEAR = "collinear"
    PARALLEL = "parallel"
    PERPENDICULAR = "perpendicular"
    CONCURRENT = "concurrent"
    TANGENT = "tangent"
    ON = "on"
    EQUAL_LENGTH = "equal_length"
    IS_MIDPOINT = "is_midpoint"
    PARALLELOGRAM = "parallelogram"
    COINCIDE = "coincide"


Obj = Union[Point, Line, Circle]


def on_line_residual(p: Point, l: Line, scale: float = 1.0) -> float:
    return l.distance(p) / scale


def on_circle_residual(p: Point, c: Circle, scale: float = 1.0) -> float:
    return abs(p.dist(c.center) - c.r) / scale


def coincide_residual(p: Point, q: Point, scale: float = 1.0) -> float:
    return p.dist(q) / scale


def collinear_residual(p: Point, q: Point, r: Point, scale: float = 1.0) -> float:
    pts = (p, q, r)
    best = (-1.0, 0, 1, 2)
    for i, j, k in ((0, 1, 2), (1, 2, 0), (0, 2, 1)):
        d = pts[i].dist(pts[j])
        if d > best[0]:
            best = (d, i, j, k)
    d, i, j, k = best
    if d == 0.0:
        return 0.0
    return abs((pts[j] - pts[i]).cross(pts[k] - pts[i])) / d / scale


def concyclic_residual(p: Point, q: Point, r: Point, s: Point, scale: float = 1.0,
                       tol: Tolerance = DEFAULT_TOL) -> float:
    """Distance of one point from the circle through the other three, using
    the omitted point whose complementary triple has the largest area."""
    pts = (p, q, r, s)
    best = None
    for omit in range(4):
        tri = [pts[i] for i in range(4) if i != omit]
        area = abs((tri[1] - tri[0]).cross(tri[2] - tri[0]))
        if best is None or area > best[0]:
            best = (area, omit, tri)
    area, omit, tri = best
    if area <= tol.degeneracy_eps * scale * scale:
        # three or more points coincide or all are collinear
        return collinear_residual(*tri, scale=scale) if _spread(pts) > 0 else 0.0
    return on_circle_residual(pts[omit], circle_through(*tri, tol=tol), scale)


def parallel_residual(l1: Line, l2: Line) -> float:
    return abs(l1.a * l2.b - l2.a * l1.b)


def perpendicular_residual(l1: Line, l2: Line) -> float:
    return abs(l1.a * l2.a + l1.b * l2.b)


def concurrent_residual(l1: Line, l2: Line, l3: Line, scale: float = 1.0,
                        tol: Tolerance = DEFAULT_TOL) -> float:
    """Distance from the intersection of the two least-parallel lines to the third.

    Raises :class:`ParallelLines` when every pair is parallel.
    """
    lines = (l1, l2, l3)
    best = None
    for i, j, k in ((0, 1, 2), (1, 2, 0), (0, 2, 1)):
        s = parallel_residual(lines[i], lines[j])
        if best is None or s > best[0]:
            best = (s, i, j, k)
    s, i, j, k = best
    if s <= tol.eps_rel:
        raise ParallelLines("cannot test concurrency of parallel lines")
    x = intersect_lines(lines[i], lines[j], tol)
    return lines[k].distance(x) / scale


def tangent_circles_residual(c1: Circle, c2: Circle, scale: float = 1.0) -> float:
    d = c1.center.dist(c2.center)
    return min(abs(d - (c1.r + c2.r)), abs(d - abs(c1.r - c2.r))) / scale


def tangent_line_circle_residual(l: Line, c: Circle, scale: float = 1.0) -> float:
    return abs(l.distance(c.center) - c.r) / scale


def equal_length_residual(p: Point, q: Point, r: Point, s: Point, scale: float = 1.0) -> float:
    return abs(p.dist(q) - r.dist(s)) / scale


def is_midpoint_residual(m: Point, p: Point, q: Point, scale: float = 1.0) -> float:
    return m.dist(midpoint(p, q)) / scale


def parallelogram_residual(p: Point, q: Point, r: Point, s: Point, scale: float = 1.0) -> float:
    """Zero iff p, q, r, s taken in order form a parallelogram (p + r == q + s)."""
    return (p + r - q - s).norm() / scale


_SIGNATURES: dict[PredicateKind, tuple[tuple[type, ...], ...]] = {
    PredicateKind.CONCYCLIC: ((Point, Point, Point, Point),),
    PredicateKind.COLLINEAR: ((Point, Point, Point),),
    PredicateKind.PARALLEL: ((Line, Line),),
    PredicateKind.PERPENDICULAR: ((Line, Line),),
    PredicateKind.CONCURRENT: ((Line, Line, Line),),
    PredicateKind.TANGENT: ((Circle, Circle), (Line, Circle), (Circle, Line)),
    PredicateKind.ON: ((Point, Line), (Point, Circle)),
    PredicateKind.EQUAL_LENGTH: ((Point, Point, Point, Point),),
    PredicateKind.IS_MIDPOINT: ((Point, Point, Point),),
    PredicateKind.PARALLELOGRAM: ((Point, Point, Point, Point),),
    PredicateKind.COINCIDE: ((Point, Point),),
}


def predicate_signatures(kind: PredicateKind) -> tuple[tuple[type, ...], ...]:
    return _SIGNATURES[PredicateKind(kind)]


def residual(pred: PredicateKind | str, args: Sequence[Obj], scale: float = 1.0,
             tol: Tolerance = DEFAULT_TOL) -> float:
    """Scale-normalized residual of ``pred`` applied to ``args``.

    Lengths are divided by ``scale`` (normally the triangle diameter); angular
    predicates return the sine of the defect, which is already dimensionless.
    """
    kind = PredicateKind(pred)
    types = tuple(type(a) for a in args)
    if types not in _SIGNATURES[kind]:
        raise ArityMismatch(
            f"{kind.value} expects one of "
            f"{[tuple(t.__name__ for t in sig) for sig in _SIGNATURES[kind]]}, "
            f"got {tuple(t.__name__ for t in types)}"
        )
    if kind is PredicateKind.CONCYCLIC:
        return concyclic_residual(*args, scale=scale, tol=tol)
    if kind is PredicateKind.COLLINEAR:
        return collinear_residual(*args, scale=scale)
    if kind is PredicateKind.PARALLEL:
        return parallel_residual(*args)
    if kind is PredicateKind.PERPENDICULAR:
        return perpendicular_residual(*args)
    if kind is PredicateKind.CONCURRENT:
        return concurrent_residual(*args, scale=scale, tol=tol)
    if kind is PredicateKind.TANGENT:
        if isinstance(args[0], Circle) and isinstance(args[1], Circle):
            return tangent_circles_residual(args[0], args[1], scale)
        line, circ = (args[0], args[1]) if isinstance(args[0], Line) else (args[1], args[0])
        return tangent_line_circle_residual(line, circ, scale)
    if kind is PredicateKind.ON:
        if isinstance(args[1], Line):
            return on_line_residual(args[0], args[1], scale)
        return on_circle_residual(args[0], args[1], scale)
    if kind is PredicateKind.EQUAL_LENGTH:
        return equal_length_residual(*args, scale=scale)
    if kind is PredicateKind.IS_MIDPOINT:
        return is_midpoint_residual(*args, scale=scale)
    if kind is PredicateKind.PARALLELOGRAM:
        return parallelogram_residual(*args, scale=scale)
    return coincide_residual(*args, scale=scale)


def signed_ratio(p: Point, q: Point, r: Point, s: Point) -> float:
    """Ratio of directed lengths pq / rs of two segments on a common line.

    The sign is positive when the two segments point the same way.
    """
    d = s - r
    dd = d.dot(d)
    if dd == 0.0:
        raise CoincidentPoints("zero-length denominator segment")
    return (q - p).dot(d) / dd
