"""Binding table from script function names to kernel and centers operations.

Each builtin has one or more typed signatures; the parser uses them for
static checking and the evaluator for dispatch.  Types are the strings
``point``, ``line``, ``circle`` and ``number``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable

from trigeom import centers as C
from trigeom import kernel as K
from trigeom.errors import ConstructionError
from trigeom.kernel import Circle, Line, Point, Tolerance, Triangle

POINT, LINE, CIRCLE, NUMBER = "point", "line", "circle", "number"

_PY_TYPES = {POINT: Point, LINE: Line, CIRCLE: Circle, NUMBER: float}


class Scope:
    """Per-triangle evaluation state; derived structures are built lazily."""

    def __init__(self, t: Triangle, tol: Tolerance):
        self.t = t
        self.tol = tol
        self.scale = t.diameter

    @cached_property
    def basic(self) -> C.BasicCenters:
        return C.basic_centers(self.t)

    @cached_property
    def brocard(self) -> C.BrocardData:
        return C.brocard(self.t)

    def vertex_index(self, v: Point) -> int:
        for k, p in enumerate(self.t.vertices):
            if p == v:
                return k
        raise ConstructionError(f"{v} is not a vertex of the triangle")


@dataclass(frozen=True)
class Signature:
    params: tuple[str, ...]
    returns: str
    impl: Callable


@dataclass(frozen=True)
class Builtin:
    name: str
    signatures: tuple[Signature, ...]
    operation: str  # the library function it binds to, for documentation and tests

    def resolve(self, arg_types: tuple[str, ...]) -> Signature | None:
        for sig in self.signatures:
            if sig.params == arg_types:
                return sig
        return None

    @property
    def arities(self) -> set[int]:
        return {len(s.params) for s in self.signatures}


def _sig(params, returns, impl):
    return Signature(tuple(params), returns, impl)


def _second(s: Scope, a, b, anchor: Point) -> Point:
    if isinstance(a, Circle) and isinstance(b, Circle):
        pts = K.intersect_circles(a, b, s.tol)
    else:
        line, circ = (a, b) if isinstance(a, Line) else (b, a)
        pts = K.intersect_line_circle(line, circ, s.tol)
    return K.second_intersection(pts, anchor, s.tol, s.scale)


def _fixed(kind: str):
    def impl(s: Scope, v: Point) -> Point:
        t = s.t.rotated(s.vertex_index(v))
        return C.fixed_point_parallel(t) if kind == "parallel" else C.fixed_point_antiparallel(t)
    return impl


def _orthocentroidal_circle(s: Scope) -> Circle:
    return C.orthocentroidal(s.t, s.basic).circle


_TABLE: tuple[Builtin, ...] = (
    Builtin("line", (_sig((POINT, POINT), LINE, lambda s, p, q: K.line_through(p, q, s.tol, s.scale)),), "kernel.line_through"),
    Builtin("circle", (_sig((POINT, POINT, POINT), CIRCLE, lambda s, p, q, r: K.circle_through(p, q, r, s.tol)),), "kernel.circle_through"),
    Builtin("circle_tangent", (_sig((POINT, POINT, LINE), CIRCLE, lambda s, p, q, l: K.circle_through_tangent(p, q, l, s.tol)),),
            "kernel.circle_through_tangent"),
    Builtin("intersect", (_sig((LINE, LINE), POINT, lambda s, a, b: K.intersect_lines(a, b, s.tol)),), "kernel.intersect_lines"),
    Builtin("second_intersect", (
        _sig((CIRCLE, CIRCLE, POINT), POINT, _second),
        _sig((LINE, CIRCLE, POINT), POINT, _second),
        _sig((CIRCLE, LINE, POINT), POINT, _second),
    ), "kernel.second_intersection"),
    Builtin("project", (_sig((POINT, LINE), POINT, lambda s, p, l: K.project(p, l)),), "kernel.project"),
    Builtin("reflect_line", (_sig((POINT, LINE), POINT, lambda s, p, l: K.reflect_line(p, l)),), "kernel.reflect_line"),
    Builtin("reflect_point", (_sig((POINT, POINT), POINT, lambda s, p, c: K.reflect_point(p, c)),), "kernel.reflect_point"),
    Builtin("midpoint", (_sig((POINT, POINT), POINT, lambda s, p, q: K.midpoint(p, q)),), "kernel.midpoint"),
    Builtin("lerp", (_sig((POINT, POINT, NUMBER), POINT, lambda s, p, q, t: K.lerp(p, q, t)),), "kernel.lerp"),
    Builtin("parallel_through", (_sig((POINT, LINE), LINE, lambda s, p, l: K.parallel_through(p, l)),), "kernel.parallel_through"),
    Builtin("perpendicular_through", (_sig((POINT, LINE), LINE, lambda s, p, l: K.perpendicular_through(p, l)),),
            "kernel.perpendicular_through"),
    Builtin("center", (_sig((CIRCLE,), POINT, lambda s, c: c.center),), "Circle.center"),
    Builtin("isogonal", (_sig((POINT,), POINT, lambda s, p: K.isogonal_conjugate(p, s.t)),), "kernel.isogonal_conjugate"),
    Builtin("anticomplement", (_sig((POINT,), POINT, lambda s, p: K.anticomplement(p, s.t)),), "kernel.anticomplement"),
    Builtin("centroid", (_sig((), POINT, lambda s: s.basic.G),), "centers.basic_centers.G"),
    Builtin("circumcenter", (_sig((), POINT, lambda s: s.basic.O),), "centers.basic_centers.O"),
    Builtin("circumcircle", (_sig((), CIRCLE, lambda s: s.basic.circumcircle),), "centers.basic_centers.circumcircle"),
    Builtin("orthocenter", (_sig((), POINT, lambda s: s.basic.H),), "centers.basic_centers.H"),
    Builtin("lemoine", (_sig((), POINT, lambda s: s.basic.L),), "centers.basic_centers.L"),
    Builtin("ninepoint", (_sig((), CIRCLE, lambda s: s.basic.euler_circle),), "centers.basic_centers.euler_circle"),
    Builtin("brocard1", (_sig((), POINT, lambda s: s.brocard.Z1),), "centers.brocard.Z1"),
    Builtin("brocard2", (_sig((), POINT, lambda s: s.brocard.Z2),), "centers.brocard.Z2"),
    Builtin("brocard_circle", (_sig((), CIRCLE, lambda s: s.brocard.brocard_circle),), "centers.brocard.brocard_circle"),
    Builtin("fixed_point_parallel", (_sig((POINT,), POINT, _fixed("parallel")),), "centers.fixed_point_parallel"),
    Builtin("fixed_point_antiparallel", (_sig((POINT,), POINT, _fixed("antiparallel")),), "centers.fixed_point_antiparallel"),
    Builtin("hagge_circle", (_sig((POINT,), CIRCLE, lambda s, p: C.hagge(s.t, p, s.basic).circle),), "centers.hagge"),
    Builtin("orthocentroidal_circle", (_sig((), CIRCLE, _orthocentroidal_circle),), "centers.orthocentroidal"),
    Builtin("radical_axis", (_sig((CIRCLE, CIRCLE), LINE, lambda s, a, b: K.radical_axis(a, b, s.tol)),), "kernel.radical_axis"),
)

BUILTINS: dict[str, Builtin] = {b.name: b for b in _TABLE}

def _type_name(t: type) -> str:
    for name, py in _PY_TYPES.items():
        if py is t:
            return name
    raise KeyError(t)


# predicate name -> accepted argument type tuples
PREDICATES: dict[str, tuple[tuple[str, ...], ...]] = {
    kind.value: tuple(tuple(_type_name(t) for t in sig) for sig in K.predicate_signatures(kind))
    for kind in K.PredicateKind
}
