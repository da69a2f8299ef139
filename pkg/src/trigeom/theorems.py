"""Registry of executable theorem checks and the seeded suite runner.

Every check reads the named objects it asserts about from a precomputed
:class:`~trigeom.centers.Configuration`, so a deliberately corrupted
configuration (see :func:`mutate_point`) makes the dependent checks fail.
Per-vertex statements are checked for all three vertices and the worst
residual is reported.
"""
from __future__ import annotations

import enum
import json
import math
import time
from dataclasses import dataclass, field, replace
from typing import Callable, Iterator, Optional, Sequence

from trigeom import kernel as K
from trigeom.centers import (
    VERTEX_IDS,
    Configuration,
    VertexConfiguration,
    configuration,
    hagge,
    lemoine_point,
)
from trigeom.errors import ConstructionError, GeometryError, InvalidSampleCount
from trigeom.kernel import Circle, Line, Point, Tolerance, Triangle
from trigeom.rng import SplitMix64, derive_seed

SCHEMA_VERSION = "trigeom.suite/1"
SIDE_GRID = (0.2, 0.5, 0.8)
SUITE_TOL = Tolerance(eps_rel=1e-7)


class InputSpec(str, enum.Enum):
    TRIANGLE = "triangle"
    SIDE_PARAMETER = "triangle+side-parameter"
    INTERIOR_PIVOT = "triangle+interior-pivot"
    AUXILIARY = "triangle+auxiliary-random-data"


class Status(str, enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIPPED_DEGENERATE = "SKIPPED_DEGENERATE"
    CONSTRUCTION_ERROR = "CONSTRUCTION_ERROR"


# structures a check may depend on; a triangle lacking one skips the check
BROCARD = "brocard"
ORTHOCENTROIDAL = "orthocentroidal"
SCALENE = "scalene"


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    description: str
    source: str
    statement: str
    inputs: InputSpec
    run: Callable[["CheckContext"], float] = field(repr=False, compare=False)
    requires: frozenset[str] = frozenset()
    notes: str = ""
    experimental: bool = False
    figure: tuple[str, ...] = ()

    @property
    def citation(self) -> str:
        return f'{self.source}: "{self.statement}"'


@dataclass
class CheckReport:
    id: str
    triangle: tuple[float, ...]
    sampled_parameters: dict[str, list[float]]
    residual: float
    status: Status
    elapsed: float = 0.0
    message: str = ""

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "message": self.message,
            "residual": _json_float(self.residual),
            "sampled_parameters": self.sampled_parameters,
            "status": self.status.value,
            "triangle": list(self.triangle),
        }


def _json_float(x: float):
    return x if math.isfinite(x) else repr(x)


# -- evaluation context ----------------------------------------------------


class VertexView:
    """The configuration seen from one vertex: A is the chosen vertex."""

    def __init__(self, cfg: Configuration, k: int):
        self.k = k
        self.tri = cfg.triangle.rotated(k)
        self.A, self.B, self.C = self.tri.vertices
        self.v: VertexConfiguration = cfg.vertices[k]
        mids = (cfg.M_BC, cfg.M_CA, cfg.M_AB)
        self.M_BC, self.M_CA, self.M_AB = mids[k], mids[(k + 1) % 3], mids[(k + 2) % 3]
        ft = cfg.brocard.first_triangle
        self.Z = ft[k] if ft else None
        oc = cfg.orthocentroidal
        self.H_A = (oc.H_A, oc.H_B, oc.H_C)[k] if oc else None


class CheckContext:
    def __init__(self, cfg: Configuration, rng: SplitMix64, tol: Tolerance):
        self.cfg = cfg
        self.rng = rng
        self.tol = tol
        self.t = cfg.triangle
        self.s = cfg.triangle.diameter
        self.sampled: dict[str, list[float]] = {}

    def line(self, p: Optional[Point], q: Optional[Point]) -> Line:
        return K.line_through(need(p), need(q), self.tol, self.s)

    def circle(self, p: Optional[Point], q: Optional[Point], r: Optional[Point]) -> Circle:
        return K.circle_through(need(p), need(q), need(r), self.tol)

    def views(self) -> Iterator[VertexView]:
        for k in range(3):
            yield VertexView(self.cfg, k)

    def draw(self, name: str, lo: float = 0.1, hi: float = 0.9) -> float:
        u = self.rng.uniform(lo, hi)
        self.sampled.setdefault(name, []).append(u)
        return u

    def side_params(self, n_random: int = 2) -> list[float]:
        ts = list(SIDE_GRID) + [self.rng.uniform(0.1, 0.9) for _ in range(n_random)]
        self.sampled["t"] = ts
        return ts

    def interior_point(self, name: str) -> Point:
        w = [self.draw(name) for _ in range(3)]
        return self.t.from_barycentric(*w)

    def point_in_box(self, name: str) -> Point:
        xs = [p.x for p in self.t.vertices]
        ys = [p.y for p in self.t.vertices]
        cx, cy = sum(xs) / 3.0, sum(ys) / 3.0
        return Point(cx + self.draw(name, -1.0, 1.0) * self.s, cy + self.draw(name, -1.0, 1.0) * self.s)


def need(obj):
    if obj is None:
        raise ConstructionError("a required point is undefined for this triangle")
    return obj


def _angle_gap(l1: Line, l2: Line, l3: Line, l4: Line) -> float:
    return K.directed_angle(l1, l2).gap(K.directed_angle(l3, l4))


def _ratio_gap(r1: float, r2: float) -> float:
    return abs(r1 - r2) / max(1.0, abs(r1), abs(r2))


# -- Problems 1 and 2 ------------------------------------------------------


def _p1_fixed(ctx: CheckContext) -> float:
    worst = 0.0
    ts = ctx.side_params()
    for v in ctx.views():
        ab, ac = ctx.line(v.A, v.B), ctx.line(v.A, v.C)
        for t in ts:
            P = K.lerp(v.B, v.C, t)
            Q = K.intersect_lines(K.parallel_through(P, ab), ac, ctx.tol)
            R = K.intersect_lines(K.parallel_through(P, ac), ab, ctx.tol)
            worst = max(worst, K.on_circle_residual(v.v.X, ctx.circle(v.A, Q, R), ctx.s))
    return worst


def _p1_symmedian(ctx: CheckContext) -> float:
    return max(
        _angle_gap(ctx.line(v.A, v.B), ctx.line(v.A, ctx.cfg.basic.G), ctx.line(v.A, v.v.X), ctx.line(v.A, v.C))
        for v in ctx.views()
    )


def _p2_fixed(ctx: CheckContext) -> float:
    worst = 0.0
    ts = ctx.side_params()
    for v in ctx.views():
        ab, ac = ctx.line(v.A, v.B), ctx.line(v.A, v.C)
        for t in ts:
            P = K.lerp(v.B, v.C, t)
            # PQ antiparallel to AB  <=>  A, B, P, Q concyclic
            Q = K.second_intersection(K.intersect_line_circle(ac, ctx.circle(v.A, v.B, P), ctx.tol), v.A, ctx.tol, ctx.s)
            R = K.second_intersection(K.intersect_line_circle(ab, ctx.circle(v.A, v.C, P), ctx.tol), v.A, ctx.tol, ctx.s)
            worst = max(worst, K.on_circle_residual(v.v.Y, ctx.circle(v.A, Q, R), ctx.s))
    return worst


def _p2_median(ctx: CheckContext) -> float:
    worst = 0.0
    for v in ctx.views():
        worst = max(
            worst,
            K.on_line_residual(v.v.Y, ctx.line(v.A, v.M_BC), ctx.s),
            K.on_line_residual(v.M_BC, K.radical_axis(v.v.gamma1, v.v.gamma2, ctx.tol), ctx.s),
        )
    return worst


# -- second Brocard triangle and Brocard circle ----------------------------


def _t_ax_proj(ctx: CheckContext) -> float:
    O, L = ctx.cfg.basic.O, ctx.cfg.basic.L
    return max(K.coincide_residual(v.v.X, K.project(O, ctx.line(v.A, L)), ctx.s) for v in ctx.views())


def _t_brocard_circle(ctx: CheckContext) -> float:
    cfg = ctx.cfg
    c = cfg.brocard.brocard_circle
    pts = [cfg.brocard.Z1, cfg.brocard.Z2, cfg.basic.L, cfg.basic.O] + [v.X for v in cfg.vertices]
    return max(K.on_circle_residual(p, c, ctx.s) for p in pts)


def _lem_mannheim(ctx: CheckContext) -> float:
    worst = 0.0
    A, B, C = ctx.t.vertices
    for _ in range(3):
        Lp = K.lerp(B, C, ctx.draw("side"))
        Mp = K.lerp(C, A, ctx.draw("side"))
        Np = K.lerp(A, B, ctx.draw("side"))
        Kp = ctx.interior_point("K")
        A1 = K.second_intersection(K.intersect_line_circle(ctx.line(A, Kp), ctx.circle(A, Mp, Np), ctx.tol), A, ctx.tol, ctx.s)
        B1 = K.second_intersection(K.intersect_line_circle(ctx.line(B, Kp), ctx.circle(B, Np, Lp), ctx.tol), B, ctx.tol, ctx.s)
        C1 = K.second_intersection(K.intersect_line_circle(ctx.line(C, Kp), ctx.circle(C, Lp, Mp), ctx.tol), C, ctx.tol, ctx.s)
        worst = max(worst, K.concyclic_residual(A1, B1, C1, Kp, ctx.s, ctx.tol))
    return worst


def _lem_chord_mid(ctx: CheckContext) -> float:
    worst = 0.0
    b = ctx.cfg.basic
    for i in range(3):
        P = ctx.interior_point("P") if i < 2 else ctx.point_in_box("P")
        if min(P.dist(v) for v in ctx.t.vertices) < 0.05 * ctx.s or P.dist(b.O) < 0.05 * ctx.s:
            continue
        c = K.circle_on_diameter(b.O, P, ctx.tol, ctx.s)
        for V in ctx.t.vertices:
            S = K.second_intersection(K.intersect_line_circle(ctx.line(V, P), b.circumcircle, ctx.tol), V, ctx.tol, ctx.s)
            worst = max(worst, K.on_circle_residual(K.midpoint(V, S), c, ctx.s))
    return worst


def _t_parallelogram_aycm(ctx: CheckContext) -> float:
    return max(K.parallelogram_residual(v.B, v.v.Y, v.C, v.v.M, ctx.s) for v in ctx.views())


def _cor_ay_reflect(ctx: CheckContext) -> float:
    return max(K.coincide_residual(K.reflect_line(v.v.S, ctx.line(v.B, v.C)), v.v.Y, ctx.s) for v in ctx.views())


def _t_isogonal(ctx: CheckContext) -> float:
    return max(K.coincide_residual(K.isogonal_conjugate(v.v.Y, ctx.t), v.v.X, ctx.s) for v in ctx.views())


def _t_ag_ninepoint(ctx: CheckContext) -> float:
    medial = ctx.circle(ctx.cfg.M_AB, ctx.cfg.M_BC, ctx.cfg.M_CA)
    return max(K.on_circle_residual(v.v.G_mid, medial, ctx.s) for v in ctx.views())


def _t_agy_mid(ctx: CheckContext) -> float:
    return max(K.is_midpoint_residual(v.v.GY, v.A, v.v.M, ctx.s) for v in ctx.views())


def _cor_agy_parallel(ctx: CheckContext) -> float:
    return max(K.parallel_residual(ctx.line(v.v.X, v.v.GY), ctx.line(v.B, v.C)) for v in ctx.views())


def _cor_ax_reflect(ctx: CheckContext) -> float:
    return max(
        K.coincide_residual(K.reflect_line(v.v.G_mid, ctx.line(v.M_AB, v.M_CA)), v.v.X, ctx.s) for v in ctx.views()
    )


def _t_anticomplement(ctx: CheckContext) -> float:
    return max(K.coincide_residual(K.anticomplement(v.v.GY, ctx.t), v.v.Y, ctx.s) for v in ctx.views())


# -- first Brocard triangle ------------------------------------------------


def _first_triangle(ctx: CheckContext) -> tuple[Point, Point, Point]:
    return need(ctx.cfg.brocard.first_triangle)


def _t_first_brocard(ctx: CheckContext) -> float:
    c = ctx.circle(*(v.X for v in ctx.cfg.vertices))
    return max(K.on_circle_residual(z, c, ctx.s) for z in _first_triangle(ctx))


def _cor_z_sym(ctx: CheckContext) -> float:
    b, br = ctx.cfg.basic, ctx.cfg.brocard
    A, B = ctx.t.a, ctx.t.b
    sym = K.coincide_residual(K.reflect_line(br.Z1, ctx.line(b.O, b.L)), br.Z2, ctx.s)
    alpha = K.directed_angle(ctx.line(A, br.Z1), ctx.line(A, B))
    doubled = K.directed_angle(ctx.line(b.O, br.Z1), ctx.line(b.O, br.Z2))
    return max(sym, doubled.gap(alpha.scaled(2)))


def _t_owcw(ctx: CheckContext) -> float:
    O = ctx.cfg.basic.O
    return max(K.parallel_residual(ctx.line(v.v.O_W, v.v.C_W), ctx.line(O, v.Z)) for v in ctx.views())


def _lem_bwcw(ctx: CheckContext) -> float:
    return max(K.parallel_residual(ctx.line(v.v.B_W, v.v.C_W), ctx.line(v.B, v.C)) for v in ctx.views())


def _t_concur_g(ctx: CheckContext) -> float:
    G = ctx.cfg.basic.G
    zs = _first_triangle(ctx)
    return max(K.on_line_residual(G, ctx.line(v.X, z), ctx.s) for v, z in zip(ctx.cfg.vertices, zs))


def _lem_parallelogram(ctx: CheckContext) -> float:
    A, B, C = ctx.t.vertices
    worst = 0.0
    for _ in range(3):
        # apex = base_start + z * (base_end - base_start), z a random complex shape
        zr, zi = ctx.draw("shape", -1.5, 1.5), ctx.draw("shape", -1.5, 1.5)

        def apex(p: Point, q: Point) -> Point:
            d = q - p
            return Point(p.x + zr * d.x - zi * d.y, p.y + zr * d.y + zi * d.x)

        A1, B1, C1 = apex(C, B), apex(A, C), apex(B, A)
        D = K.complete_parallelogram(B, A1, C)
        worst = max(worst, K.parallelogram_residual(A, C1, D, B1, ctx.s))
    if BROCARD not in _missing(ctx.cfg, frozenset({BROCARD})):
        ZA, ZB, ZC = _first_triangle(ctx)
        ZA_r = K.reflect_line(ZA, ctx.line(B, C))
        worst = max(worst, K.parallelogram_residual(A, ZC, ZA_r, ZB, ctx.s))
    return worst


def _lem_centroid_first(ctx: CheckContext) -> float:
    ZA, ZB, ZC = _first_triangle(ctx)
    return K.coincide_residual(ctx.cfg.basic.G, (ZA + ZB + ZC) / 3.0, ctx.s)


def _lem_proj_concur(ctx: CheckContext) -> float:
    A, B, C = ctx.t.vertices
    worst = 0.0
    for _ in range(3):
        P = ctx.interior_point("P")
        Q = ctx.point_in_box("Q")
        if P.dist(Q) < 0.05 * ctx.s:
            continue
        lines = []
        for V, side in ((A, (B, C)), (B, (C, A)), (C, (A, B))):
            foot = K.project(P, K.perpendicular_through(Q, ctx.line(*side)))
            foot2 = K.project(Q, ctx.line(V, P))
            lines.append(ctx.line(foot, foot2))
        worst = max(worst, K.concurrent_residual(*lines, scale=ctx.s, tol=ctx.tol))
    return worst


# -- Hagge circle ----------------------------------------------------------


def _lem_hagge(ctx: CheckContext) -> float:
    worst = 0.0
    for _ in range(3):
        hg = hagge(ctx.t, ctx.interior_point("pivot"), ctx.cfg.basic)
        worst = max(worst, K.on_circle_residual(ctx.cfg.basic.H, hg.circle, ctx.s))
    return worst


def _lem_ratio(ctx: CheckContext) -> float:
    worst = 0.0
    circ = ctx.cfg.basic.circumcircle
    for _ in range(3):
        for v in ctx.views():
            S = ctx.interior_point("S")
            S1 = K.isogonal_conjugate(S, ctx.t)
            X = K.second_intersection(K.intersect_line_circle(ctx.line(v.A, S), circ, ctx.tol), v.A, ctx.tol, ctx.s)
            X1 = K.second_intersection(K.intersect_line_circle(ctx.line(v.A, S1), circ, ctx.tol), v.A, ctx.tol, ctx.s)
            V = K.intersect_lines(ctx.line(v.A, S1), ctx.line(v.B, v.C), ctx.tol)
            worst = max(worst, _ratio_gap(K.signed_ratio(v.A, S, S, X), K.signed_ratio(S1, V, V, X1)))
    return worst


def _lem_hagge_concur(ctx: CheckContext) -> float:
    worst = 0.0
    for _ in range(3):
        P = ctx.interior_point("pivot")
        hg = hagge(ctx.t, P, ctx.cfg.basic)
        for p2, p3 in ((hg.A2, hg.A3), (hg.B2, hg.B3), (hg.C2, hg.C3)):
            worst = max(worst, K.on_line_residual(P, ctx.line(p2, p3), ctx.s))
        anti = K.anticomplement(K.isogonal_conjugate(P, ctx.t), ctx.t)
        worst = max(worst, K.coincide_residual(hg.Hprime, anti, ctx.s))
    return worst


# -- orthocentroidal circle and the second fixed point ---------------------


def _t_ay_proj(ctx: CheckContext) -> float:
    H, G = ctx.cfg.basic.H, ctx.cfg.basic.G
    return max(K.coincide_residual(v.v.Y, K.project(H, ctx.line(v.A, G)), ctx.s) for v in ctx.views())


def _cor_orthocentroidal(ctx: CheckContext) -> float:
    b = ctx.cfg.basic
    c = K.circle_on_diameter(b.G, b.H, ctx.tol, ctx.s)
    return max(K.on_circle_residual(need(p), c, ctx.s) for v in ctx.views() for p in (v.v.Y, v.H_A))


def _cor_hagge_L(ctx: CheckContext) -> float:
    b = ctx.cfg.basic
    hc = hagge(ctx.t, b.L, b).circle
    oc = K.circle_on_diameter(b.G, b.H, ctx.tol, ctx.s)
    return max(hc.center.dist(oc.center), abs(hc.r - oc.r)) / ctx.s


def _t_x39(ctx: CheckContext) -> float:
    vs = ctx.cfg.vertices
    axis = K.radical_axis(ctx.circle(*(v.X for v in vs)), ctx.circle(*(v.Y for v in vs)), ctx.tol)
    return K.on_line_residual(ctx.cfg.brocard.X39, axis, ctx.s)


def _t_l_concur(ctx: CheckContext) -> float:
    L = ctx.cfg.basic.L
    return max(K.on_line_residual(L, ctx.line(v.v.Y, v.H_A), ctx.s) for v in ctx.views())


def _lem_lemoine_sub(ctx: CheckContext) -> float:
    feet = [need(v.H_A) for v in ctx.views()]
    sub = Triangle(*feet, tol=ctx.t.tol)
    return K.coincide_residual(ctx.cfg.basic.L, lemoine_point(sub), ctx.s)


def _t_ln_parallel(ctx: CheckContext) -> float:
    return max(K.parallel_residual(ctx.line(v.v.X, v.v.Y), ctx.line(v.v.L_N, v.M_BC)) for v in ctx.views())


def _t_tangent_boc(ctx: CheckContext) -> float:
    O = ctx.cfg.basic.O
    return max(
        K.tangent_circles_residual(ctx.circle(v.v.X, v.v.GY, v.v.L_N), ctx.circle(v.B, O, v.C), ctx.s)
        for v in ctx.views()
    )


def _t_mbc_equal(ctx: CheckContext) -> float:
    return max(K.equal_length_residual(v.M_BC, v.v.Y, v.M_BC, v.v.LX, ctx.s) for v in ctx.views())


def _cor_tangent_euler(ctx: CheckContext) -> float:
    e = ctx.cfg.basic.euler_circle
    return max(K.tangent_circles_residual(ctx.circle(v.v.Y, v.M_BC, v.v.LX), e, ctx.s) for v in ctx.views())


def _t_symmedian_ay(ctx: CheckContext) -> float:
    worst = 0.0
    for v in ctx.views():
        lhs = K.signed_ratio(v.v.L_BC, v.B, v.v.L_BC, v.C)
        rhs = -((v.v.Y.dist(v.B) / v.v.Y.dist(v.C)) ** 2)
        worst = max(worst, _ratio_gap(lhs, rhs))
    return worst


def _t_tangent_bhc(ctx: CheckContext) -> float:
    H = ctx.cfg.basic.H
    return max(
        K.tangent_circles_residual(ctx.circle(v.v.Y, v.M_BC, v.v.LX), ctx.circle(v.B, H, v.C), ctx.s)
        for v in ctx.views()
    )


def _lem_isogonal_tangent(ctx: CheckContext) -> float:
    worst = 0.0
    circ = ctx.cfg.basic.circumcircle
    for v in ctx.views():
        bisector = Line.through_direction(v.A, (v.B - v.A).unit() + (v.C - v.A).unit())
        bc = ctx.line(v.B, v.C)
        for _ in range(2):
            D = K.lerp(v.B, v.C, ctx.draw("D"))
            E = K.intersect_lines(ctx.line(v.A, K.reflect_line(D, bisector)), bc, ctx.tol)
            if D.dist(E) < 0.05 * ctx.s:
                continue
            worst = max(worst, K.tangent_circles_residual(circ, ctx.circle(v.A, D, E), ctx.s))
    return worst


def _t_primes_on_al(ctx: CheckContext) -> float:
    L = ctx.cfg.basic.L
    worst = 0.0
    for v in ctx.views():
        al = ctx.line(v.A, L)
        worst = max(worst, K.on_line_residual(need(v.v.BY_r), al, ctx.s), K.on_line_residual(need(v.v.CY_r), al, ctx.s))
    return worst


def _t_alx_mid(ctx: CheckContext) -> float:
    return max(K.is_midpoint_residual(v.v.LX, need(v.v.BY_r), need(v.v.CY_r), ctx.s) for v in ctx.views())


# -- the registry ----------------------------------------------------------

_TRI = ("A", "B", "C", "seg:A,B", "seg:B,C", "seg:C,A")

_REGISTRY: tuple[TheoremCheck, ...] = (
    TheoremCheck(
        "p1_fixed", "circle (AQR) with PQ || AB, PR || AC passes through the fixed point A_X for every P on BC",
        "USA TST 2008", "P on BC, PQ || AB, PR || AC  =>  A_X on (AQR)",
        InputSpec.SIDE_PARAMETER, _p1_fixed, figure=_TRI + ("A_X", "A_omega1", "A_omega2", "circumcircle"),
    ),
    TheoremCheck(
        "p1_symmedian", "A_X lies on the A-symmedian", "USA TST 2008", "(AB, AG) = (AX, AC) mod pi",
        InputSpec.TRIANGLE, _p1_symmedian, figure=_TRI + ("G", "L", "A_X", "seg:A,A_S"),
    ),
    TheoremCheck(
        "p2_fixed", "circle (AQR) with PQ, PR antiparallel to AB, AC passes through the fixed point A_Y",
        "ELMO Shortlist 2013", "P on BC, ABPQ and ACPR cyclic  =>  A_Y on (AQR)",
        InputSpec.SIDE_PARAMETER, _p2_fixed, figure=_TRI + ("A_Y", "A_gamma1", "A_gamma2"),
    ),
    TheoremCheck(
        "p2_median", "A_Y lies on the A-median; the radical axis of the two tangent circles bisects BC",
        "ELMO Shortlist 2013", "A_Y on AM_BC and M_BC on radical axis of gamma1, gamma2",
        InputSpec.TRIANGLE, _p2_median, figure=_TRI + ("A_Y", "M_BC", "seg:A,M_BC", "A_gamma1", "A_gamma2"),
    ),
    TheoremCheck(
        "t_ax_proj", "A_X is the projection of O on the A-symmedian", "second Brocard triangle",
        "A_X = foot of O on AL", InputSpec.TRIANGLE, _t_ax_proj,
        figure=_TRI + ("O", "L", "A_X", "A_S", "seg:A,A_S", "seg:O,A_X", "circumcircle", "A_omega1", "A_omega2"),
    ),
    TheoremCheck(
        "t_brocard_circle", "Z1, Z2, L, O, A_X, B_X, C_X lie on the circle with diameter OL", "Brocard circle",
        "Z1, Z2, L, O, A_X, B_X, C_X on circle(OL)", InputSpec.TRIANGLE, _t_brocard_circle,
        requires=frozenset({BROCARD}),
        figure=_TRI + ("O", "L", "Z1", "Z2", "A_X", "B_X", "C_X", "brocard_circle"),
    ),
    TheoremCheck(
        "lem_mannheim", "Mannheim: A', B', C', K concyclic for random L, M, N on the sides and random K",
        "Mannheim's theorem", "A' on (AMN), B' on (BNL), C' on (CLM), AA', BB', CC' through K  =>  A', B', C', K concyclic",
        InputSpec.AUXILIARY, _lem_mannheim, figure=_TRI,
    ),
    TheoremCheck(
        "lem_chord_mid", "midpoints of the chords AS, BT, CU through P lie on the circle with diameter OP",
        "chord-midpoint lemma", "AP, BP, CP meet (O) again at S, T, U  =>  midpoints of AS, BT, CU on circle(OP)",
        InputSpec.AUXILIARY, _lem_chord_mid,
        notes="the chord midpoints see OP at a right angle, so the circle checked is the one on diameter OP",
        figure=_TRI + ("O", "circumcircle"),
    ),
    TheoremCheck(
        "t_parallelogram_aycm", "B A_Y C A_M is a parallelogram", "second fixed point",
        "B + C = A_Y + A_M", InputSpec.TRIANGLE, _t_parallelogram_aycm,
        notes="A_M is taken on the full median line; for an obtuse angle at A the point A_Y lies beyond A",
        figure=_TRI + ("A_Y", "A_M", "seg:B,A_Y", "seg:A_Y,C", "seg:C,A_M", "seg:A_M,B", "circumcircle"),
    ),
    TheoremCheck(
        "cor_ay_reflect", "A_Y is the reflection of A_S in BC", "second fixed point", "A_Y = reflection of A_S in BC",
        InputSpec.TRIANGLE, _cor_ay_reflect, figure=_TRI + ("A_Y", "A_S", "seg:A_Y,A_S", "circumcircle"),
    ),
    TheoremCheck(
        "t_isogonal", "A_X is the isogonal conjugate of A_Y", "isogonal conjugation",
        "A_X = isogonal conjugate of A_Y", InputSpec.TRIANGLE, _t_isogonal,
        figure=_TRI + ("A_X", "A_Y", "seg:B,A_X", "seg:B,A_Y", "seg:C,A_X", "seg:C,A_Y"),
    ),
    TheoremCheck(
        "t_ag_ninepoint", "A_G (midpoint of A A_Y) lies on the nine-point circle", "nine-point circle",
        "A_G = mid(A, A_Y) on (M_AB M_BC M_CA)", InputSpec.TRIANGLE, _t_ag_ninepoint,
        notes="M_XY is the midpoint of segment XY throughout",
        figure=_TRI + ("A_Y", "A_G_mid", "M_BC", "M_CA", "M_AB", "euler_circle"),
    ),
    TheoremCheck(
        "t_agy_mid", "A_GY (parallelogram M_AB A_G M_CA A_GY) is the midpoint of A A_M", "parallelogram completion",
        "A_GY = M_AB - A_G + M_CA = mid(A, A_M)", InputSpec.TRIANGLE, _t_agy_mid,
        figure=_TRI + ("A_G_mid", "A_GY", "A_M", "M_AB", "M_CA", "seg:A,A_M"),
    ),
    TheoremCheck(
        "cor_agy_parallel", "A_X A_GY is parallel to BC", "parallelogram completion", "A_X A_GY || BC",
        InputSpec.TRIANGLE, _cor_agy_parallel, figure=_TRI + ("A_X", "A_GY", "seg:A_X,A_GY"),
    ),
    TheoremCheck(
        "cor_ax_reflect", "A_X is the reflection of A_G in M_AB M_CA", "parallelogram completion",
        "A_X = reflection of A_G in line M_AB M_CA", InputSpec.TRIANGLE, _cor_ax_reflect,
        figure=_TRI + ("A_X", "A_G_mid", "M_AB", "M_CA", "seg:M_AB,M_CA"),
    ),
    TheoremCheck(
        "t_anticomplement", "A_Y is the anticomplement of A_GY", "anticomplement", "A_Y = 3G - 2 A_GY",
        InputSpec.TRIANGLE, _t_anticomplement, figure=_TRI + ("G", "A_Y", "A_GY", "seg:A_Y,A_GY"),
    ),
    TheoremCheck(
        "t_first_brocard", "the first Brocard triangle is inscribed in (A_X B_X C_X)", "first Brocard triangle",
        "Z_A, Z_B, Z_C on (A_X B_X C_X)", InputSpec.TRIANGLE, _t_first_brocard, requires=frozenset({BROCARD}),
        notes="Z_A = BZ1 & CZ2 cyclically; the other pairing does not lie on the circle",
        figure=_TRI + ("Z1", "Z2", "Z_A", "Z_B", "Z_C", "A_X", "B_X", "C_X", "brocard_circle"),
    ),
    TheoremCheck(
        "cor_z_sym", "Z1, Z2 are mirror images in OL and (OZ1, OZ2) = 2 alpha", "Brocard points",
        "Z2 = reflection of Z1 in OL; (OZ1, OZ2) = 2 (AZ1, AB) mod pi", InputSpec.TRIANGLE, _cor_z_sym,
        requires=frozenset({BROCARD}), figure=_TRI + ("O", "L", "Z1", "Z2", "seg:O,L", "brocard_circle"),
    ),
    TheoremCheck(
        "t_owcw", "O_W C_W is parallel to O Z_A", "first Brocard triangle", "O_W C_W || O Z_A",
        InputSpec.TRIANGLE, _t_owcw, requires=frozenset({BROCARD}),
        notes="omega1, omega2 are read as the circles of the first fixed point at A: omega1 through A, B "
              "tangent to AC; omega2 through A, C tangent to AB. O_W = second point of line O A_X on omega1, "
              "C_W = second point of line C Z2 on omega1, B_W = second point of line B Z1 on omega2. "
              "The alternative reading (the circles gamma1, gamma2 of the second fixed point) does not contain "
              "Z1, Z2 and is rejected; the adopted reading validates",
        figure=_TRI + ("O", "A_X", "Z2", "Z_A", "A_O_W", "A_C_W", "A_omega1", "seg:A_O_W,A_C_W", "seg:O,Z_A"),
    ),
    TheoremCheck(
        "lem_bwcw", "B_W C_W is parallel to BC", "first Brocard triangle", "B_W C_W || BC",
        InputSpec.TRIANGLE, _lem_bwcw, requires=frozenset({BROCARD}),
        notes="same reading of omega1, omega2 as t_owcw",
        figure=_TRI + ("Z1", "Z2", "A_B_W", "A_C_W", "A_omega1", "A_omega2", "seg:A_B_W,A_C_W"),
    ),
    TheoremCheck(
        "t_concur_g", "A_X Z_A, B_X Z_B, C_X Z_C concur at G", "first Brocard triangle",
        "G on A_X Z_A, B_X Z_B, C_X Z_C", InputSpec.TRIANGLE, _t_concur_g, requires=frozenset({BROCARD}),
        figure=_TRI + ("G", "A_X", "B_X", "C_X", "Z_A", "Z_B", "Z_C", "seg:A_X,Z_A", "seg:B_X,Z_B", "seg:C_X,Z_C"),
    ),
    TheoremCheck(
        "lem_parallelogram", "directly similar apex triangles A'CB, B'AC, C'BA and parallelogram BA'CD give A + D = B' + C'",
        "parallelogram lemma", "BA'CD parallelogram  =>  A C' D B' parallelogram",
        InputSpec.AUXILIARY, _lem_parallelogram,
        notes="checked as A + D = B' + C' (A C' D B' a parallelogram), the form needed for the first Brocard "
              "triangle; verified on random similar apexes and on the Brocard configuration",
        figure=_TRI,
    ),
    TheoremCheck(
        "lem_centroid_first", "G is the centroid of Z_A Z_B Z_C", "first Brocard triangle",
        "G = (Z_A + Z_B + Z_C) / 3", InputSpec.TRIANGLE, _lem_centroid_first, requires=frozenset({BROCARD}),
        figure=_TRI + ("G", "Z_A", "Z_B", "Z_C", "seg:Z_A,Z_B", "seg:Z_B,Z_C", "seg:Z_C,Z_A"),
    ),
    TheoremCheck(
        "lem_proj_concur", "XX', YY', ZZ' are concurrent for random P, Q", "projection concurrency",
        "X = foot of P on the perpendicular from Q to BC, X' = foot of Q on AP (cyclically)  =>  XX', YY', ZZ' concur",
        InputSpec.AUXILIARY, _lem_proj_concur, figure=_TRI,
    ),
    TheoremCheck(
        "lem_hagge", "A_2, B_2, C_2 and H are concyclic for a random interior pivot", "Hagge circle",
        "A_2, B_2, C_2, H concyclic", InputSpec.INTERIOR_PIVOT, _lem_hagge,
        notes="A_1, B_1, C_1 are reflected in the sides BC, CA, AB; this is the reading under which A_Y is the "
              "reflection of A_S in BC and the Hagge triangle of L is A_Y B_Y C_Y",
        figure=_TRI + ("H", "circumcircle"),
    ),
    TheoremCheck(
        "lem_ratio", "signed ratio AS/SX = S'V/VX' for isogonal conjugates S, S'", "isogonal ratio lemma",
        "AS/SX = S'V/VX' (directed lengths)", InputSpec.AUXILIARY, _lem_ratio, figure=_TRI + ("circumcircle",),
    ),
    TheoremCheck(
        "lem_hagge_concur", "A_2 A_3, B_2 B_3, C_2 C_3 concur at the pivot; H' is the anticomplement of P'",
        "Hagge circle", "P on A_2A_3, B_2B_3, C_2C_3; H' = anticomplement of isogonal(P)",
        InputSpec.INTERIOR_PIVOT, _lem_hagge_concur, figure=_TRI + ("H", "circumcircle"),
    ),
    TheoremCheck(
        "t_ay_proj", "A_Y is the projection of H on the A-median", "second fixed point",
        "A_Y = foot of H on AG", InputSpec.TRIANGLE, _t_ay_proj,
        figure=_TRI + ("H", "G", "A_Y", "M_BC", "seg:A,M_BC", "seg:H,A_Y"),
    ),
    TheoremCheck(
        "cor_orthocentroidal", "A_Y B_Y C_Y and H_A H_B H_C are inscribed in the circle with diameter GH",
        "orthocentroidal circle", "A_Y, B_Y, C_Y, H_A, H_B, H_C on circle(GH)",
        InputSpec.TRIANGLE, _cor_orthocentroidal, requires=frozenset({ORTHOCENTROIDAL}),
        figure=_TRI + ("G", "H", "A_Y", "B_Y", "C_Y", "H_A", "H_B", "H_C", "orthocentroidal_circle"),
    ),
    TheoremCheck(
        "cor_hagge_L", "the Hagge circle of L is the orthocentroidal circle", "Hagge circle",
        "Hagge circle of L = circle(GH)", InputSpec.TRIANGLE, _cor_hagge_L, requires=frozenset({ORTHOCENTROIDAL}),
        figure=_TRI + ("G", "H", "L", "orthocentroidal_circle"),
    ),
    TheoremCheck(
        "t_x39", "the radical axis of (A_X B_X C_X) and (A_Y B_Y C_Y) passes X(39)", "Brocard midpoint",
        "X39 = mid(Z1, Z2) on radical axis of (A_X B_X C_X), (A_Y B_Y C_Y)", InputSpec.TRIANGLE, _t_x39,
        requires=frozenset({BROCARD, ORTHOCENTROIDAL}),
        figure=_TRI + ("Z1", "Z2", "X39", "brocard_circle", "orthocentroidal_circle"),
    ),
    TheoremCheck(
        "t_l_concur", "A_Y H_A, B_Y H_B, C_Y H_C concur at L", "orthocentroidal circle",
        "L on A_Y H_A, B_Y H_B, C_Y H_C", InputSpec.TRIANGLE, _t_l_concur, requires=frozenset({ORTHOCENTROIDAL}),
        figure=_TRI + ("L", "A_Y", "B_Y", "C_Y", "H_A", "H_B", "H_C", "seg:A_Y,H_A", "seg:B_Y,H_B", "seg:C_Y,H_C"),
    ),
    TheoremCheck(
        "lem_lemoine_sub", "L is also the Lemoine point of H_A H_B H_C", "orthocentroidal circle",
        "L = Lemoine point of H_A H_B H_C", InputSpec.TRIANGLE, _lem_lemoine_sub,
        requires=frozenset({ORTHOCENTROIDAL}), figure=_TRI + ("L", "H_A", "H_B", "H_C", "seg:H_A,H_B", "seg:H_B,H_C", "seg:H_C,H_A"),
    ),
    TheoremCheck(
        "t_ln_parallel", "the perpendicular bisector of A_X A_GY meets AL at L_N with A_X A_Y || L_N M_BC",
        "second fixed point", "A_X A_Y || L_N M_BC", InputSpec.TRIANGLE, _t_ln_parallel,
        requires=frozenset({SCALENE}),
        figure=_TRI + ("L", "A_X", "A_Y", "A_GY", "A_L_N", "M_BC", "seg:A_X,A_Y", "seg:A_L_N,M_BC"),
    ),
    TheoremCheck(
        "t_tangent_boc", "(A_X A_GY L_N) is tangent to (BOC)", "second fixed point",
        "(A_X A_GY L_N) tangent to (BOC)", InputSpec.TRIANGLE, _t_tangent_boc, requires=frozenset({SCALENE}),
        notes="internal and external tangency are both accepted",
        figure=_TRI + ("O", "A_X", "A_GY", "A_L_N"),
    ),
    TheoremCheck(
        "t_mbc_equal", "M_BC A_Y = M_BC A_LX, A_LX the foot of H on AL", "second fixed point",
        "|M_BC A_Y| = |M_BC A_LX|", InputSpec.TRIANGLE, _t_mbc_equal,
        figure=_TRI + ("H", "L", "M_BC", "A_Y", "A_LX", "seg:M_BC,A_Y", "seg:M_BC,A_LX"),
    ),
    TheoremCheck(
        "cor_tangent_euler", "(A_Y M_BC A_LX) is tangent to the nine-point circle", "nine-point circle",
        "(A_Y M_BC A_LX) tangent to the Euler circle", InputSpec.TRIANGLE, _cor_tangent_euler,
        requires=frozenset({SCALENE}), figure=_TRI + ("M_BC", "A_Y", "A_LX", "euler_circle"),
    ),
    TheoremCheck(
        "t_symmedian_ay", "A_Y L_BC is a symmedian of A_Y BC", "symmedian",
        "L_BC B / L_BC C = -(A_Y B / A_Y C)^2 (directed)", InputSpec.TRIANGLE, _t_symmedian_ay,
        figure=_TRI + ("L", "A_Y", "A_L_BC", "seg:A,A_L_BC", "seg:A_Y,A_L_BC"),
    ),
    TheoremCheck(
        "t_tangent_bhc", "(A_Y M_BC A_LX) is tangent to (BHC)", "second fixed point",
        "(A_Y M_BC A_LX) tangent to (BHC)", InputSpec.TRIANGLE, _t_tangent_bhc, requires=frozenset({SCALENE}),
        notes="internal and external tangency are both accepted",
        figure=_TRI + ("H", "M_BC", "A_Y", "A_LX"),
    ),
    TheoremCheck(
        "lem_isogonal_tangent", "for isogonal cevians AD, AE with D, E on BC, (ADE) touches (ABC)",
        "isogonal tangency lemma", "AD, AE isogonal, D, E on BC  =>  (ADE) tangent to (ABC)",
        InputSpec.AUXILIARY, _lem_isogonal_tangent, figure=_TRI + ("circumcircle",),
    ),
    TheoremCheck(
        "t_primes_on_al", "reflections of A_BY in CA and of A_CY in AB lie on AL", "symmedian",
        "A'_BY, A'_CY on AL", InputSpec.TRIANGLE, _t_primes_on_al,
        notes="A_BY, A_CY are second points of the full lines B A_Y, C A_Y on the circumcircle",
        figure=_TRI + ("L", "A_Y", "A_BY", "A_CY", "A_BY_r", "A_CY_r", "seg:A,L", "circumcircle"),
    ),
    TheoremCheck(
        "t_alx_mid", "A_LX is the midpoint of A'_BY A'_CY", "symmedian", "A_LX = mid(A'_BY, A'_CY)",
        InputSpec.TRIANGLE, _t_alx_mid, figure=_TRI + ("L", "H", "A_LX", "A_BY_r", "A_CY_r", "seg:A_BY_r,A_CY_r"),
    ),
)


def registry() -> list[TheoremCheck]:
    return list(_REGISTRY)


def get_check(check_id: str) -> TheoremCheck:
    for c in _REGISTRY:
        if c.id == check_id:
            return c
    raise KeyError(check_id)


# -- running ---------------------------------------------------------------


def _missing(cfg: Configuration, requires: frozenset[str]) -> set[str]:
    t = cfg.triangle
    out = set()
    if BROCARD in requires and (cfg.brocard.degenerate or cfg.brocard.first_triangle is None):
        out.add(BROCARD)
    if ORTHOCENTROIDAL in requires and cfg.orthocentroidal is None:
        out.add(ORTHOCENTROIDAL)
    if SCALENE in requires:
        a, b, c = t.side_lengths
        if min(abs(a - b), abs(b - c), abs(c - a)) <= t.tol.eps_rel * t.diameter:
            out.add(SCALENE)
    return out


def run_check(check: TheoremCheck, t: Triangle, rng: SplitMix64, tol: Tolerance = SUITE_TOL,
              config: Configuration | None = None,
              mutate: Callable[[Configuration], Configuration] | None = None) -> CheckReport:
    """Evaluate one registry entry on one triangle.  Never raises for a valid triangle."""
    start = time.perf_counter()
    coords = tuple(c for p in t.vertices for c in (p.x, p.y))

    def report(residual: float, status: Status, ctx: CheckContext | None = None, message: str = "") -> CheckReport:
        return CheckReport(check.id, coords, dict(ctx.sampled) if ctx else {}, residual, status,
                           time.perf_counter() - start, message)

    try:
        cfg = config if config is not None else configuration(t)
    except GeometryError as exc:
        return report(math.nan, Status.CONSTRUCTION_ERROR, message=f"{type(exc).__name__}: {exc}")
    if mutate is not None:
        cfg = mutate(cfg)
    if _missing(cfg, check.requires):
        return report(math.nan, Status.SKIPPED_DEGENERATE, message="needs " + ", ".join(sorted(_missing(cfg, check.requires))))
    ctx = CheckContext(cfg, rng, tol)
    try:
        r = float(check.run(ctx))
    except GeometryError as exc:
        status = Status.SKIPPED_DEGENERATE if cfg.degenerate else Status.CONSTRUCTION_ERROR
        return report(math.nan, status, ctx, f"{type(exc).__name__}: {exc}")
    status = Status.PASS if r < tol.eps_rel else Status.FAIL
    return report(r, status, ctx)


def random_triangle(rng: SplitMix64, min_angle_deg: float = 15.0, min_diameter: float = 0.5) -> Triangle:
    """Vertices uniform in [-1, 1]^2, rejection-sampled, then moved to circumcenter
    at the origin and scaled to circumradius 1."""
    while True:
        pts = [Point(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)) for _ in range(3)]
        try:
            t = Triangle(*pts)
        except GeometryError:
            continue
        if t.min_angle < math.radians(min_angle_deg) or t.diameter < min_diameter:
            continue
        c = K.circle_through(*t.vertices)
        r = c.r
        return Triangle(*((p - c.center) / r for p in t.vertices))


def random_triangles(seed: int, n: int) -> list[Triangle]:
    rng = SplitMix64(seed)
    return [random_triangle(rng) for _ in range(n)]


@dataclass
class CheckSummary:
    id: str
    experimental: bool
    worst_residual: float = 0.0
    worst_triangle: int = -1
    counts: dict[str, int] = field(default_factory=lambda: {s.value: 0 for s in Status})

    def to_dict(self) -> dict:
        return {
            "counts": self.counts,
            "experimental": self.experimental,
            "id": self.id,
            "passed": self.passed,
            "worst_residual": _json_float(self.worst_residual),
            "worst_triangle": self.worst_triangle,
        }

    @property
    def passed(self) -> bool:
        return self.counts[Status.FAIL.value] == 0 and self.counts[Status.CONSTRUCTION_ERROR.value] == 0


@dataclass
class SuiteReport:
    seed: int
    triangle_count: int
    tol: Tolerance
    checks: list[CheckSummary]
    failures: list[dict]
    skip_counts: dict[str, int]

    @property
    def passed(self) -> bool:
        """Gate: every non-experimental check has no FAIL or CONSTRUCTION_ERROR."""
        return all(c.passed for c in self.checks if not c.experimental)

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "seed": self.seed,
            "triangle_count": self.triangle_count,
            "eps_rel": self.tol.eps_rel,
            "degeneracy_eps": self.tol.degeneracy_eps,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
            "failures": self.failures,
            "skip_counts": self.skip_counts,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"


def run_suite(seed: int, n_triangles: int, tol: Tolerance = SUITE_TOL,
              triangles: Sequence[Triangle] | None = None,
              checks: Sequence[TheoremCheck] | None = None) -> SuiteReport:
    """Run every registry entry on ``n_triangles`` seeded random triangles
    (or on the given ``triangles``).  The result depends only on the inputs."""
    if triangles is None:
        if n_triangles < 1:
            raise InvalidSampleCount(f"need at least one triangle, got {n_triangles}")
        triangles = random_triangles(seed, n_triangles)
    elif not triangles:
        raise InvalidSampleCount("empty triangle list")
    checks = list(checks) if checks is not None else registry()
    summaries = [CheckSummary(c.id, c.experimental) for c in checks]
    failures: list[dict] = []
    for ti, t in enumerate(triangles):
        try:
            cfg = configuration(t)
        except GeometryError:
            cfg = None
        for ci, check in enumerate(checks):
            rng = SplitMix64(derive_seed(seed, ti, ci))
            rep = run_check(check, t, rng, tol, config=cfg)
            summ = summaries[ci]
            summ.counts[rep.status.value] += 1
            if rep.status in (Status.PASS, Status.FAIL) and (summ.worst_triangle < 0 or rep.residual > summ.worst_residual):
                summ.worst_residual = rep.residual
                summ.worst_triangle = ti
            if rep.status in (Status.FAIL, Status.CONSTRUCTION_ERROR):
                d = rep.to_dict()
                d["triangle_index"] = ti
                failures.append(d)
    skips = {s.id: s.counts[Status.SKIPPED_DEGENERATE.value] for s in summaries}
    return SuiteReport(seed, len(triangles), tol, summaries, failures, skips)


# -- mutation support ------------------------------------------------------


_BASIC_FIELDS = ("G", "O", "H", "N", "L")
_BROCARD_FIELDS = ("Z1", "Z2", "X39")


def mutate_point(cfg: Configuration, name: str, delta: Point) -> Configuration:
    """Return ``cfg`` with the named point moved by ``delta``.

    Names are configuration names: ``L``, ``Z1``, ``A_X``, ``B_GY``, ...
    """
    if name in _BASIC_FIELDS:
        return replace(cfg, basic=replace(cfg.basic, **{name: getattr(cfg.basic, name) + delta}))
    if name in _BROCARD_FIELDS:
        return replace(cfg, brocard=replace(cfg.brocard, **{name: getattr(cfg.brocard, name) + delta}))
    vertex, _, fname = name.partition("_")
    if vertex in VERTEX_IDS and fname:
        old = getattr(cfg.vertex(vertex), fname)
        return cfg.replace_vertex(vertex, **{fname: old + delta})
    raise KeyError(f"cannot mutate {name!r}")
