"""Evaluate a checked script over one fixed triangle or a seeded random family."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Sequence

from trigeom import kernel as K
from trigeom.errors import GeometryError
from trigeom.kernel import Point, Tolerance, Triangle
from trigeom.rng import SplitMix64, derive_seed
from trigeom.script import ast
from trigeom.script.builtins import BUILTINS, Scope

GRID = tuple(k / 10 for k in range(1, 10))
EXTRA_DRAWS = 3
EVAL_SCHEMA = "trigeom.eval/1"


class EvalError(Exception):
    def __init__(self, message: str, span: ast.Span):
        super().__init__(f"{span.line}:{span.column}: {message}")
        self.message = message
        self.span = span


@dataclass
class AssertionResult:
    index: int
    source: str
    span: ast.Span
    max_residual: float = 0.0
    worst_triangle: Optional[int] = None
    error: Optional[EvalError] = None
    error_triangle: Optional[int] = None
    eps: float = 1e-7

    @property
    def status(self) -> str:
        if self.error is not None:
            return "ERROR"
        return "PASS" if self.max_residual <= self.eps else "FAIL"

    def to_dict(self) -> dict:
        d = {
            "index": self.index,
            "source": self.source,
            "line": self.span.line,
            "column": self.span.column,
            "max_residual": self.max_residual,
            "worst_triangle": self.worst_triangle,
            "status": self.status,
        }
        if self.error is not None:
            d["error"] = {
                "message": self.error.message,
                "line": self.error.span.line,
                "column": self.error.span.column,
                "triangle": self.error_triangle,
            }
        return d


@dataclass
class EvalReport:
    seed: int
    n_triangles: int
    eps: float
    assertions: list[AssertionResult]
    emits: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(a.status == "PASS" for a in self.assertions)

    def to_dict(self) -> dict:
        return {
            "schema": EVAL_SCHEMA,
            "seed": self.seed,
            "triangles": self.n_triangles,
            "eps": self.eps,
            "passed": self.passed,
            "emits": list(self.emits),
            "assertions": [a.to_dict() for a in self.assertions],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"


def _eval_expr(e: ast.Expr, env: dict, scope: Scope):
    if isinstance(e, ast.Num):
        return e.value
    if isinstance(e, ast.PointLit):
        return Point(e.x, e.y)
    if isinstance(e, ast.Ref):
        v = env[e.name]
        if isinstance(v, EvalError):
            raise v
        return v
    args = [_eval_expr(a, env, scope) for a in e.args]
    b = BUILTINS[e.func]
    types = tuple(_type_of(a) for a in args)
    sig = b.resolve(types)
    try:
        out = sig.impl(scope, *args)
    except (GeometryError, ZeroDivisionError, ValueError) as exc:
        raise EvalError(f"{e.func}: {exc}", e.span) from exc
    return out


def _type_of(v) -> str:
    if isinstance(v, Point):
        return "point"
    if isinstance(v, K.Line):
        return "line"
    if isinstance(v, K.Circle):
        return "circle"
    return "number"


def bind(script: ast.Script, t: Triangle, tol: Tolerance = Tolerance(1e-7)) -> dict:
    """Evaluate every declaration on ``t``; failed names map to an :class:`EvalError`."""
    scope = Scope(t, tol)
    env: dict = {}
    for st in script.statements:
        if isinstance(st, ast.TriangleDecl):
            env.update(zip(st.names, t.vertices))
        elif isinstance(st, ast.Decl):
            try:
                env[st.name] = _eval_expr(st.expr, env, scope)
            except EvalError as err:
                env[st.name] = err
    return env


def _sample_params(seed: int, tri_idx: int, assert_idx: int) -> list[float]:
    rng = SplitMix64(derive_seed(seed, tri_idx, assert_idx))
    return list(GRID) + [rng.uniform(0.05, 0.95) for _ in range(EXTRA_DRAWS)]


def evaluate(script: ast.Script, triangle: Triangle | None = None, samples: int = 200,
             tol: Tolerance = Tolerance(1e-7), seed: int = 42,
             triangles: Sequence[Triangle] | None = None) -> EvalReport:
    """Run every assertion; construction failures are reported, never raised.

    With an explicit ``triangle`` only that triangle is used, otherwise
    ``samples`` seeded random triangles.
    """
    from trigeom.theorems import random_triangles

    if triangles is None:
        triangles = [triangle] if triangle is not None else random_triangles(seed, samples)
    results = [
        AssertionResult(k, ast.format_stmt(a), a.span, eps=tol.eps_rel)
        for k, a in enumerate(script.assertions)
    ]
    for ti, t in enumerate(triangles):
        scope = Scope(t, tol)
        env = bind(script, t, tol)
        for res, a in zip(results, script.assertions):
            if res.error is not None:
                continue
            params = _sample_params(seed, ti, res.index) if a.var else [None]
            for u in params:
                local = dict(env)
                if a.var:
                    local[a.var] = u
                try:
                    args = [_eval_expr(x, local, scope) for x in a.args]
                    try:
                        r = K.residual(a.pred, args, scope.scale, tol)
                    except GeometryError as exc:
                        raise EvalError(f"{a.pred}: {exc}", a.span) from exc
                except EvalError as err:
                    res.error, res.error_triangle = err, ti
                    break
                if res.worst_triangle is None or r > res.max_residual:
                    res.max_residual, res.worst_triangle = r, ti
    emits = [s.label for s in script.statements if isinstance(s, ast.Emit)]
    return EvalReport(seed, len(triangles), tol.eps_rel, results, emits)
