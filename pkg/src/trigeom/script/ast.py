"""Syntax tree of construction scripts.

Source positions are carried on every node but excluded from equality, so a
re-parsed pretty-printed script compares equal to the original.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union


@dataclass(frozen=True)
class Span:
    line: int
    column: int


_NOSPAN = Span(0, 0)


def _span():
    return field(default=_NOSPAN, compare=False, repr=False)


@dataclass(frozen=True)
class Num:
    value: float
    span: Span = _span()


@dataclass(frozen=True)
class Ref:
    name: str
    span: Span = _span()


@dataclass(frozen=True)
class PointLit:
    x: float
    y: float
    span: Span = _span()


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple["Expr", ...]
    span: Span = _span()


Expr = Union[Num, Ref, PointLit, Call]


@dataclass(frozen=True)
class TriangleDecl:
    names: tuple[str, str, str]
    span: Span = _span()


@dataclass(frozen=True)
class Decl:
    kind: str  # "point" | "line" | "circle"
    name: str
    expr: Expr
    span: Span = _span()


@dataclass(frozen=True)
class Assert:
    pred: str
    args: tuple[Expr, ...]
    var: Optional[str] = None  # bound by ``forall VAR in (0,1):``
    span: Span = _span()


@dataclass(frozen=True)
class Emit:
    label: str
    span: Span = _span()


Stmt = Union[TriangleDecl, Decl, Assert, Emit]


@dataclass(frozen=True)
class Script:
    statements: tuple[Stmt, ...]

    @property
    def assertions(self) -> list[Assert]:
        return [s for s in self.statements if isinstance(s, Assert)]


def _num(v: float) -> str:
    return repr(float(v))


def format_expr(e: Expr) -> str:
    if isinstance(e, Num):
        return _num(e.value)
    if isinstance(e, Ref):
        return e.name
    if isinstance(e, PointLit):
        return f"({_num(e.x)}, {_num(e.y)})"
    return f"{e.func}({', '.join(format_expr(a) for a in e.args)})"


def format_stmt(s: Stmt) -> str:
    if isinstance(s, TriangleDecl):
        return "triangle " + " ".join(s.names)
    if isinstance(s, Decl):
        return f"{s.kind} {s.name} = {format_expr(s.expr)}"
    if isinstance(s, Assert):
        body = f"assert {s.pred}({', '.join(format_expr(a) for a in s.args)})"
        return f"forall {s.var} in (0,1): {body}" if s.var else body
    return f'emit "{s.label}"'


def pretty(script: Script) -> str:
    """Canonical source text; ``parse(pretty(s)) == s``."""
    return "".join(format_stmt(s) + "\n" for s in script.statements)
