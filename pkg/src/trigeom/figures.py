"""Figures: deterministic hand-written SVG, plus matplotlib PNGs and residual plots.

The SVG writer formats every coordinate with a fixed number of decimals so the
same input always produces the same bytes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union
from xml.sax.saxutils import escape

from trigeom.centers import Configuration
from trigeom.kernel import Circle, Line, Point

MARGIN = 0.05
DOT_RADIUS = 2.0


@dataclass(frozen=True)
class Dot:
    name: str
    p: Point


@dataclass(frozen=True)
class Ring:
    name: str
    c: Circle


@dataclass(frozen=True)
class Segment:
    p: Point
    q: Point


@dataclass(frozen=True)
class FullLine:
    name: str
    l: Line


Item = Union[Dot, Ring, Segment, FullLine]


def items_from_config(cfg: Configuration, names: Iterable[str]) -> list[Item]:
    """Resolve figure names (points, circles, ``seg:P,Q``) against a configuration.

    Names that are undefined for this triangle are dropped silently.
    """
    named = cfg.named()
    out: list[Item] = []
    for name in names:
        if name.startswith("seg:"):
            a, b = (named.get(n) for n in name[4:].split(","))
            if isinstance(a, Point) and isinstance(b, Point):
                out.append(Segment(a, b))
            continue
        obj = named.get(name)
        if isinstance(obj, Point):
            out.append(Dot(name, obj))
        elif isinstance(obj, Circle):
            out.append(Ring(name, obj))
    return out


def items_from_env(env: dict) -> list[Item]:
    """Figure items for every successfully evaluated script binding."""
    out: list[Item] = []
    for name, obj in env.items():
        if isinstance(obj, Point):
            out.append(Dot(name, obj))
        elif isinstance(obj, Circle):
            out.append(Ring(name, obj))
        elif isinstance(obj, Line):
            out.append(FullLine(name, obj))
    # triangle sides first so they sit under everything else
    verts = [o for o in out if isinstance(o, Dot)][:3]
    sides = [Segment(verts[i].p, verts[(i + 1) % 3].p) for i in range(3)] if len(verts) == 3 else []
    return sides + out


def _bounds(items: Sequence[Item]) -> tuple[float, float, float, float]:
    xs: list[float] = []
    ys: list[float] = []
    for it in items:
        if isinstance(it, Dot):
            xs.append(it.p.x)
            ys.append(it.p.y)
        elif isinstance(it, Segment):
            xs += [it.p.x, it.q.x]
            ys += [it.p.y, it.q.y]
        elif isinstance(it, Ring):
            r = it.c.r
            xs += [it.c.center.x - r, it.c.center.x + r]
            ys += [it.c.center.y - r, it.c.center.y + r]
    if not xs:
        return -1.0, -1.0, 1.0, 1.0
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0, 1e-9)
    # avoid a zero-height box for nearly flat content
    if x1 - x0 < 1e-9 * span or y1 - y0 < 1e-9 * span:
        cx, cy = (x0 + x1) / 2, (y0 + y1) / 2
        x0, x1, y0, y1 = cx - span / 2, cx + span / 2, cy - span / 2, cy + span / 2
    return x0, y0, x1, y1


def _clip_line(l: Line, box: tuple[float, float, float, float]) -> Optional[tuple[Point, Point]]:
    x0, y0, x1, y1 = box
    pts = []
    for x in (x0, x1):
        if abs(l.b) > 1e-15:
            y = -(l.a * x + l.c) / l.b
            if y0 - 1e-12 <= y <= y1 + 1e-12:
                pts.append(Point(x, y))
    for y in (y0, y1):
        if abs(l.a) > 1e-15:
            x = -(l.b * y + l.c) / l.a
            if x0 - 1e-12 <= x <= x1 + 1e-12:
                pts.append(Point(x, y))
    if len(pts) < 2:
        return None
    pts.sort(key=lambda p: (p.x, p.y))
    return pts[0], pts[-1]


def _f(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


def render_svg(items: Sequence[Item], title: str = "", width: int = 600) -> str:
    x0, y0, x1, y1 = _bounds(items)
    w, h = x1 - x0, y1 - y0
    x0, x1 = x0 - MARGIN * w, x1 + MARGIN * w
    y0, y1 = y0 - MARGIN * h, y1 + MARGIN * h
    k = width / (x1 - x0)
    height = max(1, round((y1 - y0) * k))

    def px(p: Point) -> tuple[str, str]:
        return _f((p.x - x0) * k), _f((y1 - p.y) * k)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
    ]
    if title:
        out.append(f"<title>{escape(title)}</title>")
    out.append('<rect width="100%" height="100%" fill="white"/>')
    labels = []
    for it in items:
        if isinstance(it, Segment):
            (ax, ay), (bx, by) = px(it.p), px(it.q)
            out.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" stroke="black" stroke-width="1"/>')
        elif isinstance(it, FullLine):
            seg = _clip_line(it.l, (x0, y0, x1, y1))
            if seg:
                (ax, ay), (bx, by) = px(seg[0]), px(seg[1])
                out.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" stroke="#2a6" '
                           f'stroke-width="0.8" stroke-dasharray="4 3"><title>{escape(it.name)}</title></line>')
        elif isinstance(it, Ring):
            cx, cy = px(it.c.center)
            if it.c.degenerate or it.c.r * k < 0.5:
                out.append(f'<circle cx="{cx}" cy="{cy}" r="{_f(DOT_RADIUS)}" fill="#c33"/>')
                labels.append((cx, cy, f"{it.name} (degenerate: point circle)", "#c33"))
            else:
                out.append(f'<circle cx="{cx}" cy="{cy}" r="{_f(it.c.r * k)}" fill="none" '
                           f'stroke="#36c" stroke-width="1"><title>{escape(it.name)}</title></circle>')
    for it in items:
        if isinstance(it, Dot):
            cx, cy = px(it.p)
            out.append(f'<circle cx="{cx}" cy="{cy}" r="{_f(DOT_RADIUS)}" fill="black"/>')
            labels.append((cx, cy, it.name, "black"))
    for cx, cy, text, color in labels:
        out.append(f'<text x="{_f(float(cx) + 4)}" y="{_f(float(cy) - 4)}" font-family="sans-serif" '
                   f'font-size="11" fill="{color}">{escape(text)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_png(items: Sequence[Item], path: str, title: str = "", width: int = 600) -> None:
    """Same picture as :func:`render_svg`, rasterised with matplotlib."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.patches
    import matplotlib.pyplot as plt

    x0, y0, x1, y1 = _bounds(items)
    w, h = x1 - x0, y1 - y0
    box = (x0 - MARGIN * w, y0 - MARGIN * h, x1 + MARGIN * w, y1 + MARGIN * h)
    fig, ax = plt.subplots(figsize=(width / 100, width / 100 * (box[3] - box[1]) / (box[2] - box[0])), dpi=100)
    for it in items:
        if isinstance(it, Segment):
            ax.plot([it.p.x, it.q.x], [it.p.y, it.q.y], color="black", lw=1)
        elif isinstance(it, FullLine):
            seg = _clip_line(it.l, box)
            if seg:
                ax.plot([seg[0].x, seg[1].x], [seg[0].y, seg[1].y], color="#2a6", lw=0.8, ls="--")
        elif isinstance(it, Ring):
            if it.c.degenerate:
                ax.plot([it.c.center.x], [it.c.center.y], "o", color="#c33", ms=4)
                ax.annotate(f"{it.name} (degenerate: point circle)", (it.c.center.x, it.c.center.y), color="#c33",
                            fontsize=8, xytext=(4, 4), textcoords="offset points")
            else:
                ax.add_patch(matplotlib.patches.Circle((it.c.center.x, it.c.center.y), it.c.r,
                                                       fill=False, color="#36c", lw=1))
        elif isinstance(it, Dot):
            ax.plot([it.p.x], [it.p.y], "o", color="black", ms=3)
            ax.annotate(it.name, (it.p.x, it.p.y), fontsize=8, xytext=(4, 4), textcoords="offset points")
    ax.set_xlim(box[0], box[2])
    ax.set_ylim(box[1], box[3])
    ax.set_aspect("equal")
    ax.set_axis_off()
    if title:
        ax.set_title(title, fontsize=9)
    fig.savefig(path, metadata={"Software": None})
    plt.close(fig)


def plot_residuals(summaries: Sequence[dict], eps: float, path: str) -> None:
    """Bar chart of the worst residual per check on a log scale, with the gate line."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ids = [s["id"] for s in summaries]
    vals = []
    for s in summaries:
        v = s["worst_residual"]
        v = float(v) if not isinstance(v, str) else math.inf
        vals.append(max(v, 1e-18) if math.isfinite(v) else 1.0)
    colors = ["#3a7" if s["passed"] else "#c33" for s in summaries]
    fig, ax = plt.subplots(figsize=(10, 0.22 * len(ids) + 1.2), dpi=100)
    ax.barh(range(len(ids)), vals, color=colors)
    ax.set_yticks(range(len(ids)), ids, fontsize=7)
    ax.invert_yaxis()
    ax.set_xscale("log")
    ax.axvline(eps, color="black", ls="--", lw=0.8, label=f"eps = {eps:g}")
    ax.set_xlabel("worst scale-normalized residual")
    ax.legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, metadata={"Software": None})
    plt.close(fig)
