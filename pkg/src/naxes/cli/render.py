"""SVG figures. Everything is computed exactly; floats appear only when the
document is written. The y axis is flipped so figures read the usual way
up (SVG y = -y)."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence, Union

from ..config import ConfigError, NgonConfig, axis_via_parallels, consecutive_circles, derive, side_line, validate
from ..kernel import GeometryError, ProjLine, ProjPoint, RationalField, meet, pencil_of
from ..theorems import degenerate_five_axes

DEFAULT_PALETTE = {
    "side": "#9a9a9a",
    "axis": "#c0392b",
    "circle": "#2c6fb7",
    "vertex": "#111111",
    "B": "#2c6fb7",
    "center": "#c0392b",
    "construction": "#27ae60",
}


@dataclass
class RenderOptions:
    show_circles: bool = True
    show_axes: bool = True
    show_parallel_construction: bool = False
    viewbox: Optional[tuple[float, float, float, float]] = None  # x0, y0, x1, y1 in plane coordinates
    palette: dict = dc_field(default_factory=lambda: dict(DEFAULT_PALETTE))
    margin: float = 0.05


@dataclass
class _Figure:
    points: tuple[ProjPoint, ...]
    lines: list[ProjLine]
    Bs: list[tuple[int, ProjPoint]]
    axes: list[ProjLine]
    circles: list
    center: Optional[ProjPoint]
    Es: list[Optional[ProjPoint]]


def _figure(src: Union[NgonConfig, Sequence[ProjPoint]]) -> _Figure:
    pts = src.points if isinstance(src, NgonConfig) else tuple(src)
    if not pts or not isinstance(pts[0].field, RationalField):
        raise GeometryError("rendering requires rational field")
    n = len(pts)
    lines = [side_line(pts, i) for i in range(1, n + 1)]
    Bs = []
    for i in range(n):
        try:
            Bs.append((i + 1, meet(lines[i], lines[(i + 1) % n])))
        except GeometryError:
            continue
    try:
        validate(pts)
        d = derive(NgonConfig(pts, pts[0].field))
        axes = list(d.axes)
        Es = list(d.Es)
    except ConfigError:
        # the collinear-apex pentagon is the one invalid input we can draw
        axes = list(degenerate_five_axes(pts))
        Es = []
        for i in range(1, n + 1):
            try:
                Es.append(axis_via_parallels(pts, i)[0])
            except GeometryError:
                Es.append(None)
    pencil = pencil_of(axes)
    M = pencil.center if pencil.is_pencil and pencil.center is not None and pencil.center.is_finite else None
    return _Figure(pts, lines, Bs, axes, consecutive_circles(pts), M, Es)


def _xy(p: ProjPoint) -> tuple[float, float]:
    x, y = p.affine()
    return float(x), float(y)


def _fmt(v: float) -> str:
    return repr(float(v))


def _clip(l: ProjLine, box) -> Optional[tuple[tuple[float, float], tuple[float, float]]]:
    """Segment of l inside the box, or None."""
    u, v, w = (float(c) for c in l.coords)
    x0, y0, x1, y1 = box
    hits = []
    if v:
        for x in (x0, x1):
            y = -(u * x + w) / v
            if y0 <= y <= y1:
                hits.append((x, y))
    if u:
        for y in (y0, y1):
            x = -(v * y + w) / u
            if x0 <= x <= x1:
                hits.append((x, y))
    hits = sorted(set(hits))
    if len(hits) < 2:
        return None
    return hits[0], hits[-1]


def _auto_box(fig: _Figure, margin: float):
    xy = [_xy(p) for p in (*fig.points, *(b for _, b in fig.Bs)) if p.is_finite]
    if fig.center is not None:
        xy.append(_xy(fig.center))
    xs, ys = [p[0] for p in xy], [p[1] for p in xy]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0, 1e-9)
    pad = margin * span
    return x0 - pad, y0 - pad, x1 + pad, y1 + pad


def render_svg(src: Union[NgonConfig, Sequence[ProjPoint]], opts: Optional[RenderOptions] = None) -> str:
    opts = opts or RenderOptions()
    fig = _figure(src)
    pal = opts.palette
    box = opts.viewbox or _auto_box(fig, opts.margin)
    x0, y0, x1, y1 = box
    w, h = x1 - x0, y1 - y0
    sw = max(w, h) / 400  # stroke width
    out = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{_fmt(x0)} {_fmt(-y1)} {_fmt(w)} {_fmt(h)}" width="800" height="{int(800 * h / w)}">'
    ]

    def seg(l, cls, ident, color):
        s = _clip(l, box)
        if s is None:
            return
        (ax, ay), (bx, by) = s
        out.append(
            f'<line class="{cls}" id="{ident}" x1="{_fmt(ax)}" y1="{_fmt(-ay)}" x2="{_fmt(bx)}" y2="{_fmt(-by)}" '
            f'stroke="{color}" stroke-width="{_fmt(sw)}"/>'
        )

    def dot(p, cls, ident, color, r):
        x, y = _xy(p)
        out.append(f'<circle class="{cls}" id="{ident}" cx="{_fmt(x)}" cy="{_fmt(-y)}" r="{_fmt(r)}" fill="{color}"/>')

    for i, l in enumerate(fig.lines, 1):
        seg(l, "side", f"l{i}", pal["side"])
    if opts.show_circles:
        for i, c in enumerate(fig.circles, 1):
            cx, cy = (float(v) for v in c.center())
            r = float(c.radius_squared()) ** 0.5
            out.append(
                f'<circle class="circle" id="c{i}" cx="{_fmt(cx)}" cy="{_fmt(-cy)}" r="{_fmt(r)}" '
                f'fill="none" stroke="{pal["circle"]}" stroke-width="{_fmt(sw)}"/>'
            )
    if opts.show_axes:
        for i, g in enumerate(fig.axes, 1):
            seg(g, "axis", f"g{i}", pal["axis"])
    if opts.show_parallel_construction:
        n = len(fig.points)
        for i, e in enumerate(fig.Es, 1):
            if e is None or not e.is_finite:
                continue
            for j in (i - 1, i + 1):
                a = fig.points[(j - 1) % n]
                (ax, ay), (ex, ey) = _xy(a), _xy(e)
                out.append(
                    f'<line class="construction" x1="{_fmt(ax)}" y1="{_fmt(-ay)}" x2="{_fmt(ex)}" y2="{_fmt(-ey)}" '
                    f'stroke="{pal["construction"]}" stroke-width="{_fmt(sw)}" stroke-dasharray="{_fmt(2 * sw)}"/>'
                )
            dot(e, "E", f"E{i}", pal["construction"], 2 * sw)
    for i, b in fig.Bs:
        if b.is_finite:
            dot(b, "B", f"B{i}", pal["B"], 2 * sw)
    for i, p in enumerate(fig.points, 1):
        dot(p, "vertex", f"A{i}", pal["vertex"], 3 * sw)
    if fig.center is not None:
        dot(fig.center, "center", "M", pal["center"], 4 * sw)
    out.append("</svg>")
    return "\n".join(out) + "\n"
