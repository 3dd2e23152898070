"""Deterministic SVG emission for scenes and constructions.

Output is plain SVG 1.1 text assembled with fixed formatting, so identical
geometry yields byte-identical files.  World coordinates are y-up; pixels are
y-down with 1 world unit = `unit` px (default 100).
"""

from __future__ import annotations

import math

from .core import CanonicalParabola, GeneralParabola, Line2, Point2

_MARGIN = 0.10         # bounding-box margin fraction
_PARABOLA_SAMPLES = 256


def _fmt(v: float) -> str:
    out = f"{v:.4f}"
    return "0.0000" if out == "-0.0000" else out


def _collect_bbox(geom: dict) -> tuple[float, float, float, float]:
    xs: list[float] = []
    ys: list[float] = []

    def add(pt):
        xs.append(float(pt[0]))
        ys.append(float(pt[1]))

    circle = geom.get("circle")
    if circle:
        cx, cy = circle["center"]
        r = circle["radius"]
        add((cx - r, cy - r))
        add((cx + r, cy + r))
    for poly in geom.get("polygons", []):
        for pt in poly:
            add(pt)
    for seg in geom.get("segments", []):
        for pt in seg:
            add(pt)
    for curve in geom.get("curves", []):
        for pt in curve:
            add(pt)
    for rec in geom.get("points", []):
        add(rec["xy"])
    par = geom.get("parabola")
    if par and "focus" in par:
        add(par["focus"])
    if par and "p" in par and not xs:
        p = float(par["p"])
        add((-p, -abs(p) * 2))
        add((abs(p) * 2, abs(p) * 2))
    if not xs:
        xs, ys = [-1.0, 1.0], [-1.0, 1.0]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    dx = max(x1 - x0, 1e-6)
    dy = max(y1 - y0, 1e-6)
    return (x0 - _MARGIN * dx, y0 - _MARGIN * dy,
            x1 + _MARGIN * dx, y1 + _MARGIN * dy)


def _parabola_polyline(par: dict, bbox) -> list[tuple[float, float]]:
    """Sample the parabola, clamping the parameter so the curve stays inside
    the (already margined) bounding box."""
    x0, y0, x1, y1 = bbox
    if "p" in par:
        p = float(par["p"])
        canon = CanonicalParabola(p)
        tmax = abs(y1 - y0) / abs(p) + 1.0
        if p > 0:
            lim = 2.0 * x1 / p + 1.0
        else:
            lim = 2.0 * x0 / p + 1.0
        if lim > 0:
            tmax = min(tmax, math.sqrt(lim) + 0.1)
        pts = []
        for k in range(_PARABOLA_SAMPLES):
            t = -tmax + 2.0 * tmax * k / (_PARABOLA_SAMPLES - 1)
            q = canon.point_at(t)
            pts.append((q.x, q.y))
        return pts
    focus = Point2(*par["focus"])
    a, b, c = par["directrix"]
    gp = GeneralParabola(focus, Line2(a, b, c))
    v = gp.directrix.value(focus)
    axis = gp.axis_direction()
    peff = abs(v)
    canon = CanonicalParabola(peff)
    diag = math.hypot(x1 - x0, y1 - y0)
    tmax = math.sqrt(2.0 * diag / peff + 1.0) + 0.1
    pts = []
    for k in range(_PARABOLA_SAMPLES):
        t = -tmax + 2.0 * tmax * k / (_PARABOLA_SAMPLES - 1)
        q = canon.point_at(t)
        pts.append((focus.x + axis.x * q.x - axis.y * q.y,
                    focus.y + axis.y * q.x + axis.x * q.y))
    return pts


def render_svg(geom: dict, unit: float = 100.0) -> str:
    """Render a geometry dict (circle, parabola, polygons, segments, lines,
    curves, labelled points) to an SVG document string."""
    bbox = _collect_bbox(geom)
    x0, y0, x1, y1 = bbox
    width = (x1 - x0) * unit
    height = (y1 - y0) * unit

    def px(pt) -> tuple[str, str]:
        return (_fmt((float(pt[0]) - x0) * unit), _fmt((y1 - float(pt[1])) * unit))

    out = []
    out.append('<?xml version="1.0" encoding="UTF-8"?>')
    out.append(f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
               f'width="{_fmt(width)}" height="{_fmt(height)}" '
               f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">')
    out.append('<rect width="100%" height="100%" fill="white"/>')

    circle = geom.get("circle")
    if circle:
        cx, cy = px(circle["center"])
        out.append(f'<circle cx="{cx}" cy="{cy}" r="{_fmt(circle["radius"] * unit)}" '
                   'fill="none" stroke="black" stroke-width="1.5"/>')

    par = geom.get("parabola")
    if par:
        pts = _parabola_polyline(par, bbox)
        coords = " ".join(f"{x},{y}" for x, y in (px(q) for q in pts))
        out.append(f'<polyline points="{coords}" fill="none" stroke="#1f4e9c" '
                   'stroke-width="1.5"/>')

    for a, b, c in geom.get("lines", []):
        line = Line2(a, b, c)
        pts = _clip_line(line, bbox)
        if pts:
            (xa, ya), (xb, yb) = (px(q) for q in pts)
            out.append(f'<line x1="{xa}" y1="{ya}" x2="{xb}" y2="{yb}" '
                       'stroke="#888888" stroke-width="1" stroke-dasharray="6,4"/>')

    for poly in geom.get("polygons", []):
        coords = " ".join(f"{x},{y}" for x, y in (px(q) for q in poly))
        out.append(f'<polygon points="{coords}" fill="none" stroke="#c02020" '
                   'stroke-width="1.5"/>')

    for seg in geom.get("segments", []):
        (xa, ya), (xb, yb) = (px(q) for q in seg)
        out.append(f'<line x1="{xa}" y1="{ya}" x2="{xb}" y2="{yb}" '
                   'stroke="#207020" stroke-width="1.2"/>')

    for curve in geom.get("curves", []):
        coords = " ".join(f"{x},{y}" for x, y in (px(q) for q in curve))
        out.append(f'<polyline points="{coords}" fill="none" stroke="#b06000" '
                   'stroke-width="1.2"/>')

    for rec in geom.get("points", []):
        x, y = px(rec["xy"])
        out.append(f'<circle cx="{x}" cy="{y}" r="3" fill="black"/>')
        label = rec.get("label")
        if label:
            out.append(f'<text x="{x}" y="{y}" dx="5" dy="-5" '
                       f'font-family="serif" font-size="14">{label}</text>')

    out.append("</svg>")
    return "\n".join(out) + "\n"


def _clip_line(line: Line2, bbox) -> list[tuple[float, float]] | None:
    x0, y0, x1, y1 = bbox
    pts = []
    for a, b, c in ((1.0, 0.0, -x0), (1.0, 0.0, -x1),
                    (0.0, 1.0, -y0), (0.0, 1.0, -y1)):
        det = line.a * b - a * line.b
        if abs(det) < 1e-12:
            continue
        x = (line.b * c - b * line.c) / det
        y = (a * line.c - line.a * c) / det
        if x0 - 1e-9 <= x <= x1 + 1e-9 and y0 - 1e-9 <= y <= y1 + 1e-9:
            pts.append((x, y))
    pts = sorted(set((round(x, 12), round(y, 12)) for x, y in pts))
    if len(pts) < 2:
        return None
    return [pts[0], pts[-1]]
