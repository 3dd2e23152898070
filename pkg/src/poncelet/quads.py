"""Quadrilaterals inscribed in a circle and circumscribed about a parabola.

Circle centered at the focus: the quadrilaterals are antiparallelograms
(crossed isosceles trapezoids) whose side chords satisfy xA + xB = -p.
Circle centered elsewhere: a quadrilateral exists exactly when the directrix
passes through the pivot L (polar of the focus meets the center-focus line),
and all diagonals then cross at L.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (EPS_ALG, EPS_GEO, CanonicalParabola, Circle,
                   ClosureError, ConfigurationError, DegenerateError,
                   GeneralParabola, GeometryError, Line2, Point2, Similarity,
                   ValidationError, circumcenter, cross2, dist, dot2,
                   intersect_lines, midpoint)
from .joachimsthal import (chord_contact, eval_S, polar_forms,
                           second_intersection, tangents_from_point)


@dataclass(frozen=True)
class PonceletQuad:
    """Quadrilateral in tangency-cycle order: sides AB, BC, CD, DA tangent."""

    vertices: tuple[Point2, Point2, Point2, Point2]
    contacts: tuple[Point2, Point2, Point2, Point2]
    diagonal_point: Point2 | None        # AC x BD; None when parallel
    diagonals_parallel: bool
    diagonal_direction: Point2 | None    # direction of the parallel diagonals
    closure_residual: float

    def sides(self) -> tuple[tuple[Point2, Point2], ...]:
        a, b, c, d = self.vertices
        return ((a, b), (b, c), (c, d), (d, a))


@dataclass(frozen=True)
class QuadDerivedPoints:
    g_side: Point2 | None        # AD x BC
    h_side: Point2 | None        # AB x CD
    g_at_infinity: bool
    h_at_infinity: bool
    anticenter: Point2
    centroid: Point2
    newton_gauss: Line2


def butterfly_partner_x(x_a: float, p: float) -> float:
    """Abscissa paired with x_a by the tangent-chord involution of a circle
    centered at the focus: chords with xA + xB = -p are tangent."""
    partner = -p - x_a
    if abs(partner) > 1.0 + EPS_GEO:
        raise ConfigurationError(f"partner abscissa {partner:.6g} leaves the unit circle")
    return partner


def _max_side_residual(vertices, par: CanonicalParabola) -> float:
    worst = 0.0
    n = len(vertices)
    for i in range(n):
        worst = max(worst, abs(polar_forms(vertices[i], vertices[(i + 1) % n],
                                           par).tangency_residual()))
    return worst


def build_butterfly(a: Point2, circle: Circle, par: CanonicalParabola) -> PonceletQuad:
    """Antiparallelogram with vertex `a` inscribed in the unit circle centered
    at the focus and circumscribed about the parabola (|p| < 2)."""
    p = par.p
    if dist(circle.center, Point2(0.0, 0.0)) > EPS_GEO or abs(circle.radius - 1.0) > EPS_GEO:
        raise ConfigurationError("butterfly needs the unit circle centered at the focus")
    if abs(p) >= 2.0:
        raise ConfigurationError("no quadrilateral: |p| must be below the diameter")
    if not circle.on_circle(a):
        raise ConfigurationError("vertex must lie on the circle")
    if eval_S(a, par) <= EPS_ALG:
        raise ConfigurationError("vertex must lie strictly outside the parabola")
    if abs(a.y) <= EPS_GEO:
        raise ConfigurationError("vertex on the axis degenerates the quadrilateral")
    xb = butterfly_partner_x(a.x, p)
    h = 1.0 - xb * xb
    yb = math.sqrt(max(0.0, h))
    if yb <= EPS_GEO:
        raise ConfigurationError("partner vertices collapse on the axis")
    b = Point2(xb, yb)
    c = Point2(a.x, -a.y)
    d = Point2(xb, -yb)
    contacts = tuple(chord_contact(u, v, par)
                     for u, v in ((a, b), (b, c), (c, d), (d, a)))
    return PonceletQuad((a, b, c, d), contacts, None, True, Point2(0.0, 1.0),
                        _max_side_residual((a, b, c, d), par))


def compass_tangents(focus: Point2, directrix: Line2,
                     a: Point2) -> list[tuple[Line2, Point2]]:
    """Ruler-and-compass tangents from `a` to the parabola (focus, directrix).

    The circle about `a` through the focus cuts the directrix in the feet
    T1, T2 of the contact points; each tangent is recovered as the locus of
    points equidistant from the focus and from T_i (the chord of the two
    radius-|aF| circles about T_i and the focus).  Returns 0, 1 or 2
    (line, contact) pairs as `a` lies inside, on, or outside the parabola.
    """
    GeneralParabola(focus, directrix)  # validates focus off the directrix
    r = dist(a, focus)
    v = directrix.value(a)
    h = r * r - v * v
    tol = EPS_GEO * max(1.0, r * r)
    if h < -tol:
        return []
    dirv = directrix.direction()
    foot = directrix.foot(a)
    if h <= tol:
        feet = [foot]
    else:
        sq = math.sqrt(h)
        feet = [Point2(foot.x - sq * dirv.x, foot.y - sq * dirv.y),
                Point2(foot.x + sq * dirv.x, foot.y + sq * dirv.y)]
    vf = directrix.value(focus)
    sgn = 1.0 if vf > 0 else -1.0
    n = Point2(sgn * directrix.a, sgn * directrix.b)
    out = []
    for t in feet:
        w = Point2(focus.x - t.x, focus.y - t.y)
        line = Line2.from_point_direction(midpoint(focus, t), Point2(-w.y, w.x))
        s = dot2(w, w) / (2.0 * dot2(n, w))
        contact = Point2(t.x + s * n.x, t.y + s * n.y)
        out.append((line, contact))
    out.sort(key=lambda lc: dot2(lc[1], dirv))
    return out


def parabola_through_chord(a: Point2, b: Point2) -> CanonicalParabola:
    """The unique parabola of the confocal family tangent to the chord ab of a
    circle centered at the focus; excludes focal and axis-parallel chords."""
    if dist(a, b) <= EPS_GEO:
        raise DegenerateError("chord endpoints coincide")
    scale = max(1.0, abs(a.x), abs(a.y), abs(b.x), abs(b.y))
    if abs(a.x - b.x) <= 1e-12 * scale:
        p = -2.0 * a.x
        if abs(p) <= EPS_GEO:
            raise DegenerateError("vertical chord through the focus")
        return CanonicalParabola(p)
    m = (b.y - a.y) / (b.x - a.x)
    if abs(m) <= 1e-12:
        raise DegenerateError("chord parallel to the axis")
    intercept = a.y - m * a.x
    if abs(intercept) <= EPS_GEO * scale:
        raise DegenerateError("chord through the focus")
    p = 2.0 * m * intercept / (m * m + 1.0)
    par = CanonicalParabola(p)
    if abs(polar_forms(a, b, par).tangency_residual()) > 1e-8 * max(1.0, scale ** 4):
        raise GeometryError("recovered parabola fails the tangency test")
    return par


def l_point(e: Point2) -> tuple[Point2, float]:
    """Pivot L (polar of the focus meets the center-focus line) and the
    directrix parameter p = -xL of the vertical directrix through it."""
    r2 = e.x * e.x + e.y * e.y
    if r2 <= EPS_GEO ** 2:
        raise DegenerateError("L is undefined when the center is the focus")
    qt = r2 - 1.0
    l = Point2(e.x * qt / r2, e.y * qt / r2)
    p = -l.x
    if abs(p) <= EPS_GEO:
        raise DegenerateError("vertical directrix through L degenerates (p = 0)")
    return (l, p)


def _second_on_circle_toward(a: Point2, target: Point2, circle: Circle) -> Point2:
    """Second intersection with the circle of the line through `a` (on the
    circle) and `target`."""
    dx, dy = target.x - a.x, target.y - a.y
    norm = math.hypot(dx, dy)
    if norm <= EPS_GEO * circle.radius:
        raise DegenerateError("chord direction undefined")
    dx, dy = dx / norm, dy / norm
    t = -2.0 * ((a.x - circle.center.x) * dx + (a.y - circle.center.y) * dy)
    return Point2(a.x + t * dx, a.y + t * dy)


def build_quad_through_L(a: Point2, circle: Circle,
                         par: CanonicalParabola) -> PonceletQuad:
    """Poncelet quadrilateral with vertex `a` for an off-focus unit circle;
    the parabola must carry the vertical directrix through the pivot L."""
    e = circle.center
    l, _ = l_point(e)
    if not circle.on_circle(a):
        raise ConfigurationError("vertex must lie on the circle")
    if eval_S(a, par) <= EPS_ALG:
        raise ConfigurationError("vertex must lie strictly outside the parabola")
    pair = tangents_from_point(a, par)
    b = second_intersection(a, pair.slopes[0], circle)
    d = second_intersection(a, pair.slopes[1], circle)
    if min(dist(b, a), dist(d, a), dist(b, d)) <= EPS_GEO:
        raise ConfigurationError("degenerate quadrilateral (tangent touches the circle)")
    gap = abs(cross2(Point2(d.x - b.x, d.y - b.y),
                     Point2(l.x - b.x, l.y - b.y))) / dist(b, d)
    if gap > 1e-6:
        raise ClosureError(f"pivot misses the chord BD by {gap:.3g}: "
                           "parabola parameter does not close quadrilaterals")
    c = _second_on_circle_toward(a, l, circle)
    vertices = (a, b, c, d)
    residual = _max_side_residual(vertices, par)
    if residual > 1e-6:
        raise ClosureError(f"side tangency fails (residual {residual:.3g})")
    contacts = tuple(chord_contact(u, v, par)
                     for u, v in ((a, b), (b, c), (c, d), (d, a)))
    diag = intersect_lines(Line2.through(a, c), Line2.through(b, d))
    return PonceletQuad(vertices, contacts, diag, False, None, residual)


def _anticenter(vertices) -> Point2:
    """Common point of the maltitudes (midpoint-to-opposite-side
    perpendiculars) of a cyclic quadrilateral."""
    a, b, c, d = vertices
    sides = [(a, b, c, d), (b, c, d, a), (c, d, a, b), (d, a, b, c)]
    malts = []
    for p1, p2, q1, q2 in sides:
        opp = Line2.through(q1, q2)
        malts.append(Line2.from_point_direction(midpoint(p1, p2),
                                                Point2(opp.a, opp.b)))
    t = intersect_lines(malts[0], malts[1])
    if t is None:
        t = intersect_lines(malts[0], malts[2])
    if t is None:
        raise DegenerateError("maltitudes do not intersect")
    for m in malts:
        if abs(m.value(t)) > 1e-6 * max(1.0, abs(t.x), abs(t.y)):
            raise GeometryError("maltitudes are not concurrent: input not cyclic?")
    return t


def quad_derived_points(q: PonceletQuad, circle: Circle,
                        par: CanonicalParabola, validate: bool = True
                        ) -> QuadDerivedPoints:
    """Opposite-side intersections, anticenter, centroid and Newton-Gauss line
    of a Poncelet quadrilateral; with `validate` the expected incidences are
    asserted."""
    a, b, c, d = q.vertices
    ab, bc = Line2.through(a, b), Line2.through(b, c)
    cd, da = Line2.through(c, d), Line2.through(d, a)
    h = intersect_lines(ab, cd)
    g = intersect_lines(da, bc)
    anticenter = _anticenter(q.vertices)
    centroid = Point2((a.x + b.x + c.x + d.x) / 4.0,
                      (a.y + b.y + c.y + d.y) / 4.0)
    m_ac, m_bd = midpoint(a, c), midpoint(b, d)
    if dist(m_ac, m_bd) <= EPS_GEO:
        newton_gauss = Line2.horizontal(m_ac.y)
    else:
        newton_gauss = Line2.through(m_ac, m_bd)
    out = QuadDerivedPoints(g, h, g is None, h is None, anticenter, centroid,
                            newton_gauss)
    if validate:
        _validate_derived(out, q, circle, par)
    return out


def _validate_derived(dp: QuadDerivedPoints, q: PonceletQuad, circle: Circle,
                      par: CanonicalParabola) -> None:
    e = circle.center
    p = par.p
    a, b, c, d = q.vertices
    tol = 1e-6
    if abs(dp.anticenter.x + p) > tol:
        raise GeometryError("anticenter misses the directrix")
    if abs(dp.centroid.x - (e.x - p) / 2.0) > tol:
        raise GeometryError("centroid misses its vertical line")
    if abs((a.y + c.y) - (b.y + d.y)) > tol:
        raise GeometryError("Newton-Gauss line is not parallel to the axis")
    if dist(e, Point2(0.0, 0.0)) <= EPS_GEO:
        for s in (dp.g_side, dp.h_side):
            if s is not None and abs(s.y) > tol * max(1.0, abs(s.x)):
                raise GeometryError("side intersections must lie on the axis")
        if dp.g_side is not None and dp.h_side is not None:
            if abs(dp.g_side.x * dp.h_side.x - 1.0) > 1e-5:
                raise GeometryError("side intersections are not circle-inverse")
        return
    if dp.g_side is None or dp.h_side is None:
        return
    ij = Line2.through(dp.h_side, dp.g_side)
    if abs(ij.value(Point2(0.0, 0.0))) > tol:
        raise GeometryError("opposite-side intersections miss the focus line")
    if abs(dot2(ij.direction(), e)) > tol * max(1.0, dist(e, Point2(0.0, 0.0))):
        raise GeometryError("side-intersection line is not orthogonal to EF")
    if q.diagonal_point is not None:
        mids = (midpoint(dp.h_side, dp.g_side),
                midpoint(dp.g_side, q.diagonal_point),
                midpoint(q.diagonal_point, dp.h_side))
        n9 = circumcenter(*mids)
        r9 = dist(n9, mids[0])
        for pt in (Point2(0.0, 0.0), dp.centroid):
            if abs(dist(pt, n9) - r9) > 1e-5 * max(1.0, r9):
                raise GeometryError("nine-point circle of the diagonal triangle "
                                    "misses the focus or the centroid")


def side_tangency_gap(p1: Point2, p2: Point2, par: GeneralParabola) -> float:
    """Signed distance from the directrix of the reflection of the focus over
    the line p1p2; zero exactly when the line is tangent to the parabola."""
    line = Line2.through(p1, p2)
    return par.directrix.value(line.reflect(par.focus))


def _require_concyclic(vertices) -> tuple[Point2, float]:
    a, b, c, d = vertices
    center = circumcenter(a, b, c)
    r = dist(center, a)
    if abs(dist(center, d) - r) > 1e-7 * max(1.0, r):
        raise ValidationError("vertices are not concyclic")
    return center, r


def inscribe_parabola_in_trapezoid(a: Point2, b: Point2, d: Point2, c: Point2
                                   ) -> tuple[GeneralParabola, Circle]:
    """Parabola inscribed in the antiparallelogram ABCD obtained from the
    isosceles trapezoid ABDC (bases AC and BD, congruent legs AB, DC).

    Focus = circumcenter; directrix = reflection of the focus across the
    trapezoid midline.
    """
    center, r = _require_concyclic((a, b, d, c))
    base_ac = Line2.through(a, c)
    base_bd = Line2.through(b, d)
    if abs(cross2(base_ac.direction(), base_bd.direction())) > 1e-7:
        raise ValidationError("AC and BD must be parallel")
    if abs(dist(a, b) - dist(c, d)) > 1e-7 * max(1.0, r):
        raise ValidationError("legs AB and CD must be congruent")
    midline = Line2.from_point_direction(midpoint(a, b), base_ac.direction())
    v = midline.value(center)
    if abs(v) <= EPS_GEO * max(1.0, r):
        raise DegenerateError("focus on the midline: parabola degenerates")
    directrix = Line2(midline.a, midline.b, midline.c + v)
    par = GeneralParabola(center, directrix)
    for p1, p2 in ((a, b), (b, c), (c, d), (d, a)):
        if abs(side_tangency_gap(p1, p2, par)) > 1e-6 * max(1.0, r):
            raise GeometryError("butterfly side fails tangency")
    return (par, Circle(center, r))


def _line_or_direction(pt: Point2 | None, other: Point2 | None,
                       fallback_dir: Point2) -> Line2:
    if pt is not None and other is not None:
        return Line2.through(pt, other)
    anchor = pt if pt is not None else other
    return Line2.from_point_direction(anchor, fallback_dir)


def inscribe_parabola_in_cyclic_quad(a: Point2, b: Point2, c: Point2,
                                     d: Point2) -> GeneralParabola:
    """The inscribed parabola of a cyclic quadrilateral, when one exists.

    Focus = (opposite-side intersection line) x (circumcenter-to-diagonal-point
    line); directrix = line through the diagonal point and the anticenter.
    Side tangency is verified, so inputs admitting no parabola are rejected.
    """
    vertices = (a, b, c, d)
    if min(dist(u, v) for i, u in enumerate(vertices)
           for v in vertices[i + 1:]) <= EPS_GEO:
        raise ValidationError("vertices must be distinct")
    center, r = _require_concyclic(vertices)
    scale = max(1.0, r)
    ac, bd = Line2.through(a, c), Line2.through(b, d)
    if abs(cross2(ac.direction(), bd.direction())) <= 1e-9:
        par, _ = inscribe_parabola_in_trapezoid(a, b, d, c)
        return par
    l = intersect_lines(ac, bd)
    ab, cd = Line2.through(a, b), Line2.through(c, d)
    da, bc = Line2.through(d, a), Line2.through(b, c)
    i = intersect_lines(ab, cd)
    j = intersect_lines(da, bc)
    if i is None and j is None:
        raise ValidationError("rectangle admits no inscribed parabola")
    ij = _line_or_direction(i, j, ab.direction() if i is None else da.direction())
    if dist(l, center) <= EPS_GEO * scale:
        raise ValidationError("diagonal point at the circumcenter: no parabola")
    el = Line2.through(center, l)
    focus = intersect_lines(ij, el)
    if focus is None:
        raise ValidationError("no focus: quadrilateral admits no inscribed parabola")
    anticenter = _anticenter(vertices)
    if dist(anticenter, l) > 1e-7 * scale:
        directrix = Line2.through(l, anticenter)
    else:
        directrix = _directrix_from_triangle(vertices, l, scale)
    try:
        par = GeneralParabola(focus, directrix)
    except DegenerateError as exc:
        raise ValidationError("quadrilateral admits no inscribed parabola") from exc
    for p1, p2 in ((a, b), (b, c), (c, d), (d, a)):
        if abs(side_tangency_gap(p1, p2, par)) > 1e-6 * scale:
            raise ValidationError("quadrilateral admits no inscribed parabola")
    return par


def _directrix_from_triangle(vertices, l: Point2, scale: float) -> Line2:
    """Directrix through the diagonal point, oriented by the orthocenter of a
    triangle cut out by three of the four side lines (it lies on the
    directrix of any inscribed parabola)."""
    a, b, c, d = vertices
    triples = [(a, b, c), (b, c, d), (c, d, a), (d, a, b)]
    for p1, p2, p3 in triples:
        try:
            e3 = circumcenter(p1, p2, p3)
        except DegenerateError:
            continue
        h3 = Point2(p1.x + p2.x + p3.x - 2.0 * e3.x,
                    p1.y + p2.y + p3.y - 2.0 * e3.y)
        if dist(h3, l) > 1e-7 * scale:
            return Line2.through(l, h3)
    raise DegenerateError("directrix direction is not determined")


def quad_with_given_diagonal_point(circle: Circle, e_target: Point2,
                                   a: Point2) -> tuple[PonceletQuad, CanonicalParabola]:
    """Butterfly on `circle` through `a` whose opposite sides meet at
    `e_target`, plus the inscribed parabola in the canonical frame (focus at
    the circle center, axis toward `e_target`, unit radius).

    `e_target` inside the circle prescribes AD x BC; outside prescribes
    AB x CD; the partner point is its inverse in the circle.
    """
    f = circle.center
    r = circle.radius
    de = dist(e_target, f)
    if de <= EPS_GEO * r:
        raise DegenerateError("target point coincides with the center")
    if abs(de - r) <= EPS_GEO * r:
        raise ValidationError("target point on the circle is not supported")
    if not circle.on_circle(a):
        raise ConfigurationError("seed vertex must lie on the circle")
    axis = Point2(e_target.x - f.x, e_target.y - f.y)
    if abs(cross2(Point2(a.x - f.x, a.y - f.y), axis)) <= EPS_GEO * r * de:
        raise DegenerateError("seed vertex on the center-target line")
    g = Point2(f.x + r * r * axis.x / (de * de), f.y + r * r * axis.y / (de * de))
    if de < r:
        b = _second_on_circle_toward(a, g, circle)
        d = _second_on_circle_toward(a, e_target, circle)
        c = _second_on_circle_toward(b, e_target, circle)
    else:
        b = _second_on_circle_toward(a, e_target, circle)
        d = _second_on_circle_toward(a, g, circle)
        c = _second_on_circle_toward(b, g, circle)
    if (abs(dist(a, b) - dist(c, d)) > 1e-7 * r
            or abs(dist(b, c) - dist(d, a)) > 1e-7 * r):
        raise GeometryError("constructed quadrilateral is not an antiparallelogram")
    theta = math.atan2(axis.y, axis.x)
    co, sn = math.cos(-theta), math.sin(-theta)
    sim = Similarity(-theta, 1.0 / r,
                     Point2(-(co * f.x - sn * f.y) / r, -(sn * f.x + co * f.y) / r))
    va, vb, vc, vd = (sim.apply(pt) for pt in (a, b, c, d))
    p_can = -(va.x + vb.x)
    if abs(p_can) <= EPS_GEO:
        raise DegenerateError("inscribed parabola degenerates (p = 0)")
    par = CanonicalParabola(p_can)
    residual = _max_side_residual((va, vb, vc, vd), par)
    if residual > 1e-6:
        raise GeometryError(f"sides fail tangency (residual {residual:.3g})")
    inv = sim.inverse()
    contacts = tuple(inv.apply(chord_contact(u, v, par))
                     for u, v in ((va, vb), (vb, vc), (vc, vd), (vd, va)))
    diag_dir_canonical = Point2(0.0, 1.0)
    cth, sth = math.cos(theta), math.sin(theta)
    diag_dir = Point2(cth * diag_dir_canonical.x - sth * diag_dir_canonical.y,
                      sth * diag_dir_canonical.x + cth * diag_dir_canonical.y)
    quad = PonceletQuad((a, b, c, d), contacts, None, True, diag_dir, residual)
    return (quad, par)
