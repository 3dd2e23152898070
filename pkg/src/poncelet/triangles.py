"""Triangles inscribed in a circle and circumscribed about a parabola.

A unit circle centered at E admits such triangles exactly when it passes
through the focus (q_of(E) = 0), and then every admissible circle point is a
vertex of one.  Orthocenters land on the directrix; centroids and nine-point
centers sweep segments parallel to it; side midpoints live on the pedal curve
of the parabola with pedal point E.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.optimize import minimize_scalar

from .common_tangents import circle_parabola_intersections
from .core import (EPS_ALG, EPS_GEO, CanonicalParabola, Circle, ClosureError,
                   ConfigurationError, DegenerateError, GeometryError, Line2,
                   Point2, ValidationError, circumcenter, dist, intersect_lines)
from .joachimsthal import (chord_contact, common_tangency_residual, eval_S,
                           polar_forms, second_intersection,
                           tangents_from_point)

CLOSURE_Q_TOL = 1e-7


def q_of(e: Point2) -> float:
    """xE^2 + yE^2 - 1; zero iff the unit circle centered at E passes through
    the focus."""
    return e.x * e.x + e.y * e.y - 1.0


def _require_closing_circle(circle: Circle) -> None:
    q = q_of(circle.center)
    if abs(q) > CLOSURE_Q_TOL:
        raise ClosureError(f"unit circle must contain the focus (q={q:.3g})")


@dataclass(frozen=True)
class PonceletTriangle:
    vertices: tuple[Point2, Point2, Point2]
    contacts: tuple[Point2, ...]     # per side (AB, BC, CA); fewer when trivial
    closure_residual: float
    trivial: bool


@dataclass(frozen=True)
class TriangleCenters:
    orthocenter: Point2
    centroid: Point2
    nine_point: Point2
    circumcenter: Point2


def closure_defect(a: Point2, circle: Circle, par: CanonicalParabola) -> float:
    """S_BB*S_CC - S_BC^2 for the second intersections B, C of the tangents
    from `a`; zero exactly when the third side closes the tangent triangle.

    Cross-checked against the closed form
    -4*p*S_AA*q_of(E)*f(A,E,p) / (xA^2+yA^2)^2.
    """
    if not circle.on_circle(a):
        raise ConfigurationError("vertex must lie on the circle")
    pair = tangents_from_point(a, par)
    if pair.degenerate:
        return 0.0
    b = second_intersection(a, pair.slopes[0], circle)
    c = second_intersection(a, pair.slopes[1], circle)
    defect = polar_forms(b, c, par).tangency_residual()
    s_aa = eval_S(a, par)
    f = common_tangency_residual(a, circle, par)
    rhs = (-4.0 * par.p * s_aa * q_of(circle.center) * f
           / (a.x * a.x + a.y * a.y) ** 2)
    if abs(defect - rhs) > 1e-8 * max(1.0, abs(defect), abs(rhs)):
        raise GeometryError("closure-defect closed form disagrees with construction")
    return defect


def build_triangle(a: Point2, circle: Circle, par: CanonicalParabola) -> PonceletTriangle:
    """Triangle with vertex `a` inscribed in the circle and circumscribed
    about the parabola (requires the focus on the circle)."""
    _require_closing_circle(circle)
    if not circle.on_circle(a):
        raise ConfigurationError("vertex must lie on the circle")
    pair = tangents_from_point(a, par)
    if pair.degenerate:
        b = second_intersection(a, pair.slopes[0], circle)
        return PonceletTriangle((a, b, b), (pair.contacts[0],), 0.0, True)
    b = second_intersection(a, pair.slopes[0], circle)
    c = second_intersection(a, pair.slopes[1], circle)
    trivial = min(dist(b, a), dist(c, a)) <= EPS_GEO
    residual = abs(polar_forms(b, c, par).tangency_residual())
    contacts = (pair.contacts[0], chord_contact(b, c, par), pair.contacts[1])
    if not trivial and residual > 1e-6 * max(1.0, abs(eval_S(b, par)) * abs(eval_S(c, par))):
        raise ClosureError(f"third side fails tangency (residual {residual:.3g})")
    return PonceletTriangle((a, b, c), contacts, residual, trivial)


def _orthocenter_formula(a: Point2, e: Point2, p: float) -> Point2 | None:
    den = a.x * e.x + a.y * e.y
    if abs(den) <= EPS_ALG * max(1.0, abs(a.x * e.x), abs(a.y * e.y)):
        return None
    return Point2(-p, a.y + (a.x + p) * (e.x * a.y - a.x * e.y) / den)


def centers(a: Point2, circle: Circle, par: CanonicalParabola) -> TriangleCenters:
    """Orthocenter, centroid, nine-point center, circumcenter of the triangle
    with vertex `a` (closed forms; synthetic fallback at the formula's
    singular direction)."""
    _require_closing_circle(circle)
    e = circle.center
    p = par.p
    o = _orthocenter_formula(a, e, p)
    if o is None:
        tri = build_triangle(a, circle, par)
        if tri.trivial:
            raise ConfigurationError("center formulas singular for a trivial triangle")
        va, vb, vc = tri.vertices
        o = Point2(va.x + vb.x + vc.x - 2.0 * e.x, va.y + vb.y + vc.y - 2.0 * e.y)
    g = Point2((2.0 * e.x - p) / 3.0, (o.y + 2.0 * e.y) / 3.0)
    n = Point2((e.x - p) / 2.0, (o.y + e.y) / 2.0)
    return TriangleCenters(o, g, n, e)


@dataclass(frozen=True)
class OrthocenterRange:
    """Extreme orthocenters over the admissible arc, attained where circle and
    parabola share a tangent."""

    arc: tuple[Point2, Point2]          # arc endpoints on circle and parabola
    x_points: tuple[Point2, Point2]     # common-tangent points on the arc
    orthocenters: tuple[Point2, Point2]  # orthocenters at the two x_points

    @property
    def y_min(self) -> float:
        return min(o.y for o in self.orthocenters)

    @property
    def y_max(self) -> float:
        return max(o.y for o in self.orthocenters)


def _admissible_arc(circle: Circle, par: CanonicalParabola
                    ) -> tuple[float, float, Point2, Point2]:
    """Angular interval (t0, t1) of the circle arc lying outside the parabola,
    plus its endpoints on the parabola."""
    pts = circle_parabola_intersections(circle, par)
    if len(pts) < 2:
        raise ConfigurationError("circle and parabola must intersect")
    e = circle.center
    angles = sorted(math.atan2(q.y - e.y, q.x - e.x) for q in pts)
    best = None
    for i, t0 in enumerate(angles):
        t1 = angles[(i + 1) % len(angles)]
        if t1 <= t0:
            t1 += 2.0 * math.pi
        mid = circle.point_at((t0 + t1) / 2.0)
        s = eval_S(mid, par)
        if s > EPS_ALG and (best is None or s > best[0]):
            best = (s, t0, t1)
    if best is None:
        raise ConfigurationError("no circle arc lies outside the parabola")
    _, t0, t1 = best
    return t0, t1, circle.point_at(t0), circle.point_at(t1)


def orthocenter_range(circle: Circle, par: CanonicalParabola) -> OrthocenterRange:
    """Endpoints of the orthocenter segment swept by triangles with vertices
    on the admissible arc; requires the focus on the circle and E != F."""
    _require_closing_circle(circle)
    e = circle.center
    if dist(e, Point2(0.0, 0.0)) <= EPS_GEO:
        raise DegenerateError("orthocenter range needs E distinct from the focus")
    _, _, y0, y1 = _admissible_arc(circle, par)
    xs = []
    for y in (y0, y1):
        pair = tangents_from_point(y, par)
        xs.append(second_intersection(y, pair.slopes[0], circle))
    orthos = []
    for x in xs:
        o = _orthocenter_formula(x, e, par.p)
        if o is None:
            raise ConfigurationError("orthocenter formula singular at an arc endpoint")
        orthos.append(o)
    return OrthocenterRange((y0, y1), (xs[0], xs[1]), (orthos[0], orthos[1]))


def orthocenter_extremes_sampled(circle: Circle, par: CanonicalParabola,
                                 samples: int = 200) -> tuple[float, float]:
    """Brute-force extreme orthocenter heights over the admissible arc:
    dense sweep plus bounded local refinement."""
    _require_closing_circle(circle)
    e = circle.center
    p = par.p
    t0, t1, _, _ = _admissible_arc(circle, par)

    def height(t: float) -> float:
        a = circle.point_at(t)
        o = _orthocenter_formula(a, e, p)
        return o.y if o is not None else math.nan

    span = t1 - t0
    ts = [t0 + span * (i + 0.5) / samples for i in range(samples)]
    vals = [height(t) for t in ts]
    out = []
    for sign in (1.0, -1.0):
        i = max(range(samples), key=lambda k: sign * vals[k])
        lo = max(t0 + 1e-9, ts[max(0, i - 1)])
        hi = min(t1 - 1e-9, ts[min(samples - 1, i + 1)])
        res = minimize_scalar(lambda t: -sign * height(t),
                              bounds=(lo, hi), method="bounded",
                              options={"xatol": 1e-12})
        out.append(sign * -res.fun)
    return (min(out[1], out[0]), max(out[1], out[0]))


def triangle_from_orthocenter(o: Point2, t1: float, t2: float,
                              par: CanonicalParabola
                              ) -> tuple[PonceletTriangle, Circle]:
    """Triangle circumscribing the parabola with prescribed orthocenter `o` on
    the directrix, built from the tangents at parameters t1, t2.

    Drops perpendiculars from `o` onto each tangent; their crossings with the
    other tangent close a triangle whose circumcircle contains the focus.
    """
    p = par.p
    if abs(o.x + p) > EPS_GEO:
        raise ValidationError("orthocenter must lie on the directrix")
    if abs(t1 - t2) <= EPS_GEO:
        raise DegenerateError("tangent parameters must differ")
    if abs(t1 * t2 + 1.0) <= EPS_GEO:
        raise DegenerateError("perpendicular tangents meet on the directrix")
    l1 = par.tangent_line(t1)
    l2 = par.tangent_line(t2)
    a = Point2(p / 2.0 * (t1 * t2 - 1.0), p / 2.0 * (t1 + t2))
    s1 = Line2.from_point_direction(o, Point2(l1.a, l1.b))
    s2 = Line2.from_point_direction(o, Point2(l2.a, l2.b))
    b = intersect_lines(s1, l2)
    c = intersect_lines(s2, l1)
    if b is None or c is None:
        raise DegenerateError("perpendicular feet do not close a triangle")
    center = circumcenter(a, b, c)
    circ = Circle(center, dist(center, a))
    residual = abs(polar_forms(b, c, par).tangency_residual())
    if residual > 1e-6 * max(1.0, abs(eval_S(b, par)) * abs(eval_S(c, par))):
        raise GeometryError("constructed third side fails tangency")
    contacts = (par.point_at(t2), chord_contact(b, c, par), par.point_at(t1))
    return (PonceletTriangle((a, b, c), contacts, residual, False), circ)


# ---------------------------------------------------------------------------
# pedal curve of the parabola with pedal point E

def pedal_curve_residual(m: Point2, e: Point2, p: float) -> float:
    """Cubic form vanishing on the pedal curve (feet of perpendiculars from E
    to the tangents); side midpoints of every Poncelet polygon satisfy it."""
    x, y = m
    xe, ye = e
    return (2.0 * x ** 3 + 2.0 * x * y * y + (p - 4.0 * xe) * x * x
            - 2.0 * ye * x * y + (p - 2.0 * xe) * y * y
            + 2.0 * xe * (xe - p) * x + 2.0 * ye * (xe - p) * y
            + p * (xe * xe + ye * ye))


def pedal_point(t: float, e: Point2, p: float) -> Point2:
    """Foot of the perpendicular from E to the tangent at parameter t."""
    xe, ye = e
    w = (t * xe + ye) / (t * t + 1.0)
    return Point2(-p / 2.0 + t * w, p / 2.0 * t + w)


def pedal_self_intersection_params(e: Point2, p: float) -> list[float]:
    """Parameters where the pedal curve passes through the pedal point E;
    two distinct solutions exactly when E lies outside the parabola."""
    from .core import solve_quadratic
    roots = solve_quadratic(p, -2.0 * e.y, p + 2.0 * e.x)
    return [t for t, _ in roots]
