"""Polar-form calculus for the canonical parabola.

For S(x, y) = y^2 - 2*p*x - p^2 the bilinear form of two points A, B is
S_AB = yA*yB - p*(xA + xB) - p^2; chords, tangency tests, and the pair of
tangents from a point all reduce to quadratics in these quantities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (EPS_ALG, EPS_GEO, CanonicalParabola, Circle,
                   ConfigurationError, InsideParabolaError, Line2, Point2,
                   solve_quadratic)


def eval_S(a: Point2, par: CanonicalParabola) -> float:
    """Value of the parabola form at a point.

    Positive in the nonconvex complement (two real tangents), zero on the
    parabola, negative inside (no real tangents).
    """
    p = par.p
    return a.y * a.y - 2.0 * p * a.x - p * p


def polar_s(a: Point2, b: Point2, par: CanonicalParabola) -> float:
    """Bilinear (polarized) form S_AB; symmetric in its two points."""
    p = par.p
    return a.y * b.y - p * (a.x + b.x) - p * p


@dataclass(frozen=True)
class PolarForms:
    s_aa: float
    s_ab: float
    s_bb: float

    def section_coeffs(self) -> tuple[float, float, float]:
        """Quadratic s_bb*k^2 + 2*s_ab*k + s_aa = 0 whose roots are the ratios
        |AT|/|TB| at which the chord AB meets the parabola."""
        return (self.s_bb, 2.0 * self.s_ab, self.s_aa)

    def tangency_residual(self) -> float:
        """Zero iff the line AB is tangent to the parabola."""
        return self.s_aa * self.s_bb - self.s_ab ** 2


def polar_forms(a: Point2, b: Point2, par: CanonicalParabola) -> PolarForms:
    return PolarForms(eval_S(a, par), polar_s(a, b, par), eval_S(b, par))


def line_tangency_residual(line: Line2, par: CanonicalParabola) -> float:
    """S_AA*S_BB - S_AB^2 for two unit-spaced points of the line."""
    d = line.direction()
    a = line.foot(Point2(0.0, 0.0))
    b = Point2(a.x + d.x, a.y + d.y)
    return polar_forms(a, b, par).tangency_residual()


@dataclass(frozen=True)
class TangentPair:
    """Tangents from a point, sorted by contact y (ties by slope, vertical last)."""

    lines: tuple[Line2, ...]
    slopes: tuple[float | None, ...]   # None for the vertical tangent
    contacts: tuple[Point2, ...]
    degenerate: bool                   # True when the point is on the parabola


def _sorted_pair(entries):
    entries.sort(key=lambda e: (e[2].y, math.inf if e[1] is None else e[1]))
    return TangentPair(lines=tuple(e[0] for e in entries),
                       slopes=tuple(e[1] for e in entries),
                       contacts=tuple(e[2] for e in entries),
                       degenerate=False)


def tangents_from_point(a: Point2, par: CanonicalParabola) -> TangentPair:
    """The (at most two) tangents to the parabola through a point.

    Slopes are computed from the stable branch of the quadratic
    (2*xA + p)*m^2 - 2*yA*m + p = 0, whose discriminant is S_AA.
    """
    p = par.p
    s_aa = eval_S(a, par)
    if s_aa < -EPS_ALG:
        raise InsideParabolaError(f"no real tangents from {a}: S={s_aa:.3g}")
    if abs(s_aa) <= EPS_ALG:
        # on the parabola: the single tangent at (the nearest point of) it
        if abs(a.y) <= EPS_GEO:
            line = Line2.vertical(-p / 2.0)
            return TangentPair((line,), (None,), (par.vertex(),), True)
        contact = Point2((a.y * a.y - p * p) / (2.0 * p), a.y)
        m = p / a.y
        return TangentPair((Line2.from_point_slope(contact, m),), (m,),
                           (contact,), True)
    lead = 2.0 * a.x + p
    if abs(lead) <= EPS_GEO:
        # one vertical tangent plus one of slope p / (2*yA)
        entries = [(Line2.vertical(a.x), None, par.vertex())]
        if abs(a.y) > EPS_GEO:
            m = p / (2.0 * a.y)
            entries.append((Line2.from_point_slope(a, m), m,
                            par.contact_for_slope(m)))
        return _sorted_pair(entries)
    sq = math.sqrt(s_aa)
    q = a.y + math.copysign(sq, a.y) if a.y != 0.0 else sq
    m1 = q / lead
    m2 = p / q
    entries = [(Line2.from_point_slope(a, m), m, par.contact_for_slope(m))
               for m in (m1, m2)]
    return _sorted_pair(entries)


def line_circle_intersections(a: Point2, slope: float | None,
                              circle: Circle) -> list[Point2]:
    """Intersections of the line through `a` (given slope; None = vertical)
    with the circle, sorted by (x, y).  Empty when the line misses."""
    xe, ye = circle.center
    r = circle.radius
    if slope is None:
        h = r * r - (a.x - xe) ** 2
        if h < 0.0:
            if h > -EPS_ALG * r * r:
                return [Point2(a.x, ye)]
            return []
        sq = math.sqrt(h)
        pts = [Point2(a.x, ye - sq), Point2(a.x, ye + sq)]
        return pts if sq > 0.0 else [pts[0]]
    m = slope
    c2 = m * m + 1.0
    c1 = -2.0 * (m * m * a.x + xe - m * (a.y - ye))
    c0 = (m * a.x - a.y + ye) ** 2 + xe * xe - r * r
    roots = solve_quadratic(c2, c1, c0)
    pts = [Point2(x, m * (x - a.x) + a.y) for x, _ in roots]
    pts.sort()
    return pts


def second_intersection(a: Point2, slope: float | None, circle: Circle) -> Point2:
    """For `a` on the circle, the other intersection of the line through `a`,
    in closed form (coincides with `a` when the line is tangent to the circle)."""
    xe, ye = circle.center
    if slope is None:
        return Point2(a.x, 2.0 * ye - a.y)
    m = slope
    xc = ((m * m - 1.0) * a.x - 2.0 * m * (a.y - ye) + 2.0 * xe) / (m * m + 1.0)
    return Point2(xc, m * (xc - a.x) + a.y)


def tangent_circle_intersections(a: Point2, slope: float | None,
                                 circle: Circle) -> list[Point2]:
    """Spec surface for line/circle intersection; see line_circle_intersections."""
    return line_circle_intersections(a, slope, circle)


def chord_contact(b: Point2, c: Point2, par: CanonicalParabola) -> Point2:
    """Tangency point of the tangent chord through b and c."""
    if abs(b.x - c.x) <= EPS_GEO * max(1.0, abs(b.y - c.y)):
        return par.vertex()
    return par.contact_for_slope((c.y - b.y) / (c.x - b.x))


def slope_cc(a: Point2, circle: Circle, par: CanonicalParabola) -> float | None:
    """Slope of the chord joining the two second intersections of the pair of
    tangents from `a` (on the circle) with the circle; None when vertical."""
    s_aa = eval_S(a, par)
    if s_aa <= 0.0:
        raise ConfigurationError("point must see two tangents (S > 0)")
    xe, ye = circle.center
    den = a.x * ye - a.y * xe
    num = (a.x * a.x + a.y * a.y) - (a.x * xe + a.y * ye)
    if abs(den) <= EPS_ALG * max(1.0, abs(num)):
        return None
    return -num / den


def common_tangency_residual(a: Point2, circle: Circle,
                             par: CanonicalParabola) -> float:
    """f(A, E, p) = p + 2*(xA-xE)*(xA*xE + yA*yE - xE^2 - yE^2 + 1).

    Together with membership of the unit circle, f = 0 marks `a` as the point
    where a common tangent of circle and parabola touches the circle (the
    vertical branch 2*xA + p = 0 is tested separately).
    """
    xe, ye = circle.center
    return par.p + 2.0 * (a.x - xe) * (a.x * xe + a.y * ye - xe * xe - ye * ye + 1.0)
