"""Common tangents of a unit circle and a canonical parabola.

The circle points touched by a common tangent satisfy either 2x + p = 0 or a
quadric H(E, p) (a hyperbola when yE != 0); eliminating y gives a quartic in
the abscissa, so there are at most four common tangents.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (EPS_ALG, EPS_GEO, CanonicalParabola, Circle, ConicMatrix,
                   ConfigurationError, DegenerateError, Line2, Point2, dist,
                   solve_cubic, solve_quartic)
from .joachimsthal import (common_tangency_residual, eval_S, second_intersection,
                           tangents_from_point)


@dataclass(frozen=True)
class CommonTangentLocus:
    kind: str                      # "hyperbola" | "parallel-line-pair" | "double-line"
    matrix: ConicMatrix
    lines: tuple[Line2, ...]       # closed-form lines for the degenerate kinds


def h_matrix(e: Point2, p: float) -> ConicMatrix:
    xe, ye = e
    u = -2.0 * xe * xe - ye * ye + 1.0
    return ConicMatrix(np.array([
        [2.0 * xe, ye, u],
        [ye, 0.0, -xe * ye],
        [u, -xe * ye, p + 2.0 * xe * (xe * xe + ye * ye - 1.0)],
    ]))


def h_conic(e: Point2, p: float) -> CommonTangentLocus:
    """The quadric carrying common-tangent points, classified by degeneration.

    det = -yE^2 * p, so the conic is a hyperbola iff yE != 0; for yE = 0 it
    splits into lines parallel to the directrix, collapsing to the double line
    x = -p/2 when E is the focus.
    """
    xe, ye = e
    mat = h_matrix(e, p)
    if abs(ye) > EPS_GEO:
        return CommonTangentLocus("hyperbola", mat, ())
    if abs(xe) > EPS_GEO:
        disc = 1.0 - 2.0 * p * xe
        if disc < 0.0:
            return CommonTangentLocus("parallel-line-pair", mat, ())
        sq = math.sqrt(disc)
        xs = sorted({(2.0 * xe * xe - 1.0 + s) / (2.0 * xe) for s in (-sq, sq)})
        return CommonTangentLocus("parallel-line-pair", mat,
                                  tuple(Line2.vertical(x) for x in xs))
    return CommonTangentLocus("double-line", mat, (Line2.vertical(-p / 2.0),))


def tangency_quartic(e: Point2, p: float) -> tuple[float, float, float, float, float]:
    """Coefficients (a, b, c, d, e) of the quartic satisfied by abscissae of
    common-tangent points on the unit circle centered at E."""
    xe, ye = e
    r2 = xe * xe + ye * ye
    a = 4.0 * r2
    b = -8.0 * xe * (2.0 * r2 - 1.0)
    c = 4.0 * (6.0 * xe ** 4 + 6.0 * xe ** 2 * ye ** 2 - 6.0 * xe ** 2
               - ye ** 2 + p * xe + 1.0)
    d = -4.0 * (2.0 * xe * xe - 1.0) * (2.0 * xe ** 3 + 2.0 * xe * ye ** 2 + p - 2.0 * xe)
    ee = 4.0 * xe * xe * (xe ** 4 + xe ** 2 * ye ** 2 - 2.0 * xe * xe - ye * ye
                          + p * xe) + (p - 2.0 * xe) ** 2
    return (a, b, c, d, ee)


def lift_common_tangent_y(x: float, e: Point2, p: float) -> float:
    """y-coordinate of the common-tangent point over abscissa x (yE != 0).

    Rejects x == xE: a tangent parallel to the axis cannot be common.
    """
    xe, ye = e
    if abs(x - xe) < EPS_GEO:
        raise DegenerateError("abscissa equals xE: tangent parallel to the axis")
    num = (-p - 2.0 * x * x * xe + 4.0 * x * xe * xe + 2.0 * x * ye * ye
           - 2.0 * x - 2.0 * xe ** 3 - 2.0 * xe * ye ** 2 + 2.0 * xe)
    return num / (2.0 * ye * (x - xe))


@dataclass(frozen=True)
class CommonTangentSet:
    points: tuple[Point2, ...]
    tangent_lines: tuple[Line2, ...]
    residuals: tuple[float, ...]           # |f(A, E, p)| per point
    both_branches: tuple[bool, ...]        # point within eps of 2x+p=0 too


def _circle_tangent_at(a: Point2, circle: Circle) -> Line2:
    n = Point2(a.x - circle.center.x, a.y - circle.center.y)
    return Line2(n.x, n.y, -(n.x * a.x + n.y * a.y))


def common_tangent_points(circle: Circle, p: float) -> CommonTangentSet:
    """All circle points touched by a tangent common to circle and parabola.

    Requires the normalized frame (unit radius).  Candidates come from the
    quartic (plus the vertical-tangent branch) and are kept only if they lie
    on the circle and satisfy |f| <= 10*EPS_ALG.
    """
    if abs(circle.radius - 1.0) > EPS_GEO:
        raise ConfigurationError("common-tangent enumeration needs a unit circle")
    e = circle.center
    par = CanonicalParabola(p)
    candidates: list[Point2] = []
    if dist(e, Point2(0.0, 0.0)) <= EPS_GEO:
        if abs(p) <= 2.0 + EPS_GEO:
            h = max(0.0, 4.0 - p * p)
            sq = math.sqrt(h) / 2.0
            candidates = [Point2(-p / 2.0, -sq), Point2(-p / 2.0, sq)]
            if sq <= EPS_GEO:
                candidates = candidates[:1]
    else:
        coeffs = tangency_quartic(e, p)
        if abs(e.y) > EPS_GEO:
            for x, _ in solve_quartic(*coeffs):
                try:
                    candidates.append(Point2(x, lift_common_tangent_y(x, e, p)))
                except DegenerateError:
                    continue
        else:
            locus = h_conic(e, p)
            for line in locus.lines:
                x = -line.c / line.a
                h = 1.0 - (x - e.x) ** 2
                if h < -EPS_GEO:
                    continue
                sq = math.sqrt(max(0.0, h))
                candidates.extend({Point2(x, e.y - sq), Point2(x, e.y + sq)})
        # vertical common tangent x = -p/2 touches the circle only when the
        # circle is tangent to that line
        if abs(abs(e.x + p / 2.0) - 1.0) <= EPS_GEO:
            candidates.append(Point2(-p / 2.0, e.y))

    points, lines, residuals, flags = [], [], [], []
    for a in candidates:
        if not circle.on_circle(a, 10.0 * EPS_GEO):
            continue
        f = common_tangency_residual(a, circle, par)
        on_vertical = abs(2.0 * a.x + p) <= EPS_GEO
        if abs(f) > 10.0 * EPS_ALG and not on_vertical:
            continue
        if any(dist(a, q) <= EPS_GEO for q in points):
            continue
        points.append(a)
        lines.append(_circle_tangent_at(a, circle))
        residuals.append(abs(f))
        flags.append(on_vertical and abs(f) <= 10.0 * EPS_ALG)
    order = sorted(range(len(points)), key=lambda i: points[i])
    return CommonTangentSet(tuple(points[i] for i in order),
                            tuple(lines[i] for i in order),
                            tuple(residuals[i] for i in order),
                            tuple(flags[i] for i in order))


def pencil_cubic(conic_a: ConicMatrix, conic_b: ConicMatrix
                 ) -> tuple[float, float, float, float]:
    """Coefficients of det(lambda*A + B) as a cubic in lambda."""
    a = conic_a.m
    b = conic_b.m
    c3 = float(np.linalg.det(a))
    c0 = float(np.linalg.det(b))
    c2 = 0.0
    c1 = 0.0
    for i in range(3):
        ma = a.copy()
        ma[:, i] = b[:, i]
        c2 += float(np.linalg.det(ma))
        mb = b.copy()
        mb[:, i] = a[:, i]
        c1 += float(np.linalg.det(mb))
    return (c3, c2, c1, c0)


def count_real_degenerate(conic_a: ConicMatrix, conic_b: ConicMatrix) -> int:
    """Number of distinct real lambda with det(lambda*A + B) = 0."""
    coeffs = pencil_cubic(conic_a, conic_b)
    scale = max(abs(c) for c in coeffs)
    if scale == 0.0:
        raise DegenerateError("identically degenerate pencil")
    return len(solve_cubic(*coeffs))


def circle_parabola_intersections(circle: Circle,
                                  par: CanonicalParabola) -> list[Point2]:
    """Real intersection points of circle and parabola, sorted by y."""
    p = par.p
    xe, ye = circle.center
    c = p * p + 2.0 * p * xe
    r2 = circle.radius ** 2
    # ((y^2 - c) / (2p))^2 + (y - yE)^2 = R^2, cleared of denominators
    roots = solve_quartic(1.0, 0.0, 4.0 * p * p - 2.0 * c, -8.0 * p * p * ye,
                          c * c + 4.0 * p * p * (ye * ye - r2))
    pts = []
    for y, _ in roots:
        cand = Point2((y * y - p * p) / (2.0 * p), y)
        if circle.on_circle(cand, 1e-6):
            pts.append(cand)
    return pts


def correspondence_partner(a: Point2, circle: Circle,
                           par: CanonicalParabola) -> Point2:
    """The matching point of the intersection/common-tangent correspondence.

    For a circle through the focus: a point of circle-and-parabola maps along
    its tangent to a common-tangent point, and a common-tangent point maps
    along its non-common tangent back to a circle-and-parabola point.
    """
    e = circle.center
    q = e.x * e.x + e.y * e.y - 1.0
    if abs(q) > 1e-7:
        raise ConfigurationError("correspondence requires the focus on the circle")
    if not circle.on_circle(a):
        raise ConfigurationError("point must lie on the circle")
    s_aa = eval_S(a, par)
    f = common_tangency_residual(a, circle, par)
    if abs(s_aa) <= math.sqrt(EPS_ALG):
        pair = tangents_from_point(Point2(a.x, a.y), par)
        slope = pair.slopes[0]
        return second_intersection(a, slope, circle)
    if abs(f) <= 1e-6 or abs(2.0 * a.x + par.p) <= EPS_GEO:
        pair = tangents_from_point(a, par)
        best = None
        for slope in pair.slopes:
            b = second_intersection(a, slope, circle)
            if best is None or dist(b, a) > dist(best, a):
                best = b
        return best
    raise ConfigurationError("point is neither on the parabola nor on a common tangent")


def kite_parallel_residual(y_point: Point2, circle: Circle,
                           par: CanonicalParabola) -> tuple[float, float]:
    """Data for the synthetic common-tangent characterization.

    From a transversal intersection point of circle and parabola, follow the
    tangent there to its second circle intersection B; let T2 be the second
    point where the circle about B through the focus meets the directrix.
    Returns (f(B, E, p), sine of the angle between T2->focus and E->B): the
    two vanish together.
    """
    pair = tangents_from_point(y_point, par)
    if not pair.degenerate:
        raise ConfigurationError("expected a point on the parabola")
    b = second_intersection(y_point, pair.slopes[0], circle)
    ell = par.directrix()
    rad = dist(b, Point2(0.0, 0.0))
    v = ell.value(b)
    h = rad * rad - v * v
    if h < 0.0:
        raise ConfigurationError("circle about B misses the directrix")
    foot = ell.foot(b)
    d = ell.direction()
    sq = math.sqrt(h)
    t_candidates = [Point2(foot.x + s * d.x, foot.y + s * d.y) for s in (-sq, sq)]
    # the projection of the contact of the tangent AB is one of them; T2 is the other
    proj_a = ell.foot(y_point)
    t2 = max(t_candidates, key=lambda t: dist(t, proj_a))
    u = Point2(-t2.x, -t2.y)                       # T2 -> focus
    w = Point2(b.x - circle.center.x, b.y - circle.center.y)  # E -> B
    nu = math.hypot(u.x, u.y)
    nw = math.hypot(w.x, w.y)
    sin_gap = abs(u.x * w.y - u.y * w.x) / (nu * nw)
    f = common_tangency_residual(b, circle, par)
    return (f, sin_gap)
