"""Brute-force closure verification by iterating the tangent-chord map.

A step takes a circle point, draws the tangent to the parabola that does not
retrace the incoming edge, and moves to its second circle intersection.  The
iteration knows nothing about closure criteria, so agreement between detected
periods and the analytic conditions is independent evidence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (CanonicalParabola, Circle, ConfigurationError,
                   GeneralParabola, GeometryError, Line2, Point2,
                   ValidationError, dist, normalize_frame)
from .joachimsthal import eval_S, second_intersection, tangents_from_point

EPS_CLOSURE = 1e-8  # vertex-return distance counting as closed
_EPS_TRIVIAL = 1e-8


@dataclass(frozen=True)
class OrbitStep:
    vertex: Point2      # vertex reached by this edge
    tangent: Line2      # the edge's supporting tangent line
    contact: Point2     # where the edge touches the parabola


@dataclass(frozen=True)
class ClosureReport:
    n_target: int | None          # smallest n with return distance <= EPS_CLOSURE
    residual: float               # return distance at n_target, else the best seen
    steps: tuple[OrbitStep, ...]
    closed: bool                  # residual small AND orbit non-trivial
    trivial: bool                 # repeated vertices (degenerate circumscription)


def step(v: Point2, incoming_contact: Point2 | None, branch: int,
         circle: Circle, par: CanonicalParabola) -> OrbitStep:
    """One tangent-chord edge from `v` (on the circle).

    Of the tangents through `v`, the one whose contact matches
    `incoming_contact` is excluded; on the first step `branch` picks the
    tangent with the lowest (-1) or highest (+1) contact.
    """
    pair = tangents_from_point(v, par)
    entries = list(zip(pair.slopes, pair.contacts, pair.lines))
    if incoming_contact is not None:
        tol = 1e-6 * max(1.0, abs(incoming_contact.x), abs(incoming_contact.y))
        entries = [e for e in entries if dist(e[1], incoming_contact) > tol]
        if not entries:
            raise ConfigurationError("tangent chain terminates: no outgoing tangent")
        slope, contact, line = entries[0]
    else:
        slope, contact, line = entries[0] if branch < 0 else entries[-1]
    w = second_intersection(v, slope, circle)
    return OrbitStep(w, line, contact)


def detect_period(v0: Point2, branch: int, circle: Circle,
                  par: CanonicalParabola, n_max: int = 8) -> ClosureReport:
    """Iterate the tangent-chord map up to n_max edges and report the smallest
    polygon (n >= 3) returning to the start within EPS_CLOSURE."""
    if n_max > 12:
        raise ValidationError("period search is capped at n_max = 12")
    v = v0
    contact = None
    steps: list[OrbitStep] = []
    best = math.inf
    for n in range(1, n_max + 1):
        st = step(v, contact, branch, circle, par)
        steps.append(st)
        v, contact = st.vertex, st.contact
        if n < 3:
            continue
        res = dist(v, v0)
        best = min(best, res)
        if res <= EPS_CLOSURE:
            verts = [v0] + [s.vertex for s in steps[:-1]]
            trivial = any(dist(verts[i], verts[j]) <= _EPS_TRIVIAL
                          for i in range(len(verts))
                          for j in range(i + 1, len(verts)))
            return ClosureReport(n, res, tuple(steps), not trivial, trivial)
    return ClosureReport(None, best, tuple(steps), False, False)


def closure_residual_n(v0: Point2, branch: int, circle: Circle,
                       par: CanonicalParabola, n: int) -> float:
    """Return distance |V_n - V_0| after exactly n tangent-chord edges."""
    v = v0
    contact = None
    for _ in range(n):
        st = step(v, contact, branch, circle, par)
        v, contact = st.vertex, st.contact
    return dist(v, v0)


# ---------------------------------------------------------------------------
# isoperiodic families

@dataclass(frozen=True)
class ConfocalFamily:
    """All parabolas sharing a focus and an axis direction."""

    focus: Point2
    axis_angle: float = 0.0


@dataclass(frozen=True)
class PivotFamily:
    """All parabolas sharing a focus, with directrices through a pivot point."""

    focus: Point2
    pivot: Point2


@dataclass(frozen=True)
class FamilyWitness:
    param: float            # member parameter (p, or directrix angle)
    n_detected: int | None
    residual: float


@dataclass(frozen=True)
class IsoperiodicResult:
    kind: str               # "3-isoperiodic" | "4-isoperiodic" | "neither"
    witnesses: tuple[FamilyWitness, ...]


def _admissible_start(circle: Circle, par: CanonicalParabola,
                      margin: float = 1e-3, grid: int = 128) -> Point2 | None:
    best_s, best = -math.inf, None
    for k in range(grid):
        a = circle.point_at(2.0 * math.pi * (k + 0.5) / grid)
        s = eval_S(a, par)
        if s > best_s:
            best_s, best = s, a
    return best if best_s > margin else None


def _verify_members(scenes, expect_n: int | None) -> tuple[FamilyWitness, ...]:
    witnesses = []
    for param, circ, par in scenes:
        start = _admissible_start(circ, par)
        if start is None:
            continue
        report = detect_period(start, +1, circ, par, n_max=4)
        witnesses.append(FamilyWitness(param, report.n_target, report.residual))
        if expect_n is not None:
            if report.n_target != expect_n or not report.closed:
                raise GeometryError(
                    f"family member {param:.6g} fails expected {expect_n}-closure "
                    f"(residual {report.residual:.3g})")
        elif report.n_target is not None and report.closed:
            raise GeometryError(
                f"family member {param:.6g} unexpectedly closes at n={report.n_target}")
    return tuple(witnesses)


def _confocal_scenes(circle: Circle, family: ConfocalFamily, params):
    co, sn = math.cos(-family.axis_angle), math.sin(-family.axis_angle)
    ex = (circle.center.x - family.focus.x, circle.center.y - family.focus.y)
    e = Point2((co * ex[0] - sn * ex[1]) / circle.radius,
               (sn * ex[0] + co * ex[1]) / circle.radius)
    circ = Circle(e, 1.0)
    out = []
    for p in params:
        scene_par = CanonicalParabola(p)
        if _admissible_start(circ, scene_par) is not None:
            out.append((p, circ, scene_par))
    return out


def _pivot_scenes(circle: Circle, family: PivotFamily, angles):
    out = []
    for phi in angles:
        direction = Point2(math.cos(phi), math.sin(phi))
        ell = Line2.from_point_direction(family.pivot, direction)
        if abs(ell.value(family.focus)) <= 1e-9:
            continue  # directrix through the focus: degenerate member
        gp = GeneralParabola(family.focus, ell)
        _, circ, par = normalize_frame(circle, gp)
        if _admissible_start(circ, par) is not None:
            out.append((phi, circ, par))
    return out


def classify_isoperiodic(circle: Circle,
                         family: ConfocalFamily | PivotFamily,
                         members: int = 10) -> IsoperiodicResult:
    """Classify a parabola family against the circle: does it contain
    infinitely many n-Poncelet partners?  The analytic criterion is checked by
    oracle iteration on `members` sampled family members."""
    r = circle.radius
    d = dist(circle.center, family.focus)
    if isinstance(family, ConfocalFamily):
        if d <= 1e-7 * r:
            params = [u for u in _symmetric_params(members) if abs(u) < 1.9]
            scenes = _confocal_scenes(circle, family, params)
            return IsoperiodicResult("4-isoperiodic",
                                     _verify_members(scenes[:members], 4))
        if abs(d - r) <= 1e-7 * r:
            scenes = _confocal_scenes(circle, family, _symmetric_params(3 * members))
            return IsoperiodicResult("3-isoperiodic",
                                     _verify_members(scenes[:members], 3))
        scenes = _confocal_scenes(circle, family, _symmetric_params(3 * members))
        return IsoperiodicResult("neither", _verify_members(scenes[:members], None))
    if isinstance(family, PivotFamily):
        if d <= 1e-7 * r:
            raise ValidationError("pivot family needs the focus away from the center")
        fx, fy = family.focus
        ex, ey = circle.center
        l_expected = Point2(ex + r * r * (fx - ex) / (d * d),
                            ey + r * r * (fy - ey) / (d * d))
        angles = [math.pi * (k + 0.5) / (2 * members) for k in range(2 * members)]
        scenes = _pivot_scenes(circle, family, angles)
        if dist(family.pivot, l_expected) <= 1e-6 * r:
            return IsoperiodicResult("4-isoperiodic",
                                     _verify_members(scenes[:members], 4))
        return IsoperiodicResult("neither", _verify_members(scenes[:members], None))
    raise ValidationError("unknown family specification")


def _symmetric_params(count: int) -> list[float]:
    half = max(1, count // 2)
    pos = [0.25 + 1.5 * k / half for k in range(half)]
    return [v for u in pos for v in (u, -u)]
