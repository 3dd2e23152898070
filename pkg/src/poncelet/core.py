"""Geometric primitives, frame normalization, and robust low-degree root solvers.

Everything downstream works in the canonical frame: focus of the parabola at
the origin, axis of symmetry along x, and (after `normalize_frame`) a unit
circle.  All comparisons use the two module tolerances below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

EPS_ALG = 1e-9   # algebraic identities
EPS_GEO = 1e-8   # constructed-point coincidence
DEGREE_EPS = 1e-12  # |leading coeff| below DEGREE_EPS * max|coeff| counts as zero


class GeometryError(Exception):
    """Base class for geometric failures."""


class DegenerateError(GeometryError):
    """Degenerate input (parabola, pencil, coincident points, ...)."""


class IndeterminateEquationError(GeometryError):
    """All polynomial coefficients vanish."""


class InsideParabolaError(GeometryError):
    """Point lies in the convex complement: no real tangents exist."""


class ClosureError(GeometryError):
    """The closure condition for the requested polygon is not satisfied."""


class ConfigurationError(GeometryError):
    """Scene does not admit the requested construction."""


class ValidationError(GeometryError):
    """Input fails a structural precondition."""


class Point2(NamedTuple):
    x: float
    y: float


ORIGIN = Point2(0.0, 0.0)


def dist(p: Point2, q: Point2) -> float:
    return math.hypot(p.x - q.x, p.y - q.y)


def midpoint(p: Point2, q: Point2) -> Point2:
    return Point2((p.x + q.x) / 2.0, (p.y + q.y) / 2.0)


def dot2(p: Point2, q: Point2) -> float:
    return p.x * q.x + p.y * q.y


def cross2(p: Point2, q: Point2) -> float:
    return p.x * q.y - p.y * q.x


def circumcenter(a: Point2, b: Point2, c: Point2) -> Point2:
    d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y))
    if abs(d) < 1e-14 * max(1.0, dist(a, b) * dist(b, c)):
        raise DegenerateError("collinear points have no circumcenter")
    a2, b2, c2 = dot2(a, a), dot2(b, b), dot2(c, c)
    ux = (a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d
    uy = (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d
    return Point2(ux, uy)


@dataclass(frozen=True)
class Line2:
    """Line a*x + b*y + c = 0, stored with a^2 + b^2 = 1 and the first
    nonzero of (a, b) positive, so `value` is a signed distance."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        n = math.hypot(self.a, self.b)
        if n < 1e-300:
            raise DegenerateError("line requires (a, b) != (0, 0)")
        a, b, c = self.a / n, self.b / n, self.c / n
        if a < -1e-14 or (abs(a) <= 1e-14 and b < 0.0):
            a, b, c = -a, -b, -c
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @classmethod
    def through(cls, p: Point2, q: Point2) -> "Line2":
        if dist(p, q) < 1e-300:
            raise DegenerateError("coincident points do not span a line")
        return cls(p.y - q.y, q.x - p.x, p.x * q.y - q.x * p.y)

    @classmethod
    def vertical(cls, x0: float) -> "Line2":
        return cls(1.0, 0.0, -x0)

    @classmethod
    def horizontal(cls, y0: float) -> "Line2":
        return cls(0.0, 1.0, -y0)

    @classmethod
    def from_point_slope(cls, p: Point2, m: float) -> "Line2":
        return cls(m, -1.0, p.y - m * p.x)

    @classmethod
    def from_point_direction(cls, p: Point2, d: Point2) -> "Line2":
        return cls(-d.y, d.x, d.y * p.x - d.x * p.y)

    def value(self, p: Point2) -> float:
        """Signed distance of p from the line."""
        return self.a * p.x + self.b * p.y + self.c

    def direction(self) -> Point2:
        return Point2(-self.b, self.a)

    def foot(self, p: Point2) -> Point2:
        v = self.value(p)
        return Point2(p.x - v * self.a, p.y - v * self.b)

    def reflect(self, p: Point2) -> Point2:
        v = self.value(p)
        return Point2(p.x - 2.0 * v * self.a, p.y - 2.0 * v * self.b)

    def is_vertical(self, tol: float = 1e-12) -> bool:
        return abs(self.b) <= tol

    def slope(self) -> float | None:
        """Slope, or None for a vertical line."""
        if self.is_vertical():
            return None
        return -self.a / self.b


def intersect_lines(l1: Line2, l2: Line2) -> Point2 | None:
    """Intersection point, or None when (nearly) parallel."""
    det = l1.a * l2.b - l2.a * l1.b
    if abs(det) < 1e-12:
        return None
    x = (l1.b * l2.c - l2.b * l1.c) / det
    y = (l2.a * l1.c - l1.a * l2.c) / det
    return Point2(x, y)


@dataclass(frozen=True)
class Circle:
    center: Point2
    radius: float

    def __post_init__(self):
        if not (self.radius > 0.0) or not math.isfinite(self.radius):
            raise ValidationError("circle radius must be positive and finite")

    def point_at(self, theta: float) -> Point2:
        return Point2(self.center.x + self.radius * math.cos(theta),
                      self.center.y + self.radius * math.sin(theta))

    def on_circle(self, p: Point2, tol: float = EPS_GEO) -> bool:
        return abs(dist(p, self.center) - self.radius) <= tol * max(1.0, self.radius)


@dataclass(frozen=True)
class CanonicalParabola:
    """y^2 = 2*p*x + p^2: focus at the origin, directrix x = -p, axis = x-axis.

    Opens toward +x for p > 0 and toward -x for p < 0.
    """

    p: float

    def __post_init__(self):
        if self.p == 0.0 or not math.isfinite(self.p):
            raise ValidationError("parabola parameter p must be nonzero and finite")

    def directrix(self) -> Line2:
        return Line2.vertical(-self.p)

    def vertex(self) -> Point2:
        return Point2(-self.p / 2.0, 0.0)

    def point_at(self, t: float) -> Point2:
        return Point2(self.p / 2.0 * (t * t - 1.0), self.p * t)

    def contact_for_slope(self, m: float) -> Point2:
        """Tangency point of the (unique) tangent with slope m != 0."""
        yc = self.p / m
        return Point2((yc * yc - self.p * self.p) / (2.0 * self.p), yc)

    def tangent_line(self, t: float) -> Line2:
        """Tangent at point_at(t); t = 0 gives the vertical vertex tangent."""
        return Line2(1.0, -t, self.p / 2.0 * (t * t + 1.0))


@dataclass(frozen=True)
class GeneralParabola:
    """Parabola given by focus and directrix (any position and orientation)."""

    focus: Point2
    directrix: Line2

    def __post_init__(self):
        if abs(self.directrix.value(self.focus)) < 1e-12:
            raise DegenerateError("focus lies on the directrix")

    def axis_direction(self) -> Point2:
        """Unit vector from the directrix toward the focus (opening direction)."""
        v = self.directrix.value(self.focus)
        s = 1.0 if v > 0 else -1.0
        return Point2(s * self.directrix.a, s * self.directrix.b)

    def gap(self, p: Point2) -> float:
        """|pF|^2 - dist(p, directrix)^2; zero exactly on the parabola."""
        return dist(p, self.focus) ** 2 - self.directrix.value(p) ** 2


@dataclass(frozen=True, eq=False)
class ConicMatrix:
    """3x3 symmetric matrix of a*x^2 + 2*b*x*y + c*y^2 + 2*d*x + 2*e*y + f = 0."""

    m: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.m, dtype=float)
        if m.shape != (3, 3):
            raise ValidationError("conic matrix must be 3x3")
        object.__setattr__(self, "m", (m + m.T) / 2.0)

    @classmethod
    def from_coeffs(cls, a, b, c, d, e, f) -> "ConicMatrix":
        return cls(np.array([[a, b, d], [b, c, e], [d, e, f]], dtype=float))

    @classmethod
    def from_circle(cls, circle: Circle) -> "ConicMatrix":
        xe, ye = circle.center
        return cls.from_coeffs(1.0, 0.0, 1.0, -xe, -ye,
                               xe * xe + ye * ye - circle.radius ** 2)

    @classmethod
    def from_parabola(cls, par: CanonicalParabola) -> "ConicMatrix":
        p = par.p
        return cls.from_coeffs(0.0, 0.0, 1.0, -p, 0.0, -p * p)

    @classmethod
    def circle_through_focus(cls, center: Point2) -> "ConicMatrix":
        """x^2 + y^2 - 2*(x*xE + y*yE) = 0: circle centered at E through the origin."""
        return cls.from_coeffs(1.0, 0.0, 1.0, -center.x, -center.y, 0.0)

    def value(self, p: Point2) -> float:
        v = np.array([p.x, p.y, 1.0])
        return float(v @ self.m @ v)


@dataclass(frozen=True)
class Similarity:
    """z -> scale * R(angle) * z + translation (orientation preserving)."""

    angle: float
    scale: float
    translation: Point2

    def __post_init__(self):
        if not (self.scale > 0.0):
            raise ValidationError("similarity scale must be positive")

    @classmethod
    def identity(cls) -> "Similarity":
        return cls(0.0, 1.0, ORIGIN)

    def apply(self, p: Point2) -> Point2:
        c, s = math.cos(self.angle), math.sin(self.angle)
        return Point2(self.scale * (c * p.x - s * p.y) + self.translation.x,
                      self.scale * (s * p.x + c * p.y) + self.translation.y)

    def inverse(self) -> "Similarity":
        c, s = math.cos(-self.angle), math.sin(-self.angle)
        k = 1.0 / self.scale
        tx, ty = self.translation
        return Similarity(-self.angle, k,
                          Point2(-k * (c * tx - s * ty), -k * (s * tx + c * ty)))


def normalize_frame(circle: Circle,
                    parabola: GeneralParabola | CanonicalParabola,
                    ) -> tuple[Similarity, Circle, CanonicalParabola]:
    """Map a scene to the canonical frame: focus -> origin, axis -> +x, radius -> 1.

    A canonical input keeps the sign of p (pure rescale); a general parabola
    comes out with p > 0 (opening rotated onto +x).
    """
    s = 1.0 / circle.radius
    if isinstance(parabola, CanonicalParabola):
        sim = Similarity(0.0, s, ORIGIN)
        return (sim,
                Circle(sim.apply(circle.center), 1.0),
                CanonicalParabola(parabola.p * s))
    v = parabola.directrix.value(parabola.focus)
    sgn = 1.0 if v > 0 else -1.0
    theta = -math.atan2(sgn * parabola.directrix.b, sgn * parabola.directrix.a)
    c, sn = math.cos(theta), math.sin(theta)
    fx, fy = parabola.focus
    sim = Similarity(theta, s, Point2(-s * (c * fx - sn * fy),
                                      -s * (sn * fx + c * fy)))
    return (sim,
            Circle(sim.apply(circle.center), 1.0),
            CanonicalParabola(abs(v) * s))


# ---------------------------------------------------------------------------
# polynomial solvers (coefficients ordered highest degree first)

def poly_eval(coeffs, x: float) -> float:
    acc = 0.0
    for c in coeffs:
        acc = acc * x + c
    return acc


def poly_deriv(coeffs):
    n = len(coeffs) - 1
    return [c * (n - i) for i, c in enumerate(coeffs[:-1])]


def polish_root(coeffs, x: float, iters: int = 6) -> float:
    """A few Newton steps; stalls safely on multiple roots."""
    dcoeffs = poly_deriv(coeffs)
    for _ in range(iters):
        f = poly_eval(coeffs, x)
        df = poly_eval(dcoeffs, x)
        if df == 0.0:
            break
        step = f / df
        if not math.isfinite(step) or abs(step) > 1.0 + abs(x):
            break
        x -= step
        if abs(step) <= 1e-15 * max(1.0, abs(x)):
            break
    return x


def solve_quadratic(c2: float, c1: float, c0: float) -> list[tuple[float, int]]:
    """Real roots of c2*x^2 + c1*x + c0, ascending, as (root, multiplicity)."""
    scale = max(abs(c2), abs(c1), abs(c0))
    if scale == 0.0:
        raise IndeterminateEquationError("all coefficients vanish")
    if abs(c2) <= DEGREE_EPS * scale:
        if abs(c1) <= DEGREE_EPS * scale:
            return []  # nonzero constant: no roots
        return [(-c0 / c1, 1)]
    disc = c1 * c1 - 4.0 * c2 * c0
    dscale = max(c1 * c1, abs(4.0 * c2 * c0), DEGREE_EPS)
    if abs(disc) <= 1e-12 * dscale:
        return [(-c1 / (2.0 * c2), 2)]
    if disc < 0.0:
        return []
    sq = math.sqrt(disc)
    if c1 == 0.0:
        r = sq / (2.0 * abs(c2))
        roots = [-r, r]
    else:
        q = -(c1 + math.copysign(sq, c1)) / 2.0
        roots = [q / c2, c0 / q]
    roots = sorted(polish_root([c2, c1, c0], r) for r in roots)
    return [(roots[0], 1), (roots[1], 1)]


def _cluster(roots: list[float]) -> list[tuple[float, int]]:
    out: list[tuple[float, int]] = []
    for x in sorted(roots):
        if out and abs(x - out[-1][0]) <= 1e-7 * max(1.0, abs(x)):
            out[-1] = (out[-1][0], out[-1][1] + 1)
        else:
            out.append((x, 1))
    return out


def _solve_by_companion(coeffs: list[float]) -> list[tuple[float, int]]:
    scale = max(abs(c) for c in coeffs)
    roots = np.roots(coeffs)
    real = [polish_root(coeffs, z.real) for z in roots
            if abs(z.imag) <= 3e-7 * max(1.0, abs(z))]
    # residual guard: drops real parts of genuinely complex pairs
    deg = len(coeffs) - 1
    kept = [x for x in real
            if abs(poly_eval(coeffs, x)) <= 1e-10 * scale * max(1.0, abs(x)) ** deg]
    return _cluster(kept)


def solve_cubic(c3: float, c2: float, c1: float, c0: float) -> list[tuple[float, int]]:
    """Real roots of the cubic, ascending, as (root, multiplicity)."""
    scale = max(abs(c3), abs(c2), abs(c1), abs(c0))
    if scale == 0.0:
        raise IndeterminateEquationError("all coefficients vanish")
    if abs(c3) <= DEGREE_EPS * scale:
        return solve_quadratic(c2, c1, c0)
    return _solve_by_companion([c3, c2, c1, c0])


def solve_quartic(c4: float, c3: float, c2: float, c1: float,
                  c0: float) -> list[tuple[float, int]]:
    """Real roots of the quartic, ascending, as (root, multiplicity)."""
    scale = max(abs(c4), abs(c3), abs(c2), abs(c1), abs(c0))
    if scale == 0.0:
        raise IndeterminateEquationError("all coefficients vanish")
    if abs(c4) <= DEGREE_EPS * scale:
        return solve_cubic(c3, c2, c1, c0)
    return _solve_by_companion([c4, c3, c2, c1, c0])


def cubic_discriminant(c3: float, c2: float, c1: float, c0: float) -> float:
    return (18.0 * c3 * c2 * c1 * c0 - 4.0 * c2 ** 3 * c0 + c2 ** 2 * c1 ** 2
            - 4.0 * c3 * c1 ** 3 - 27.0 * c3 ** 2 * c0 ** 2)
