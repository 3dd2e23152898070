"""Poncelet triangles and quadrilaterals for a circle and a parabola."""

from .core import (EPS_ALG, EPS_GEO, CanonicalParabola, Circle, ClosureError,
                   ConfigurationError, ConicMatrix, DegenerateError,
                   GeneralParabola, GeometryError, IndeterminateEquationError,
                   InsideParabolaError, Line2, Point2, Similarity,
                   ValidationError, cubic_discriminant, normalize_frame,
                   solve_cubic, solve_quadratic, solve_quartic)
from .joachimsthal import (PolarForms, TangentPair, chord_contact,
                           common_tangency_residual, eval_S, polar_forms,
                           second_intersection, slope_cc,
                           tangent_circle_intersections, tangents_from_point)
from .common_tangents import (CommonTangentLocus, CommonTangentSet,
                              circle_parabola_intersections,
                              common_tangent_points, correspondence_partner,
                              count_real_degenerate, h_conic, pencil_cubic,
                              tangency_quartic)
from .triangles import (OrthocenterRange, PonceletTriangle, TriangleCenters,
                        build_triangle, centers, closure_defect,
                        orthocenter_range, pedal_curve_residual, pedal_point,
                        q_of, triangle_from_orthocenter)
from .quads import (PonceletQuad, QuadDerivedPoints, build_butterfly,
                    build_quad_through_L, butterfly_partner_x,
                    compass_tangents, inscribe_parabola_in_cyclic_quad,
                    inscribe_parabola_in_trapezoid, l_point,
                    parabola_through_chord, quad_derived_points,
                    quad_with_given_diagonal_point)
from .oracle import (ClosureReport, ConfocalFamily, IsoperiodicResult,
                     OrbitStep, PivotFamily, classify_isoperiodic,
                     closure_residual_n, detect_period, step)

__version__ = "0.1.0"
