"""Registry tying every verifiable claim to the CLI check that exercises it.

Each check id maps to exactly one claim; the completeness test in the suite
asserts that every claim is reachable from at least one verify suite.
"""

from __future__ import annotations

CLAIMS: dict[str, str] = {
    "triangle-closure-criterion":
        "a triangle inscribed in the circle and circumscribed about the "
        "parabola exists iff the circle passes through the focus, and then "
        "every admissible circle point is a vertex",
    "polar-closure-test":
        "the tangent triangle from a vertex closes iff S_BB*S_CC = S_BC^2",
    "defect-product-identity":
        "S_BB*S_CC - S_BC^2 factors through S_AA, the focus-power of the "
        "center, and the common-tangency residual",
    "euler-point-loci":
        "orthocenters lie on the directrix; every Euler-line point sweeps a "
        "segment parallel to it with closed-form x-coordinate",
    "orthocenter-extremes":
        "the orthocenter segment endpoints come from vertices on a common "
        "tangent of circle and parabola",
    "euler-segment-endpoints":
        "the segment of any Euler-line point spans its values at the two "
        "common-tangent vertices; the centroid segment is a third of the "
        "orthocenter segment",
    "orthocenter-first":
        "dropping perpendiculars from a directrix point onto two tangents "
        "builds a circumscribing triangle with that orthocenter and a "
        "circumcircle through the focus",
    "pedal-midpoints":
        "side midpoints of Poncelet polygons lie on the pedal curve of the "
        "parabola with pedal point at the circle center; the pedal curve "
        "self-intersects there iff the center sees two tangents",
    "pedal-cubic":
        "the pedal curve of the parabola is the stated cubic, matching the "
        "foot-of-perpendicular parametrization",
    "intersection-to-common-tangent":
        "from a circle-parabola intersection point, the tangent there meets "
        "the circle again at a common-tangent point (with the general "
        "rescaling identity for f)",
    "common-tangent-to-intersection":
        "from a common-tangent point, the other tangent meets the circle at "
        "a circle-parabola intersection point, and the correspondence is an "
        "involution",
    "kite-parallel-test":
        "a tangent-chord endpoint is a common-tangent point iff the focus "
        "ray from the mirrored directrix foot is parallel to the radius",
    "pencil-discriminant-match":
        "the circle-parabola and circle-locus pencils have proportional "
        "determinant discriminants (factor p^2)",
    "pencil-degenerate-count":
        "both pencils contain the same number of real degenerate conics",
    "tangent-pair":
        "the two tangents from a point have slopes solving "
        "(2x+p)m^2 - 2ym + p = 0, with the vertical special case at "
        "2x + p = 0",
    "tangent-circle-meet":
        "closed forms for the second circle intersections of the tangents "
        "and for the slope of the chord joining them",
    "common-point-criterion":
        "a circle point lies on a common tangent iff 2x + p = 0 or the "
        "residual f(A, E, p) vanishes",
    "common-tangent-locus":
        "common-tangent points lie on a quadric that is a hyperbola off the "
        "axis, a parallel line pair on it, and a double line at the focus, "
        "forming a pencil in p",
    "common-tangent-quartic":
        "abscissae of common-tangent points solve a quartic, so at most "
        "four common tangents exist",
    "quartic-root-sum":
        "the four quartic roots (with complex ones) sum to "
        "2*xE*(2*|E|^2-1)/|E|^2 = 2*(xE - p) at the closing parameter",
    "focus-centered-tangent-points":
        "for the focus-centered unit circle the common-tangent points are "
        "(-p/2, +-sqrt(4-p^2)/2)",
    "focal-butterfly":
        "focus-centered Poncelet quadrilaterals are antiparallelograms with "
        "vertical diagonals, axis side-meets, and midline x = -p/2",
    "side-meet-inversion":
        "the opposite-side intersection points of the antiparallelogram are "
        "inverse in the circumcircle (x_G * x_H = R^2)",
    "focal-quad-existence":
        "every admissible start closes a quadrilateral for every confocal "
        "parabola with |p| below the diameter",
    "tangent-chord-kite":
        "every tangent chord of a focus-centered circle subtends a directrix "
        "point equidistant (radius) from its endpoints",
    "butterfly-side-kite":
        "each side of a focus-centered Poncelet quadrilateral has its "
        "directrix kite point",
    "directrix-kite-chord":
        "conversely, circle points at circle-radius distance from a "
        "directrix point span a tangent chord",
    "abscissa-sum-chords":
        "chords of the focus-centered circle with xA + xB = -p are tangent",
    "vertex-tangent-touch":
        "the circle tangent at the intersection with the vertex tangent is "
        "itself tangent to the parabola",
    "compass-construction":
        "the circle-and-directrix compass construction returns the tangents "
        "from a point with 0/1/2 solutions by position",
    "chord-confocal-parabola":
        "every non-focal, non-axis-parallel chord of a focus-centered circle "
        "touches exactly one confocal parabola",
    "trapezoid-parabola":
        "every isosceles trapezoid yields a parabola inscribed in its "
        "crossed quadrilateral (focus at the circumcenter, directrix "
        "mirroring it over the midline)",
    "prescribed-side-meet":
        "for any point off the circle and center there is a unique inscribed "
        "butterfly with prescribed opposite-side intersection through a "
        "given vertex",
    "pivot-quad-properties":
        "off-focus quadrilaterals close iff the directrix passes through the "
        "pivot L; diagonals concur at L, side-meets lie on the focus line "
        "orthogonal to EF, anticenters on the directrix, centroids on "
        "x = (xE - p)/2",
    "ninepoint-focus-centroid":
        "the focus and the vertex centroid lie on the nine-point circle of "
        "the diagonal triangle",
    "directrix-pivot-necessity":
        "any inscribed parabola of a Poncelet quadrilateral has its "
        "directrix through the pivot L",
    "unique-confocal-quad":
        "exactly one parabola of a confocal family forms a 4-Poncelet pair "
        "with an off-focus circle",
    "cyclic-quad-parabola-iff":
        "an inscribed parabola of a cyclic quadrilateral has its focus at "
        "(side-meet line) x (center-pivot line) and directrix through the "
        "pivot; side-parallel configurations admit none and are rejected",
    "isoperiodic-families":
        "confocal families are 3-isoperiodic iff the focus is on the circle, "
        "4-isoperiodic iff it is the center; pivot families are "
        "4-isoperiodic iff the pivot is L",
}

# check id -> claim key
CHECK_CLAIMS: dict[str, str] = {
    "triangle.poristic": "triangle-closure-criterion",
    "triangle.converse": "triangle-closure-criterion",
    "triangle.polar-closure": "polar-closure-test",
    "triangle.defect-identity": "defect-product-identity",
    "triangle.orthocenter-directrix": "euler-point-loci",
    "triangle.euler-parametrization": "euler-point-loci",
    "triangle.orthocenter-extremes": "orthocenter-extremes",
    "triangle.euler-segments": "euler-segment-endpoints",
    "triangle.orthocenter-first": "orthocenter-first",
    "triangle.pedal-midpoints": "pedal-midpoints",
    "triangle.pedal-cubic": "pedal-cubic",
    "triangle.intersection-partner": "intersection-to-common-tangent",
    "triangle.common-tangent-partner": "common-tangent-to-intersection",
    "tangents.pair-slopes": "tangent-pair",
    "tangents.circle-meet": "tangent-circle-meet",
    "tangents.common-point-criterion": "common-point-criterion",
    "tangents.locus-classification": "common-tangent-locus",
    "tangents.quartic-points": "common-tangent-quartic",
    "tangents.quartic-root-sum": "quartic-root-sum",
    "tangents.focus-centered-points": "focus-centered-tangent-points",
    "tangents.pencil-discriminant": "pencil-discriminant-match",
    "tangents.pencil-count": "pencil-degenerate-count",
    "tangents.kite-parallel": "kite-parallel-test",
    "quad_ef.antiparallelogram": "focal-butterfly",
    "quad_ef.side-meet-inversion": "side-meet-inversion",
    "quad_ef.poristic": "focal-quad-existence",
    "quad_ef.tangent-chord-kite": "tangent-chord-kite",
    "quad_ef.side-kites": "butterfly-side-kite",
    "quad_ef.directrix-chord": "directrix-kite-chord",
    "quad_ef.abscissa-sum": "abscissa-sum-chords",
    "quad_ef.vertex-tangent": "vertex-tangent-touch",
    "quad_ef.compass": "compass-construction",
    "quad_ef.chord-parabola": "chord-confocal-parabola",
    "quad_ef.trapezoid-roundtrip": "trapezoid-parabola",
    "quad_ef.prescribed-side-meet": "prescribed-side-meet",
    "quad_general.poristic": "pivot-quad-properties",
    "quad_general.diagonal-invariance": "pivot-quad-properties",
    "quad_general.derived-points": "pivot-quad-properties",
    "quad_general.ninepoint": "ninepoint-focus-centroid",
    "quad_general.directrix-pivot": "directrix-pivot-necessity",
    "quad_general.unique-parameter": "unique-confocal-quad",
    "quad_general.inscription-iff": "cyclic-quad-parabola-iff",
    "iso.confocal": "isoperiodic-families",
    "iso.pivot": "isoperiodic-families",
    "iso.negative": "isoperiodic-families",
}

SUITES: dict[str, list[str]] = {
    "triangle": [k for k in CHECK_CLAIMS if k.startswith("triangle.")],
    "common-tangents": [k for k in CHECK_CLAIMS if k.startswith("tangents.")],
    "quad-ef": [k for k in CHECK_CLAIMS if k.startswith("quad_ef.")],
    "quad-general": [k for k in CHECK_CLAIMS if k.startswith("quad_general.")],
    "isoperiodic": [k for k in CHECK_CLAIMS if k.startswith("iso.")],
}


def covered_claims() -> set[str]:
    return set(CHECK_CLAIMS.values())
