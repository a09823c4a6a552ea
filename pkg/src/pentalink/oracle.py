"""Independent geometric verification through explicit coordinates.

Everything here rebuilds configurations from scratch (vertex coordinates,
shoelace areas, least-squares circle fits, Euler triples) so that the
algebraic pipeline can be checked against plain trigonometry.  All of it runs
in double precision: the tightest tolerance used anywhere downstream is
1e-9 relative, three orders of magnitude above double rounding noise for
these vertex counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .core import Linkage, Number, TangentLengths, as_linkage
from .errors import (
    AngleMismatchError,
    NoCircumradiusError,
    NonPositiveTangentLengthError,
    NotATriangleError,
    NotClosableError,
    PentalinkError,
)

Point = tuple[float, float]

CIRCUMRADIUS_REL_TOL = 1e-14
CIRCUMRADIUS_MAX_ITER = 300


@dataclass(frozen=True)
class PolygonConfiguration:
    """Explicit planar configuration; the edge from the last vertex back to
    the first is a genuine side, not a leftover gap."""

    vertices: tuple[Point, ...]
    winding: int

    @property
    def n(self) -> int:
        return len(self.vertices)

    def side_lengths(self) -> tuple[float, ...]:
        v = self.vertices
        return tuple(
            math.hypot(v[(i + 1) % len(v)][0] - v[i][0], v[(i + 1) % len(v)][1] - v[i][1])
            for i in range(len(v))
        )

    def perimeter(self) -> float:
        return math.fsum(self.side_lengths())


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: float


@dataclass(frozen=True)
class CircleFit:
    """A fitted circle plus how badly the configuration misses it."""

    circle: Circle
    residual: float
    tangency_inside: bool = True


@dataclass(frozen=True)
class EulerTriple:
    """Circumradius, inradius, and distance between the two centers."""

    circumradius: float
    inradius: float
    center_distance: float


def reconstruct_tangential(t: TangentLengths, r: float, winding: int) -> PolygonConfiguration:
    """Place a tangential configuration around an incircle of radius r at the
    origin.

    Vertex i sits at distance hypot(r, t_i) from the center; polar angles
    advance by arctan(t_i/r) + arctan(t_{i+1}/r) per side, which makes every
    side tangent to the circle and of length t_i + t_{i+1}.  Closure is
    exactly the angle condition sum(arctan(t_i/r)) = winding*pi, which is
    checked first.
    """
    values = [float(v) for v in t.values]
    if any(not v > 0 for v in values):
        raise NonPositiveTangentLengthError("tangent lengths must be positive")
    if not r > 0:
        raise PentalinkError(f"inradius must be positive, got {r!r}")
    half_angles = [math.atan(v / r) for v in values]
    target = winding * math.pi
    mismatch = math.fsum(half_angles) - target
    if abs(mismatch) > 1e-9 * target:
        raise AngleMismatchError(
            f"sum(arctan(t_i/r)) misses {winding}*pi by {mismatch!r}; "
            "inradius and tangent lengths are inconsistent"
        )
    n = len(values)
    vertices: list[Point] = []
    theta = 0.0
    for i in range(n):
        rho = math.hypot(r, values[i])
        vertices.append((rho * math.cos(theta), rho * math.sin(theta)))
        theta += half_angles[i] + half_angles[(i + 1) % n]
    config = PolygonConfiguration(vertices=tuple(vertices), winding=winding)
    # the return angle theta differs from 2*winding*pi by exactly 2*mismatch
    rho0 = math.hypot(r, values[0])
    closure = math.hypot(
        rho0 * math.cos(theta) - vertices[0][0], rho0 * math.sin(theta) - vertices[0][1]
    )
    if closure > 1e-9 * config.perimeter():
        raise AngleMismatchError(f"closure residual {closure!r} exceeds 1e-9 * perimeter")
    return config


def _central_angle_sum(sides: Sequence[float], radius: float) -> float:
    total = 0.0
    for a in sides:
        x = a / (2.0 * radius)
        total += 2.0 * math.asin(min(x, 1.0))
    return total


def reconstruct_cyclic(
    sides: "Linkage | Sequence[Number]", winding: int = 1
) -> tuple[PolygonConfiguration, Circle]:
    """Vertices on a common circle with all-short central arcs.

    Solves sum(2*arcsin(a_i/(2R))) = 2*pi*winding for R >= max(a_i)/2 by
    bisection (the sum decreases strictly in R).  Configurations that would
    need a long arc for some side have no solution in this regime and are
    rejected.
    """
    linkage = as_linkage(sides)
    if winding not in (1, 2):
        raise PentalinkError(f"winding must be 1 or 2, got {winding!r}")
    a = [float(v) for v in linkage.sides]
    total = math.fsum(a)
    for i, v in enumerate(a):
        if 2 * v >= total:
            raise NotClosableError(f"side {i + 1} ({v!r}) is at least the sum of the others")
    target = 2.0 * math.pi * winding
    lo = max(a) / 2.0 * (1.0 + 1e-15)
    hi = total
    if _central_angle_sum(a, lo) < target:
        raise NoCircumradiusError(
            f"no circumradius with short arcs reaches a {winding}-fold turn; "
            "the configuration would need a long arc"
        )
    for _ in range(CIRCUMRADIUS_MAX_ITER):
        mid = 0.5 * (lo + hi)
        if _central_angle_sum(a, mid) > target:
            lo = mid
        else:
            hi = mid
        if hi - lo <= CIRCUMRADIUS_REL_TOL * hi:
            break
    radius = 0.5 * (lo + hi)
    theta = 0.0
    vertices: list[Point] = []
    for v in a:
        vertices.append((radius * math.cos(theta), radius * math.sin(theta)))
        theta += 2.0 * math.asin(min(v / (2.0 * radius), 1.0))
    return (
        PolygonConfiguration(vertices=tuple(vertices), winding=winding),
        Circle(center=(0.0, 0.0), radius=radius),
    )


def shoelace_area(config: PolygonConfiguration) -> float:
    """Signed area, counterclockwise positive; doubly wound regions count twice."""
    v = config.vertices
    if len(v) < 3:
        raise PentalinkError("need at least 3 vertices")
    return 0.5 * math.fsum(
        v[i][0] * v[(i + 1) % len(v)][1] - v[(i + 1) % len(v)][0] * v[i][1]
        for i in range(len(v))
    )


def _solve_2x2(m00, m01, m11, b0, b1) -> Point:
    det = m00 * m11 - m01 * m01
    if det == 0:
        raise PentalinkError("degenerate least-squares system")
    return ((b0 * m11 - b1 * m01) / det, (b1 * m00 - b0 * m01) / det)


def incircle_fit(config: PolygonConfiguration) -> CircleFit:
    """Least-squares center equalizing the signed distances to the side lines.

    The signed distance to each edge line is affine in the center, so
    minimizing its variance is a 2x2 linear solve.  The residual is the
    largest deviation of the line distances from their mean; additionally
    each tangency foot must fall strictly inside its segment for the fit to
    count as an incircle.
    """
    v = config.vertices
    n = len(v)
    if n < 3:
        raise PentalinkError("need at least 3 vertices")
    normals: list[Point] = []
    offsets: list[float] = []
    for i in range(n):
        x0, y0 = v[i]
        x1, y1 = v[(i + 1) % n]
        dx, dy = x1 - x0, y1 - y0
        length = math.hypot(dx, dy)
        if length == 0:
            raise PentalinkError(f"zero-length edge at index {i}")
        nx, ny = -dy / length, dx / length  # left normal of the directed edge
        normals.append((nx, ny))
        offsets.append(-(nx * x0 + ny * y0))
    mean_n = (math.fsum(p[0] for p in normals) / n, math.fsum(p[1] for p in normals) / n)
    mean_o = math.fsum(offsets) / n
    m00 = m01 = m11 = b0 = b1 = 0.0
    for (nx, ny), off in zip(normals, offsets):
        cx, cy, co = nx - mean_n[0], ny - mean_n[1], off - mean_o
        m00 += cx * cx
        m01 += cx * cy
        m11 += cy * cy
        b0 -= cx * co
        b1 -= cy * co
    center = _solve_2x2(m00, m01, m11, b0, b1)
    dists = [nx * center[0] + ny * center[1] + off for (nx, ny), off in zip(normals, offsets)]
    radius = math.fsum(dists) / n
    residual = max(abs(d - radius) for d in dists)
    inside = True
    for i, ((nx, ny), d) in enumerate(zip(normals, dists)):
        fx, fy = center[0] - d * nx, center[1] - d * ny
        x0, y0 = v[i]
        x1, y1 = v[(i + 1) % n]
        dx, dy = x1 - x0, y1 - y0
        s = ((fx - x0) * dx + (fy - y0) * dy) / (dx * dx + dy * dy)
        if not 0.0 < s < 1.0:
            inside = False
    return CircleFit(
        circle=Circle(center=center, radius=abs(radius)),
        residual=residual,
        tangency_inside=inside,
    )


def circumcircle_fit(config: PolygonConfiguration) -> CircleFit:
    """Algebraic least-squares center for equal vertex distances.

    Equalizing squared distances to the vertices is linear in the center;
    the residual is again the worst deviation of the distances from their
    mean.
    """
    v = config.vertices
    n = len(v)
    if n < 3:
        raise PentalinkError("need at least 3 vertices")
    mean_x = math.fsum(p[0] for p in v) / n
    mean_y = math.fsum(p[1] for p in v) / n
    mean_q = math.fsum(p[0] ** 2 + p[1] ** 2 for p in v) / n
    m00 = m01 = m11 = b0 = b1 = 0.0
    for x, y in v:
        cx, cy = x - mean_x, y - mean_y
        cq = (x * x + y * y - mean_q) / 2.0
        m00 += cx * cx
        m01 += cx * cy
        m11 += cy * cy
        b0 += cx * cq
        b1 += cy * cq
    center = _solve_2x2(m00, m01, m11, b0, b1)
    dists = [math.hypot(x - center[0], y - center[1]) for x, y in v]
    radius = math.fsum(dists) / n
    residual = max(abs(d - radius) for d in dists)
    return CircleFit(circle=Circle(center=center, radius=radius), residual=residual)


def euler_triple(sides: Sequence[Number]) -> EulerTriple:
    """(R, r, d) of a triangle, with d measured between coordinate-built
    circumcenter and incenter; R^2 - d^2 = 2*R*r must then hold.
    """
    if len(sides) != 3:
        raise NotATriangleError(f"need exactly 3 sides, got {len(sides)}")
    a, b, c = (float(v) for v in sides)
    if min(a, b, c) <= 0 or a + b <= c or b + c <= a or c + a <= b:
        raise NotATriangleError(f"{(a, b, c)!r} violates the strict triangle inequality")
    # vertices: V1 at origin, V2 on the x-axis, V3 above
    x3 = (a * a + c * c - b * b) / (2.0 * a)
    y3 = math.sqrt(max(c * c - x3 * x3, 0.0))
    v1, v2, v3 = (0.0, 0.0), (a, 0.0), (x3, y3)
    area = 0.5 * a * y3
    p = (a + b + c) / 2.0
    circumradius = a * b * c / (4.0 * area)
    inradius = area / p
    # incenter weights: each vertex weighted by the length of the opposite side
    ix = (b * v1[0] + c * v2[0] + a * v3[0]) / (a + b + c)
    iy = (b * v1[1] + c * v2[1] + a * v3[1]) / (a + b + c)
    # circumcenter from the perpendicular bisectors
    d2 = 2.0 * (v1[0] * (v2[1] - v3[1]) + v2[0] * (v3[1] - v1[1]) + v3[0] * (v1[1] - v2[1]))
    q1 = v1[0] ** 2 + v1[1] ** 2
    q2 = v2[0] ** 2 + v2[1] ** 2
    q3 = v3[0] ** 2 + v3[1] ** 2
    ox = (q1 * (v2[1] - v3[1]) + q2 * (v3[1] - v1[1]) + q3 * (v1[1] - v2[1])) / d2
    oy = (q1 * (v3[0] - v2[0]) + q2 * (v1[0] - v3[0]) + q3 * (v2[0] - v1[0])) / d2
    return EulerTriple(
        circumradius=circumradius,
        inradius=inradius,
        center_distance=math.hypot(ox - ix, oy - iy),
    )
