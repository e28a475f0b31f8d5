"""Independent oracles used across the test suite.

Everything here deliberately avoids the library's own fast paths: shapely
for point location, scipy quadrature for Fourier integrals, Monte Carlo for
solid angles, and straightforward Fraction arithmetic for distances.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
from scipy import integrate

from lattice_pick.geometry import ConvexPolytope3, IntegerPolygon2


def shapely_classify(P: IntegerPolygon2, point) -> str:
    """'interior' / 'boundary' / 'exterior' according to shapely."""
    from shapely.geometry import Point, Polygon

    poly = Polygon(P.vertices)
    pt = Point(float(point[0]), float(point[1]))
    if poly.contains(pt):
        return "interior"
    if poly.touches(pt) or poly.boundary.contains(pt):
        return "boundary"
    return "exterior"


def boundary_points_brute(P: IntegerPolygon2) -> set[tuple[int, int]]:
    """Boundary lattice points by brute bounding-box scan with exact
    on-segment tests (no gcd stepping)."""

    def on_any_edge(p):
        for a, b in P.edges():
            cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])
            if cross != 0:
                continue
            if min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(
                a[1], b[1]
            ):
                return True
        return False

    (x0, y0), (x1, y1) = P.bounding_box()
    return {
        (x, y)
        for x in range(x0, x1 + 1)
        for y in range(y0, y1 + 1)
        if on_any_edge((x, y))
    }


def interior_points_shapely(P: IntegerPolygon2) -> set[tuple[int, int]]:
    from shapely.geometry import Point, Polygon
    from shapely.prepared import prep

    poly = prep(Polygon(P.vertices))
    (x0, y0), (x1, y1) = P.bounding_box()
    return {
        (x, y)
        for x in range(x0, x1 + 1)
        for y in range(y0, y1 + 1)
        if poly.contains(Point(x, y))
    }


def mc_solid_angle_fraction(
    P: ConvexPolytope3, vertex_index: int, n: int = 10**6, seed: int = 0
) -> tuple[float, float]:
    """Monte Carlo estimate (value, stderr) of the solid angle fraction at a
    vertex: the fraction of uniform sphere directions pointing into the
    incident half-spaces."""
    rng = np.random.Generator(np.random.Philox(seed))
    dirs = rng.normal(size=(n, 3))
    ok = np.ones(n, dtype=bool)
    for f in P.vertex_facet_set(vertex_index):
        normal, _ = P.facet_planes[f]
        ok &= dirs @ np.asarray(normal, dtype=float) <= 0.0
    p = float(ok.mean())
    return p, math.sqrt(p * (1 - p) / n)


def quad_ft_triangle(vertices, xi, epsabs=1e-10) -> complex:
    """Adaptive quadrature of the Fourier integral over a triangle, via the
    unit-simplex parametrization."""
    (ax, ay), (bx, by), (cx, cy) = [tuple(map(float, v)) for v in vertices]
    ux, uy = bx - ax, by - ay
    vx, vy = cx - ax, cy - ay
    jac = abs(ux * vy - uy * vx)
    fx, fy = float(xi[0]), float(xi[1])

    def phase(v, u):
        x = ax + u * ux + v * vx
        y = ay + u * uy + v * vy
        return -2.0 * math.pi * (fx * x + fy * y)

    re, _ = integrate.dblquad(
        lambda v, u: math.cos(phase(v, u)), 0, 1, 0, lambda u: 1 - u,
        epsabs=epsabs, epsrel=epsabs,
    )
    im, _ = integrate.dblquad(
        lambda v, u: math.sin(phase(v, u)), 0, 1, 0, lambda u: 1 - u,
        epsabs=epsabs, epsrel=epsabs,
    )
    return jac * complex(re, im)


def quad_ft_polygon(P: IntegerPolygon2, xi, epsabs=1e-10) -> complex:
    """Quadrature Fourier transform of a polygon indicator by fan
    triangulation from vertex 0 (convex polygons only)."""
    vs = P.vertices
    total = 0j
    for k in range(1, len(vs) - 1):
        total += quad_ft_triangle((vs[0], vs[k], vs[k + 1]), xi, epsabs=epsabs)
    return total


def quad_kernel(r: float, epsabs=1e-11) -> float:
    """Adaptive 2D quadrature of the normalized disc transform at radius r.

    The imaginary part vanishes by symmetry; the frequency is aligned with
    the x axis since the transform is radial.
    """
    half = 0.5

    def upper(x):
        return math.sqrt(max(half * half - x * x, 0.0))

    val, _ = integrate.dblquad(
        lambda y, x: math.cos(2.0 * math.pi * r * x) * (4.0 / math.pi),
        -half, half, lambda x: -upper(x), upper,
        epsabs=epsabs, epsrel=epsabs,
    )
    return val


def rect_tensor_ft(a, b, xi) -> complex:
    """Exact 1D x 1D transform of the rectangle [a0,b0] x [a1,b1]."""

    def seg(lo, hi, f):
        if f == 0.0:
            return complex(hi - lo, 0.0)
        length = hi - lo
        z = math.pi * f * length
        sinc = math.sin(z) / z if z != 0 else 1.0
        phase = -math.pi * f * (lo + hi)
        return length * sinc * complex(math.cos(phase), math.sin(phase))

    return seg(a[0], b[0], float(xi[0])) * seg(a[1], b[1], float(xi[1]))


def point_segment_dist_sq_frac(p, a, b) -> Fraction:
    """Squared distance from a rational point to an integer segment."""
    px, py = Fraction(p[0]), Fraction(p[1])
    ex, ey = b[0] - a[0], b[1] - a[1]
    wx, wy = px - a[0], py - a[1]
    tn = wx * ex + wy * ey
    td = ex * ex + ey * ey
    if tn <= 0:
        return wx * wx + wy * wy
    if tn >= td:
        ux, uy = px - b[0], py - b[1]
        return ux * ux + uy * uy
    cross = ex * wy - ey * wx
    return cross * cross / td


def brute_safe_epsilon_sq(P: IntegerPolygon2) -> Fraction:
    """Reference implementation of the squared mollifier threshold: plain
    Fractions, no pruning."""
    (x0, y0), (x1, y1) = P.bounding_box()
    best = None
    for x in range(x0, x1 + 1):
        for y in range(y0, y1 + 1):
            for a, b in P.edges():
                # skip incident edges: point exactly on the closed segment
                cross = (b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0])
                if cross == 0 and min(a[0], b[0]) <= x <= max(a[0], b[0]) and min(
                    a[1], b[1]
                ) <= y <= max(a[1], b[1]):
                    continue
                d = point_segment_dist_sq_frac((x, y), a, b)
                if best is None or d < best:
                    best = d
    return 4 * min(best, Fraction(1))


def unit_cube_handmade() -> ConvexPolytope3:
    """Cube built vertex-by-vertex, independent of the zonotope path."""
    vertices = [
        (0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0),
        (0, 0, 1), (1, 0, 1), (1, 1, 1), (0, 1, 1),
    ]
    facets = [
        (0, 3, 2, 1),  # bottom, seen from below
        (4, 5, 6, 7),  # top
        (0, 1, 5, 4),  # y = 0
        (1, 2, 6, 5),  # x = 1
        (2, 3, 7, 6),  # y = 1
        (3, 0, 4, 7),  # x = 0
    ]
    return ConvexPolytope3(vertices, facets)
