"""Regularized indicator weights and the discrete volume.

The regularized indicator of a polytope assigns 1 to interior points, 0 to
exterior points, and the normalized local angle fraction to boundary points:
1/2 on side and facet interiors, angle/2pi at 2D vertices and on 3D edges,
solid angle/4pi at 3D vertices. Summing it over the lattice gives the
regularized discrete volume.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .geometry import (
    ConvexPolytope3,
    GeometryError,
    IntegerPolygon2,
    LocationKind,
    PointLocation,
    Polytope,
    PreconditionError,
    _dot,
    _cross3,
    _det3,
    _rational_point,
    _sub,
    boundary_lattice_count_2d,
    interior_lattice_count,
    lattice_points_with_location,
    locate_point,
)

TWO_PI = 2.0 * math.pi
FOUR_PI = 4.0 * math.pi


# ---------------------------------------------------------------------------
# 2D weights


def vertex_angle_fraction(P: IntegerPolygon2, i: int) -> float:
    """Interior angle at vertex i divided by 2pi, in (0, 1).

    Uses two-argument arctangents of the exact integer edge vectors, so
    reflex vertices (angle > pi) come out right without any normalization
    fixups.
    """
    vs = P.vertices
    v = vs[i]
    a = _sub(vs[i - 1], v)  # towards the previous vertex
    b = _sub(vs[(i + 1) % len(vs)], v)  # towards the next vertex
    alpha = math.atan2(a[1], a[0]) - math.atan2(b[1], b[0])
    if alpha <= 0.0:
        alpha += TWO_PI
    return alpha / TWO_PI


def weight_2d(P: IntegerPolygon2, n: Sequence[int]) -> float:
    """Value of the regularized indicator of P at the lattice point n."""
    loc = locate_point(P, n)
    return _weight_from_location_2d(P, loc)


def _weight_from_location_2d(P: IntegerPolygon2, loc: PointLocation) -> float:
    if loc.kind is LocationKind.EXTERIOR:
        return 0.0
    if loc.kind is LocationKind.INTERIOR:
        return 1.0
    if loc.kind is LocationKind.EDGE_INTERIOR:
        return 0.5
    return vertex_angle_fraction(P, loc.index)


# ---------------------------------------------------------------------------
# 3D weights


def solid_angle_fraction(generators: Sequence[Sequence[int]]) -> float:
    """Solid angle of a convex polyhedral cone as a fraction of 4pi.

    ``generators`` are the cone's edge rays in fan order around the apex.
    The cone is fan-triangulated from one base ray and each simplicial
    piece is evaluated with the stable arctangent identity
    tan(omega/2) = |det[a,b,c]| / (|a||b||c| + (a.b)|c| + (b.c)|a| + (c.a)|b|).
    A coplanar triple spans no solid angle and contributes 0.
    """
    gens = [tuple(int(c) for c in g) for g in generators]
    if len(gens) < 3:
        raise GeometryError("a solid angle needs at least 3 generators")
    if any(g == (0, 0, 0) for g in gens):
        raise GeometryError("zero generator")
    base = None
    for r, g0 in enumerate(gens):
        antipodal = any(
            _cross3(g0, g) == (0, 0, 0) and _dot(g0, g) < 0
            for s, g in enumerate(gens)
            if s != r
        )
        if not antipodal:
            base = r
            break
    if base is None:
        raise GeometryError("cone contains a full line; solid angle undefined")
    seq = gens[base:] + gens[:base]
    a = seq[0]
    na = math.sqrt(_dot(a, a))
    total = 0.0
    for i in range(1, len(seq) - 1):
        b, c = seq[i], seq[i + 1]
        det = _det3(a, b, c)
        if det == 0:
            continue
        nb = math.sqrt(_dot(b, b))
        nc = math.sqrt(_dot(c, c))
        denom = (
            na * nb * nc
            + _dot(a, b) * nc
            + _dot(b, c) * na
            + _dot(c, a) * nb
        )
        total += 2.0 * math.atan2(abs(det), denom)
    return total / FOUR_PI


def vertex_cone_generators(P: ConvexPolytope3, vi: int) -> list[tuple[int, int, int]]:
    """Edge rays at vertex vi, ordered by walking the facet fan around it."""
    f0 = min(P.vertex_facet_set(vi))
    v = P.vertices[vi]
    s = P.facet_successor(f0, vi)
    gens = [_sub(P.vertices[s], v)]
    f = f0
    while True:
        f = P.facet_for_directed_edge(s, vi)
        if f == f0:
            break
        s = P.facet_successor(f, vi)
        gens.append(_sub(P.vertices[s], v))
    return gens


def dihedral_angle_fraction(P: ConvexPolytope3, edge_index: int) -> float:
    """Interior dihedral angle along an edge divided by 2pi.

    The dihedral equals pi minus the angle between the two adjacent outward
    facet normals, which are exact integer vectors.
    """
    f1, f2 = P.edge_facet_pair(edge_index)
    n1, _ = P.facet_planes[f1]
    n2, _ = P.facet_planes[f2]
    cosang = _dot(n1, n2) / math.sqrt(_dot(n1, n1) * _dot(n2, n2))
    cosang = max(-1.0, min(1.0, cosang))
    return (math.pi - math.acos(cosang)) / TWO_PI


def weight_3d(P: ConvexPolytope3, n: Sequence[int]) -> float:
    """Value of the regularized indicator of P at the lattice point n."""
    loc = locate_point(P, n)
    return _weight_from_location_3d(P, loc)


def _weight_from_location_3d(P: ConvexPolytope3, loc: PointLocation) -> float:
    if loc.kind is LocationKind.EXTERIOR:
        return 0.0
    if loc.kind is LocationKind.INTERIOR:
        return 1.0
    if loc.kind is LocationKind.FACET_INTERIOR:
        return 0.5
    if loc.kind is LocationKind.EDGE_INTERIOR:
        return dihedral_angle_fraction(P, loc.index)
    return solid_angle_fraction(vertex_cone_generators(P, loc.index))


# ---------------------------------------------------------------------------
# discrete volume


@dataclass(frozen=True)
class WeightBreakdown:
    """Per-point weights of the regularized indicator and their sum.

    Entries are (point, location, weight) for every lattice point with
    nonzero weight, in lexicographic coordinate order; ``total`` is the sum
    in that order.
    """

    entries: tuple[tuple[tuple[int, ...], PointLocation, float], ...]
    total: float

    def to_csv(self) -> str:
        lines = []
        for pt, loc, w in self.entries:
            coords = ",".join(str(c) for c in pt)
            lines.append(f"{coords},{loc.label()},{w:.12g}")
        lines.append(f"TOTAL,,{self.total:.12g}")
        return "\n".join(lines)


def discrete_volume(P: Polytope) -> WeightBreakdown:
    """Regularized discrete volume: the indicator summed over the lattice."""
    entries = []
    for pt, loc in lattice_points_with_location(P):
        if isinstance(P, IntegerPolygon2):
            w = _weight_from_location_2d(P, loc)
        else:
            w = _weight_from_location_3d(P, loc)
        if w != 0.0:
            entries.append((pt, loc, w))
    total = math.fsum(w for _, _, w in entries)
    return WeightBreakdown(tuple(entries), total)


def discrete_volume_closed_form_2d(P: IntegerPolygon2) -> Fraction:
    """Exact value of the 2D discrete volume: I + B/2 - 1.

    Interior points contribute 1, the B - N side points contribute 1/2, and
    the vertex angles sum to pi(N - 2), so the angle fractions add (N - 2)/2.
    """
    interior = interior_lattice_count(P)
    boundary = boundary_lattice_count_2d(P)
    return interior + Fraction(boundary, 2) - 1


# ---------------------------------------------------------------------------
# exact clearance radii


def _point_segment_dist_sq(p, a, b) -> Fraction:
    """Exact squared distance from p to the closed segment [a, b]."""
    e = _sub(b, a)
    w = _sub(p, a)
    t_num = _dot(w, e)
    t_den = _dot(e, e)
    if t_num <= 0:
        return Fraction(_dot(w, w))
    if t_num >= t_den:
        u = _sub(p, b)
        return Fraction(_dot(u, u))
    return Fraction(_dot(w, w) * t_den - t_num * t_num, t_den)


def _point_on_segment_nd(p, a, b) -> bool:
    e = _sub(b, a)
    w = _sub(p, a)
    if len(p) == 2:
        if e[0] * w[1] - e[1] * w[0] != 0:
            return False
    else:
        if _cross3(e, w) != (0, 0, 0):
            return False
    t_num = _dot(w, e)
    return 0 <= t_num <= _dot(e, e)


def _point_facet_dist_sq(P: ConvexPolytope3, p, fi: int) -> Fraction:
    """Exact squared distance from p (rational triple) to facet fi."""
    n, c = P.facet_planes[fi]
    cyc = P.facets[fi]
    s = _dot(n, p) - c
    nn = _dot(n, n)
    foot = tuple(p[k] - Fraction(s * n[k], nn) for k in range(3))
    inside = True
    for k in range(len(cyc)):
        a = P.vertices[cyc[k]]
        b = P.vertices[cyc[(k + 1) % len(cyc)]]
        edge = _sub(b, a)
        rel = _sub(foot, a)
        if _dot(_cross3(edge, rel), n) < 0:
            inside = False
            break
    if inside:
        return Fraction(s * s, nn)
    best = None
    for k in range(len(cyc)):
        a = P.vertices[cyc[k]]
        b = P.vertices[cyc[(k + 1) % len(cyc)]]
        d = _point_segment_dist_sq(p, a, b)
        if best is None or d < best:
            best = d
    return best


def _facet_contains_point(P: ConvexPolytope3, p, fi: int) -> bool:
    n, c = P.facet_planes[fi]
    if _dot(n, p) != c:
        return False
    cyc = P.facets[fi]
    for k in range(len(cyc)):
        a = P.vertices[cyc[k]]
        b = P.vertices[cyc[(k + 1) % len(cyc)]]
        if _dot(_cross3(_sub(b, a), _sub(p, a)), n) < 0:
            return False
    return True


def safe_radius_squared(P: Polytope, x) -> tuple[Fraction, str]:
    """Exact squared distance from x to the nearest non-incident boundary
    piece, with a label naming that piece.

    Non-incident means the edge (2D) or facet (3D) does not contain x, so
    the result is always positive. Inside a ball of this radius the polytope
    looks exactly like the local cone at x.
    """
    pt = _rational_point(x)
    if len(pt) != P.dim:
        raise GeometryError(f"point {x!r} has dimension {len(pt)}, expected {P.dim}")
    best = None
    label = ""
    if isinstance(P, IntegerPolygon2):
        for j, (a, b) in enumerate(P.edges()):
            if _point_on_segment_nd(pt, a, b):
                continue
            d = _point_segment_dist_sq(pt, a, b)
            if best is None or d < best:
                best, label = d, f"edge {j}"
    else:
        for fi in range(len(P.facets)):
            if _facet_contains_point(P, pt, fi):
                continue
            d = _point_facet_dist_sq(P, pt, fi)
            if best is None or d < best:
                best, label = d, f"facet {fi}"
    if best is None:
        raise GeometryError("no non-incident boundary piece; degenerate polytope")
    return best, label


def _min_clearance_sq_2d(P: IntegerPolygon2) -> Fraction:
    """Minimum over bounding-box lattice points of the squared distance to
    the nearest non-incident edge. Pure integer arithmetic with pruning."""
    (xmin, ymin), (xmax, ymax) = P.bounding_box()
    edges = list(P.edges())
    boxes = [
        (min(a[0], b[0]), min(a[1], b[1]), max(a[0], b[0]), max(a[1], b[1]))
        for a, b in edges
    ]
    best_n, best_d = None, 1  # squared distance as a fraction best_n / best_d
    for ny in range(ymin, ymax + 1):
        for nx in range(xmin, xmax + 1):
            p = (nx, ny)
            for (a, b), (bx0, by0, bx1, by1) in zip(edges, boxes):
                if best_n is not None:
                    lx = bx0 - nx if nx < bx0 else (nx - bx1 if nx > bx1 else 0)
                    ly = by0 - ny if ny < by0 else (ny - by1 if ny > by1 else 0)
                    if (lx * lx + ly * ly) * best_d >= best_n:
                        continue
                ex, ey = b[0] - a[0], b[1] - a[1]
                wx, wy = nx - a[0], ny - a[1]
                cross = ex * wy - ey * wx
                t_num = wx * ex + wy * ey
                t_den = ex * ex + ey * ey
                if cross == 0 and 0 <= t_num <= t_den:
                    continue  # point on the edge: incident
                if t_num <= 0:
                    num, den = wx * wx + wy * wy, 1
                elif t_num >= t_den:
                    ux, uy = nx - b[0], ny - b[1]
                    num, den = ux * ux + uy * uy, 1
                else:
                    num, den = cross * cross, t_den
                if best_n is None or num * best_d < best_n * den:
                    best_n, best_d = num, den
    return Fraction(best_n, best_d)


def _min_clearance_sq_3d(P: ConvexPolytope3) -> Fraction:
    lo, hi = P.bounding_box()
    best = None
    for x in range(lo[0], hi[0] + 1):
        for y in range(lo[1], hi[1] + 1):
            for z in range(lo[2], hi[2] + 1):
                p = (x, y, z)
                for fi in range(len(P.facets)):
                    if _facet_contains_point(P, p, fi):
                        continue
                    d = _point_facet_dist_sq(P, p, fi)
                    if best is None or d < best:
                        best = d
    return best


def safe_epsilon_squared(P: Polytope) -> Fraction:
    """Exact square of the mollifier threshold.

    For every scale below the threshold, mollifying the regularized
    indicator leaves its lattice values unchanged: the mollifier's support
    ball (radius scale/2) around any lattice point in the closed bounding
    box stays clear of all non-incident boundary pieces, and lattice points
    outside the box are at distance >= 1 from the polytope. The threshold is
    twice the minimum clearance; this returns its square as an exact
    rational.
    """
    if isinstance(P, IntegerPolygon2):
        clearance = _min_clearance_sq_2d(P)
    else:
        clearance = _min_clearance_sq_3d(P)
    return 4 * min(clearance, Fraction(1))


def safe_epsilon(P: Polytope) -> float:
    """Float value of the mollifier threshold (square root of the exact
    rational bound). Use safe_epsilon_squared for exact comparisons."""
    return math.sqrt(safe_epsilon_squared(P))


# ---------------------------------------------------------------------------
# Monte Carlo local density


@dataclass(frozen=True)
class DensityEstimate:
    """Monte Carlo estimate of the local density |B(x,r) & P| / |B(x,r)|."""

    value: float
    stderr: float
    samples: int
    inside: int


def _inside_mask_2d(P: IntegerPolygon2, pts: np.ndarray) -> np.ndarray:
    x, y = pts[:, 0], pts[:, 1]
    inside = np.zeros(len(pts), dtype=bool)
    for (ax, ay), (bx, by) in P.edges():
        cond = (ay > y) != (by > y)
        with np.errstate(divide="ignore", invalid="ignore"):
            xcross = ax + (y - ay) * (bx - ax) / (by - ay)
        inside ^= cond & (xcross > x)
    return inside


def _inside_mask_3d(P: ConvexPolytope3, pts: np.ndarray) -> np.ndarray:
    inside = np.ones(len(pts), dtype=bool)
    for n, c in P.facet_planes:
        inside &= pts @ np.asarray(n, dtype=float) <= c
    return inside


def local_density(P: Polytope, x, r: float, samples: int, seed: int) -> DensityEstimate:
    """Fraction of a small ball around x covered by P, by seeded sampling.

    The ball must stay strictly inside the clearance radius of x, so the
    true density is exactly the regularized indicator value at x. Sampling
    uses a counter-based 64-bit generator; results are reproducible given
    the seed.
    """
    if samples < 1:
        raise PreconditionError("samples must be >= 1")
    pt = _rational_point(x)
    r_exact = Fraction(r)
    if r_exact <= 0:
        raise PreconditionError("radius must be positive")
    min_sq, label = safe_radius_squared(P, pt)
    if r_exact * r_exact >= min_sq:
        raise PreconditionError(
            f"radius {r} reaches non-incident {label} of the polytope "
            f"(squared clearance {min_sq}); local density would not equal "
            f"the indicator value"
        )
    rng = np.random.Generator(np.random.Philox(seed))
    center = np.array([float(c) for c in pt])
    d = P.dim
    accepted = []
    need = samples
    while need > 0:
        batch = max(64, int(need / 0.5) + 16)
        cube = rng.uniform(-r, r, size=(batch, d))
        keep = (cube * cube).sum(axis=1) <= r * r
        pts = cube[keep]
        if len(pts) > need:
            pts = pts[:need]
        accepted.append(pts)
        need -= len(pts)
    ball = np.concatenate(accepted) + center
    if isinstance(P, IntegerPolygon2):
        mask = _inside_mask_2d(P, ball)
    else:
        mask = _inside_mask_3d(P, ball)
    inside = int(mask.sum())
    p = inside / samples
    stderr = math.sqrt(p * (1.0 - p) / samples)
    return DensityEstimate(p, stderr, samples, inside)
