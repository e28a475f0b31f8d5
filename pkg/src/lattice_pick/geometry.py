"""Exact integer-lattice geometry: polygons, convex polytopes, point location.

All predicates run in arbitrary-precision integer arithmetic. Rational query
points are scaled to a common denominator first, so no floating point ever
enters a geometric decision.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Sequence, Union


class GeometryError(ValueError):
    """Invalid geometric input (bad polygon, bad polytope, bad query)."""


class PreconditionError(ValueError):
    """A documented operation precondition was violated."""


# ---------------------------------------------------------------------------
# small integer-vector helpers


def _as_int(v) -> int:
    try:
        return operator.index(v)
    except TypeError:
        raise GeometryError(f"coordinate {v!r} is not an integer") from None


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _cross2(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _cross3(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _det3(a, b, c):
    return _dot(a, _cross3(b, c))


def orient2d(a, b, c):
    """Sign of the turn a->b->c: twice the signed area of the triangle."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _in_bbox(p, a, b) -> bool:
    return all(min(ai, bi) <= pi <= max(ai, bi) for pi, ai, bi in zip(p, a, b))


def _on_segment(p, a, b) -> bool:
    """p lies on the closed segment [a, b] (2D, exact)."""
    return orient2d(a, b, p) == 0 and _in_bbox(p, a, b)


def _segments_share_point(p1, p2, q1, q2) -> bool:
    """True iff closed segments [p1,p2] and [q1,q2] have any common point."""
    d1 = orient2d(q1, q2, p1)
    d2 = orient2d(q1, q2, p2)
    d3 = orient2d(p1, p2, q1)
    d4 = orient2d(p1, p2, q2)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and (
        (d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)
    ):
        return True
    if d1 == 0 and _in_bbox(p1, q1, q2):
        return True
    if d2 == 0 and _in_bbox(p2, q1, q2):
        return True
    if d3 == 0 and _in_bbox(q1, p1, p2):
        return True
    if d4 == 0 and _in_bbox(q2, p1, p2):
        return True
    return False


def _gcd_vec(v) -> int:
    g = 0
    for x in v:
        g = math.gcd(g, abs(x))
    return g


# ---------------------------------------------------------------------------
# point location result


class LocationKind(Enum):
    EXTERIOR = "exterior"
    INTERIOR = "interior"
    FACET_INTERIOR = "facet"
    EDGE_INTERIOR = "edge"
    VERTEX = "vertex"


@dataclass(frozen=True)
class PointLocation:
    """Where a query point sits relative to a polygon or polytope.

    ``index`` identifies the facet / edge / vertex; it is None for the
    exterior and interior cases. In 2D, EDGE_INTERIOR means the interior of
    side ``index`` (the edge from vertex ``index`` to ``index + 1``).
    """

    kind: LocationKind
    index: int | None = None

    @property
    def on_boundary(self) -> bool:
        return self.kind not in (LocationKind.EXTERIOR, LocationKind.INTERIOR)

    def label(self) -> str:
        if self.index is None:
            return self.kind.value
        return f"{self.kind.value}:{self.index}"


_EXTERIOR = PointLocation(LocationKind.EXTERIOR)
_INTERIOR = PointLocation(LocationKind.INTERIOR)


Rational = Union[int, Fraction]


def _rational_point(x) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(c) for c in x)
    except (TypeError, ValueError):
        raise GeometryError(f"{x!r} is not a rational point") from None


def _scale_to_integers(x: Sequence[Fraction]) -> tuple[tuple[int, ...], int]:
    """Return (D*x, D) with D the least common denominator of x."""
    den = 1
    for c in x:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return tuple(int(c * den) for c in x), den


# ---------------------------------------------------------------------------
# 2D polygons


class IntegerPolygon2:
    """Simple polygon with integer vertices, stored counterclockwise.

    The constructor validates: at least 3 vertices, no repeated consecutive
    vertices, no collinear consecutive triples, no self intersection. A
    clockwise vertex list is reversed so the stored orientation is canonical.
    """

    __slots__ = ("vertices",)

    dim = 2

    def __init__(self, vertices: Sequence[Sequence[int]]):
        vs = [(_as_int(v[0]), _as_int(v[1])) for v in vertices]
        n = len(vs)
        if n < 3:
            raise GeometryError(f"polygon needs at least 3 vertices, got {n}")
        for i in range(n):
            if vs[i] == vs[(i + 1) % n]:
                raise GeometryError(f"repeated consecutive vertex at index {i}")
        for i in range(n):
            a, b, c = vs[i - 1], vs[i], vs[(i + 1) % n]
            if orient2d(a, b, c) == 0:
                raise GeometryError(f"collinear consecutive vertices at index {i}")
        # O(n^2) pairwise exact test; non-adjacent edges may not touch at all.
        for i in range(n):
            p1, p2 = vs[i], vs[(i + 1) % n]
            for j in range(i + 1, n):
                if j == i + 1 or (i == 0 and j == n - 1):
                    continue
                q1, q2 = vs[j], vs[(j + 1) % n]
                if _segments_share_point(p1, p2, q1, q2):
                    raise GeometryError(
                        f"polygon is not simple: edges {i} and {j} intersect"
                    )
        doubled = sum(_cross2(vs[i], vs[(i + 1) % n]) for i in range(n))
        if doubled == 0:
            raise GeometryError("polygon has zero area")
        if doubled < 0:
            vs.reverse()
        self.vertices: tuple[tuple[int, int], ...] = tuple(vs)

    # -- basic accessors ---------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    def edges(self) -> Iterator[tuple[tuple[int, int], tuple[int, int]]]:
        vs = self.vertices
        for i in range(len(vs)):
            yield vs[i], vs[(i + 1) % len(vs)]

    def edge(self, j: int) -> tuple[tuple[int, int], tuple[int, int]]:
        vs = self.vertices
        return vs[j], vs[(j + 1) % len(vs)]

    def bounding_box(self) -> tuple[tuple[int, int], tuple[int, int]]:
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        return (min(xs), min(ys)), (max(xs), max(ys))

    def doubled_area(self) -> int:
        vs = self.vertices
        return sum(_cross2(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    def outward_normals(self) -> list[tuple[int, int]]:
        """Non-normalized outward edge normals; |normal| = edge length."""
        return [(b[1] - a[1], -(b[0] - a[0])) for a, b in self.edges()]

    def translate(self, vec: Sequence[int]) -> "IntegerPolygon2":
        dx, dy = _as_int(vec[0]), _as_int(vec[1])
        return IntegerPolygon2([(x + dx, y + dy) for x, y in self.vertices])

    def __eq__(self, other) -> bool:
        return isinstance(other, IntegerPolygon2) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        return f"IntegerPolygon2({list(self.vertices)!r})"


def area_2d(P: IntegerPolygon2) -> Fraction:
    """Exact shoelace area; always a multiple of 1/2."""
    return Fraction(P.doubled_area(), 2)


def boundary_lattice_count_2d(P: IntegerPolygon2) -> int:
    """Number of lattice points on the boundary: sum of edge gcds."""
    return sum(math.gcd(abs(b[0] - a[0]), abs(b[1] - a[1])) for a, b in P.edges())


def _locate_scaled_2d(P: IntegerPolygon2, X: tuple[int, int], den: int) -> PointLocation:
    """Locate the rational point X/den against P, all in integers."""
    vs = [(den * x, den * y) for x, y in P.vertices]
    n = len(vs)
    for i, v in enumerate(vs):
        if v == X:
            return PointLocation(LocationKind.VERTEX, i)
    for i in range(n):
        a, b = vs[i], vs[(i + 1) % n]
        if _on_segment(X, a, b):
            return PointLocation(LocationKind.EDGE_INTERIOR, i)
    # Even-odd ray crossing with the strict straddle rule; boundary cases
    # are already excluded, so parity is reliable.
    inside = False
    for i in range(n):
        a, b = vs[i], vs[(i + 1) % n]
        if (a[1] > X[1]) != (b[1] > X[1]):
            side = orient2d(a, b, X)
            if b[1] > a[1]:
                if side > 0:
                    inside = not inside
            else:
                if side < 0:
                    inside = not inside
    return _INTERIOR if inside else _EXTERIOR


def _boundary_points_2d(P: IntegerPolygon2) -> dict[tuple[int, int], PointLocation]:
    """All boundary lattice points with their exact locations."""
    out: dict[tuple[int, int], PointLocation] = {}
    vs = P.vertices
    for j in range(len(vs)):
        a, b = vs[j], vs[(j + 1) % len(vs)]
        out[a] = PointLocation(LocationKind.VERTEX, j)
        dx, dy = b[0] - a[0], b[1] - a[1]
        g = math.gcd(abs(dx), abs(dy))
        sx, sy = dx // g, dy // g
        for k in range(1, g):
            out[(a[0] + k * sx, a[1] + k * sy)] = PointLocation(
                LocationKind.EDGE_INTERIOR, j
            )
    return out


def _row_crossings(P: IntegerPolygon2, y: int) -> list[Fraction]:
    """Sorted x-coordinates where the boundary crosses the line at height y,
    using the same strict straddle rule as the parity test."""
    xs = []
    for a, b in P.edges():
        if (a[1] > y) != (b[1] > y):
            xs.append(Fraction(a[0] * (b[1] - a[1]) + (y - a[1]) * (b[0] - a[0]), b[1] - a[1]))
    xs.sort()
    return xs


def _ceil_fraction(f: Fraction) -> int:
    return -((-f.numerator) // f.denominator)


def _floor_fraction(f: Fraction) -> int:
    return f.numerator // f.denominator


def interior_lattice_count_2d(P: IntegerPolygon2) -> int:
    import bisect

    boundary = _boundary_points_2d(P)
    by_row: dict[int, list[int]] = {}
    for (x, y) in boundary:
        by_row.setdefault(y, []).append(x)
    for xs in by_row.values():
        xs.sort()
    (xmin, ymin), (xmax, ymax) = P.bounding_box()
    count = 0
    for y in range(ymin, ymax + 1):
        xs = _row_crossings(P, y)
        row_boundary = by_row.get(y, [])
        for i in range(0, len(xs), 2):
            lo = _ceil_fraction(xs[i])
            hi = _floor_fraction(xs[i + 1])
            if hi < lo:
                continue
            count += hi - lo + 1
            count -= bisect.bisect_right(row_boundary, hi) - bisect.bisect_left(
                row_boundary, lo
            )
    return count


def _lattice_points_with_location_2d(
    P: IntegerPolygon2,
) -> list[tuple[tuple[int, int], PointLocation]]:
    boundary = _boundary_points_2d(P)
    pts: list[tuple[tuple[int, int], PointLocation]] = list(boundary.items())
    (xmin, ymin), (xmax, ymax) = P.bounding_box()
    for y in range(ymin, ymax + 1):
        xs = _row_crossings(P, y)
        for i in range(0, len(xs), 2):
            lo = _ceil_fraction(xs[i])
            hi = _floor_fraction(xs[i + 1])
            for x in range(lo, hi + 1):
                if (x, y) not in boundary:
                    pts.append(((x, y), _INTERIOR))
    pts.sort(key=lambda item: item[0])
    return pts


# ---------------------------------------------------------------------------
# 3D convex polytopes


class ConvexPolytope3:
    """Convex polytope with integer vertices and explicitly listed facets.

    Facets are vertex-index cycles, counterclockwise as seen from outside;
    a clockwise input cycle is reversed during construction. Validation
    covers planarity, convexity, edge pairing and vertex incidence, all in
    exact integer arithmetic.
    """

    __slots__ = (
        "vertices",
        "facets",
        "facet_planes",
        "edge_list",
        "_edge_facets",
        "_dir_edge_facet",
        "_vertex_facets",
    )

    dim = 3

    def __init__(self, vertices, facets):
        vs = tuple(
            (_as_int(v[0]), _as_int(v[1]), _as_int(v[2])) for v in vertices
        )
        if len(vs) < 4:
            raise GeometryError("polytope needs at least 4 vertices")
        if len(set(vs)) != len(vs):
            raise GeometryError("duplicate vertices")
        nv = len(vs)
        cycles = []
        for fi, cyc in enumerate(facets):
            c = tuple(_as_int(i) for i in cyc)
            if len(c) < 3:
                raise GeometryError(f"facet {fi} has fewer than 3 vertices")
            if any(i < 0 or i >= nv for i in c):
                raise GeometryError(f"facet {fi} has a vertex index out of range")
            if len(set(c)) != len(c):
                raise GeometryError(f"facet {fi} repeats a vertex")
            cycles.append(list(c))
        if len(cycles) < 4:
            raise GeometryError("polytope needs at least 4 facets")

        vsum = (sum(v[0] for v in vs), sum(v[1] for v in vs), sum(v[2] for v in vs))
        planes = []
        oriented = []
        for fi, cyc in enumerate(cycles):
            pts = [vs[i] for i in cyc]
            normal = None
            for k in range(len(pts)):
                n = _cross3(
                    _sub(pts[(k + 1) % len(pts)], pts[k]),
                    _sub(pts[(k + 2) % len(pts)], pts[(k + 1) % len(pts)]),
                )
                if n != (0, 0, 0):
                    normal = n
                    break
            if normal is None:
                raise GeometryError(f"facet {fi} is degenerate")
            c = _dot(normal, pts[0])
            if any(_dot(normal, p) != c for p in pts):
                raise GeometryError(f"facet {fi} is not planar")
            # orient outward: polytope centroid strictly on the negative side
            side = _dot(normal, vsum) - nv * c
            if side == 0:
                raise GeometryError(f"facet {fi} passes through the centroid (flat polytope)")
            if side > 0:
                cyc = list(reversed(cyc))
                normal = tuple(-x for x in normal)
                c = -c
                pts = [vs[i] for i in cyc]
            # c = normal . p0 is divisible by gcd(normal) because the reduced
            # normal is still an integer vector and p0 is a lattice point
            g = _gcd_vec(normal)
            normal = tuple(x // g for x in normal)
            c //= g
            for w in vs:
                if _dot(normal, w) > c:
                    raise GeometryError(f"vertex {w} is outside facet {fi}: not convex")
            for k in range(len(pts)):
                a, b, d = pts[k], pts[(k + 1) % len(pts)], pts[(k + 2) % len(pts)]
                turn = _dot(_cross3(_sub(b, a), _sub(d, b)), normal)
                if turn == 0:
                    raise GeometryError(f"facet {fi} has collinear consecutive vertices")
                if turn < 0:
                    raise GeometryError(f"facet {fi} cycle is not convex")
            oriented.append(tuple(cyc))
            planes.append((normal, c))

        dir_edge: dict[tuple[int, int], int] = {}
        for fi, cyc in enumerate(oriented):
            for k in range(len(cyc)):
                e = (cyc[k], cyc[(k + 1) % len(cyc)])
                if e in dir_edge:
                    raise GeometryError(f"directed edge {e} appears twice")
                dir_edge[e] = fi
        for (u, v) in dir_edge:
            if (v, u) not in dir_edge:
                raise GeometryError(
                    f"edge {(u, v)} lacks an opposite traversal: surface not closed"
                )
        edge_set = sorted({(min(u, v), max(u, v)) for (u, v) in dir_edge})
        edge_facets = tuple(
            (dir_edge[(u, v)], dir_edge[(v, u)]) for (u, v) in edge_set
        )
        vertex_facets: list[set[int]] = [set() for _ in range(nv)]
        for fi, cyc in enumerate(oriented):
            for i in cyc:
                vertex_facets[i].add(fi)
        for i, fs in enumerate(vertex_facets):
            if len(fs) < 3:
                raise GeometryError(f"vertex {i} lies on fewer than 3 facets")
        if nv - len(edge_set) + len(oriented) != 2:
            raise GeometryError("vertex/edge/facet counts violate Euler's relation")

        self.vertices = vs
        self.facets = tuple(oriented)
        self.facet_planes = tuple(planes)
        self.edge_list = tuple(edge_set)
        self._edge_facets = edge_facets
        self._dir_edge_facet = dir_edge
        self._vertex_facets = tuple(frozenset(s) for s in vertex_facets)

        if _six_volume(self) <= 0:
            raise GeometryError("polytope has non-positive volume")

    # -- accessors ----------------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    def bounding_box(self):
        lo = tuple(min(v[i] for v in self.vertices) for i in range(3))
        hi = tuple(max(v[i] for v in self.vertices) for i in range(3))
        return lo, hi

    def edge_facet_pair(self, edge_index: int) -> tuple[int, int]:
        return self._edge_facets[edge_index]

    def facet_successor(self, facet_index: int, vertex_index: int) -> int:
        cyc = self.facets[facet_index]
        return cyc[(cyc.index(vertex_index) + 1) % len(cyc)]

    def facet_for_directed_edge(self, u: int, v: int) -> int:
        return self._dir_edge_facet[(u, v)]

    def vertex_facet_set(self, vertex_index: int) -> frozenset[int]:
        return self._vertex_facets[vertex_index]

    def translate(self, vec: Sequence[int]) -> "ConvexPolytope3":
        d = tuple(_as_int(c) for c in vec)
        return ConvexPolytope3(
            [_add(v, d) for v in self.vertices], [list(c) for c in self.facets]
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ConvexPolytope3)
            and self.vertices == other.vertices
            and self.facets == other.facets
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.facets))

    def __repr__(self) -> str:
        return (
            f"ConvexPolytope3({len(self.vertices)} vertices, "
            f"{len(self.facets)} facets)"
        )


def _six_volume(P: ConvexPolytope3) -> int:
    """Six times the volume: signed tetrahedra fanned from the origin."""
    total = 0
    for cyc in P.facets:
        p0 = P.vertices[cyc[0]]
        for k in range(1, len(cyc) - 1):
            total += _det3(p0, P.vertices[cyc[k]], P.vertices[cyc[k + 1]])
    return total


def volume_3d(P: ConvexPolytope3) -> Fraction:
    """Exact volume; always a multiple of 1/6."""
    return Fraction(_six_volume(P), 6)


def _classify_scaled_3d(P: ConvexPolytope3, X: tuple[int, int, int], den: int) -> PointLocation:
    active = []
    for fi, (n, c) in enumerate(P.facet_planes):
        s = _dot(n, X) - den * c
        if s > 0:
            return _EXTERIOR
        if s == 0:
            active.append(fi)
    if not active:
        return _INTERIOR
    if len(active) == 1:
        return PointLocation(LocationKind.FACET_INTERIOR, active[0])
    if len(active) == 2:
        pair = (min(active), max(active))
        for ei, fp in enumerate(P._edge_facets):
            if (min(fp), max(fp)) == pair:
                return PointLocation(LocationKind.EDGE_INTERIOR, ei)
        raise GeometryError(f"facets {pair} share a point but no edge")
    for vi, v in enumerate(P.vertices):
        if tuple(den * c for c in v) == X:
            return PointLocation(LocationKind.VERTEX, vi)
    raise GeometryError("point on 3+ facet planes is not a vertex; inconsistent polytope")


# ---------------------------------------------------------------------------
# shared generic operations


Polytope = Union[IntegerPolygon2, ConvexPolytope3]


def locate_point(P: Polytope, x) -> PointLocation:
    """Exact location of a rational point relative to P."""
    pt = _rational_point(x)
    if len(pt) != P.dim:
        raise GeometryError(f"point {x!r} has dimension {len(pt)}, expected {P.dim}")
    X, den = _scale_to_integers(pt)
    if isinstance(P, IntegerPolygon2):
        return _locate_scaled_2d(P, X, den)
    return _classify_scaled_3d(P, X, den)


def dilate(P: Polytope, t: int) -> Polytope:
    """Scale all vertex coordinates by the positive integer t."""
    t = _as_int(t)
    if t < 1:
        raise PreconditionError(f"dilation factor must be >= 1, got {t}")
    if isinstance(P, IntegerPolygon2):
        return IntegerPolygon2([(t * x, t * y) for x, y in P.vertices])
    return ConvexPolytope3(
        [tuple(t * c for c in v) for v in P.vertices], [list(c) for c in P.facets]
    )


def lattice_points_with_location(
    P: Polytope,
) -> list[tuple[tuple[int, ...], PointLocation]]:
    """Lattice points of the closed polytope with their exact locations,
    in lexicographic coordinate order."""
    if isinstance(P, IntegerPolygon2):
        return _lattice_points_with_location_2d(P)
    lo, hi = P.bounding_box()
    out = []
    for x in range(lo[0], hi[0] + 1):
        for y in range(lo[1], hi[1] + 1):
            for z in range(lo[2], hi[2] + 1):
                loc = _classify_scaled_3d(P, (x, y, z), 1)
                if loc.kind is not LocationKind.EXTERIOR:
                    out.append(((x, y, z), loc))
    return out


def lattice_points_in(P: Polytope) -> Iterator[tuple[int, ...]]:
    """Stream the lattice points of the closed polytope."""
    for pt, _loc in lattice_points_with_location(P):
        yield pt


def interior_lattice_count(P: Polytope) -> int:
    """Number of lattice points strictly inside P."""
    if isinstance(P, IntegerPolygon2):
        return interior_lattice_count_2d(P)
    lo, hi = P.bounding_box()
    count = 0
    for x in range(lo[0], hi[0] + 1):
        for y in range(lo[1], hi[1] + 1):
            for z in range(lo[2], hi[2] + 1):
                if _classify_scaled_3d(P, (x, y, z), 1).kind is LocationKind.INTERIOR:
                    count += 1
    return count


def measure(P: Polytope) -> Fraction:
    """Area in 2D, volume in 3D, exact."""
    if isinstance(P, IntegerPolygon2):
        return area_2d(P)
    return volume_3d(P)


def is_convex_polygon(P: IntegerPolygon2) -> bool:
    vs = P.vertices
    n = len(vs)
    return all(
        orient2d(vs[i - 1], vs[i], vs[(i + 1) % n]) > 0 for i in range(n)
    )


# ---------------------------------------------------------------------------
# exact 2D convex hull (used by zonotope facet assembly)


def convex_hull_2d(points: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    """Convex hull of integer points, counterclockwise, collinear points
    dropped. Andrew's monotone chain with exact orientation tests."""
    pts = sorted(set(points))
    if len(pts) < 3:
        return pts
    lower: list[tuple[int, int]] = []
    for p in pts:
        while len(lower) >= 2 and orient2d(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[tuple[int, int]] = []
    for p in reversed(pts):
        while len(upper) >= 2 and orient2d(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]
