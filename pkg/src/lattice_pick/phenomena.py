"""Concreteness, Reeve tetrahedra, zonotopes, symmetry certificates and
sampled multi-tiling multiplicities.

A polytope is concrete when its regularized discrete volume equals its
Euclidean measure. Central symmetry of the body and of every facet
certifies that the polytope multi-tiles space under integer translations,
and a multi-tiler covers generic points a constant number of times equal to
its volume; both sides are checked here, one exactly and one by seeded
sampling.
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
    Polytope,
    PreconditionError,
    _as_int,
    _cross2,
    _cross3,
    _det3,
    _dot,
    _rational_point,
    _sub,
    convex_hull_2d,
    locate_point,
    measure,
)
from .solid_angle import discrete_volume

_SAMPLE_DENOMINATOR = 1 << 40


# ---------------------------------------------------------------------------
# named polytopes


def reeve_tetrahedron(N: int) -> ConvexPolytope3:
    """Tetrahedron (0,0,0), (1,0,0), (0,1,0), (1,1,N): volume N/6 with no
    lattice points beyond its four vertices."""
    N = _as_int(N)
    if N < 1:
        raise PreconditionError(f"Reeve parameter must be >= 1, got {N}")
    vertices = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, N)]
    facets = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    return ConvexPolytope3(vertices, facets)


def delta_simplex() -> ConvexPolytope3:
    """Tetrahedron (0,0,0), (1,0,0), (1,1,0), (1,1,1): reflecting it in its
    facets rebuilds the unit cube, so discrete and continuous volume agree
    at 1/6 even though it is not centrally symmetric."""
    vertices = [(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1)]
    facets = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    return ConvexPolytope3(vertices, facets)


# ---------------------------------------------------------------------------
# concreteness


@dataclass(frozen=True)
class ConcretenessVerdict:
    continuous_volume: Fraction
    discrete_volume: float
    delta: float
    concrete: bool


def is_concrete(P: Polytope, tol: float) -> ConcretenessVerdict:
    """Compare the regularized discrete volume with the exact measure."""
    if not tol > 0:
        raise PreconditionError("tolerance must be positive")
    vol = measure(P)
    dv = discrete_volume(P).total
    delta = dv - float(vol)
    return ConcretenessVerdict(vol, dv, delta, abs(delta) <= tol)


# ---------------------------------------------------------------------------
# central symmetry


def centrally_symmetric(points: Sequence[Sequence[int]]) -> tuple[Fraction, ...] | None:
    """Center of symmetry of a finite lattice point set, or None.

    The only candidate is the midpoint of the bounding box; the test runs
    on doubled coordinates so everything stays integral.
    """
    pts = [tuple(_as_int(c) for c in p) for p in points]
    if not pts:
        raise PreconditionError("empty point set")
    d = len(pts[0])
    if any(len(p) != d for p in pts):
        raise GeometryError("mixed dimensions in point set")
    c2 = tuple(
        min(p[i] for p in pts) + max(p[i] for p in pts) for i in range(d)
    )  # doubled center
    pset = set(pts)
    for p in pset:
        mirrored = tuple(c2[i] - p[i] for i in range(d))
        if mirrored not in pset:
            return None
    return tuple(Fraction(c, 2) for c in c2)


@dataclass(frozen=True)
class SymmetryReport:
    body_center: tuple[Fraction, ...] | None
    body_symmetric: bool
    facets_symmetric: bool
    multitile_certificate: bool


def multitile_certificate_symmetry(P: Polytope) -> SymmetryReport:
    """Certify multi-tiling by central symmetry of the body and all facets.

    2D facets are segments and always symmetric, so body symmetry suffices
    there.
    """
    center = centrally_symmetric(P.vertices)
    body = center is not None
    if isinstance(P, IntegerPolygon2):
        facets = True
    else:
        facets = all(
            centrally_symmetric([P.vertices[i] for i in cyc]) is not None
            for cyc in P.facets
        )
    return SymmetryReport(center, body, facets, body and facets)


# ---------------------------------------------------------------------------
# multiplicity of the integer-translate cover


def multiplicity_at(P: Polytope, x) -> int:
    """Number of integer translates of P whose interior covers x.

    x must be generic: if any candidate translate puts x on the boundary
    the count is ambiguous and the caller should resample.
    """
    pt = _rational_point(x)
    if len(pt) != P.dim:
        raise GeometryError(f"point {x!r} has dimension {len(pt)}, expected {P.dim}")
    lo, hi = P.bounding_box()
    ranges = []
    for i in range(P.dim):
        lam_lo = math.ceil(pt[i] - hi[i])
        lam_hi = math.floor(pt[i] - lo[i])
        ranges.append(range(lam_lo, lam_hi + 1))
    count = 0
    if P.dim == 2:
        candidates = [(a, b) for a in ranges[0] for b in ranges[1]]
    else:
        candidates = [
            (a, b, c) for a in ranges[0] for b in ranges[1] for c in ranges[2]
        ]
    for lam in candidates:
        shifted = tuple(pt[i] - lam[i] for i in range(P.dim))
        loc = locate_point(P, shifted)
        if loc.kind is LocationKind.INTERIOR:
            count += 1
        elif loc.kind is not LocationKind.EXTERIOR:
            raise PreconditionError(
                f"point {x!r} minus translate {lam} lies on the boundary "
                f"({loc.label()}); resample with a generic point"
            )
    return count


@dataclass(frozen=True)
class MultiplicityResult:
    samples: int
    k: int | None
    failures: tuple[tuple[tuple[Fraction, ...], int], ...]


def check_multitiling_sampling(
    P: Polytope, num_samples: int, seed: int
) -> MultiplicityResult:
    """Estimate the covering multiplicity of integer translates of P.

    Draws seeded dyadic rational points in [0,1)^d (denominator 2^40) so
    every membership test is exact, resampling any point that lands on a
    translate boundary. Reports the common multiplicity k if all samples
    agree, otherwise lists the samples that differ from the most common
    value.
    """
    if num_samples < 1:
        raise PreconditionError("num_samples must be >= 1")
    rng = np.random.Generator(np.random.Philox(seed))
    results: list[tuple[tuple[Fraction, ...], int]] = []
    while len(results) < num_samples:
        raw = rng.integers(0, _SAMPLE_DENOMINATOR, size=P.dim)
        x = tuple(Fraction(int(v), _SAMPLE_DENOMINATOR) for v in raw)
        try:
            k = multiplicity_at(P, x)
        except PreconditionError:
            continue
        results.append((x, k))
    counts: dict[int, int] = {}
    for _, k in results:
        counts[k] = counts.get(k, 0) + 1
    modal = max(sorted(counts), key=lambda k: counts[k])
    failures = tuple((x, k) for x, k in results if k != modal)
    return MultiplicityResult(
        samples=num_samples,
        k=modal if not failures else None,
        failures=failures,
    )


# ---------------------------------------------------------------------------
# zonotopes


def _cmp_angle_2d(u: tuple[int, int], v: tuple[int, int]) -> int:
    def half(w):
        return 0 if (w[1] > 0 or (w[1] == 0 and w[0] > 0)) else 1

    hu, hv = half(u), half(v)
    if hu != hv:
        return -1 if hu < hv else 1
    c = _cross2(u, v)
    if c > 0:
        return -1
    if c < 0:
        return 1
    return 0


def zonotope_from_generators(gens: Sequence[Sequence[int]]) -> Polytope:
    """Minkowski sum of integer segments, anchored at nonnegative
    coordinates.

    2D generators must be pairwise non-parallel (each contributes one edge
    direction and its opposite); 3D generators must span space, and the
    facets come out as the maximal planar faces with outward orientation.
    """
    vecs = [tuple(_as_int(c) for c in g) for g in gens]
    if not vecs:
        raise GeometryError("no generators")
    d = len(vecs[0])
    if any(len(v) != d for v in vecs):
        raise GeometryError("mixed generator dimensions")
    if any(all(c == 0 for c in v) for v in vecs):
        raise GeometryError("zero generator")
    if d == 2:
        return _zonotope_2d(vecs)
    if d == 3:
        return _zonotope_3d(vecs)
    raise GeometryError(f"unsupported dimension {d}")


def _zonotope_2d(vecs: list[tuple[int, int]]) -> IntegerPolygon2:
    import functools

    if len(vecs) < 2:
        raise GeometryError("a 2D zonotope needs at least 2 generators")
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            if _cross2(vecs[i], vecs[j]) == 0:
                raise GeometryError(
                    f"generators {i} and {j} are parallel; directions must be distinct"
                )
    upper = [v if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else (-v[0], -v[1]) for v in vecs]
    upper.sort(key=functools.cmp_to_key(_cmp_angle_2d))
    edges = upper + [(-v[0], -v[1]) for v in upper]
    verts = []
    x, y = 0, 0
    for ex, ey in edges:
        verts.append((x, y))
        x, y = x + ex, y + ey
    if (x, y) != (0, 0):
        raise GeometryError("edge walk did not close")  # cannot happen
    xmin = min(v[0] for v in verts)
    ymin = min(v[1] for v in verts)
    return IntegerPolygon2([(vx - xmin, vy - ymin) for vx, vy in verts])


def _zonotope_3d(vecs: list[tuple[int, int, int]]) -> ConvexPolytope3:
    if len(vecs) < 3:
        raise GeometryError("a 3D zonotope needs at least 3 generators")
    if not any(
        _det3(vecs[i], vecs[j], vecs[k]) != 0
        for i in range(len(vecs))
        for j in range(i + 1, len(vecs))
        for k in range(j + 1, len(vecs))
    ):
        raise GeometryError("generators do not span 3D space")
    # all subset sums, translated to nonnegative coordinates
    sums = {(0, 0, 0)}
    for v in vecs:
        sums |= {(s[0] + v[0], s[1] + v[1], s[2] + v[2]) for s in sums}
    shift = tuple(min(s[i] for s in sums) for i in range(3))
    pts = sorted(tuple(s[i] - shift[i] for i in range(3)) for s in sums)

    # candidate facet normals: primitive cross products of generator pairs
    normals = set()
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            n = _cross3(vecs[i], vecs[j])
            if n == (0, 0, 0):
                continue
            g = math.gcd(math.gcd(abs(n[0]), abs(n[1])), abs(n[2]))
            n = (n[0] // g, n[1] // g, n[2] // g)
            normals.add(n)
            normals.add((-n[0], -n[1], -n[2]))

    facets = []
    seen_planes = set()
    vertex_index: dict[tuple[int, int, int], int] = {}
    vertex_list: list[tuple[int, int, int]] = []

    def vid(p):
        if p not in vertex_index:
            vertex_index[p] = len(vertex_list)
            vertex_list.append(p)
        return vertex_index[p]

    for n in sorted(normals):
        c = max(_dot(n, p) for p in pts)
        if (n, c) in seen_planes:
            continue
        seen_planes.add((n, c))
        face_pts = [p for p in pts if _dot(n, p) == c]
        if len(face_pts) < 3:
            continue
        # planar coordinates: (u, w) with u x w aligned to the outward normal
        u = _sub(face_pts[1], face_pts[0])
        w = _cross3(n, u)
        plane = [(_dot(p, u), _dot(p, w)) for p in face_pts]
        if all(_cross2(_sub(plane[1], plane[0]), _sub(q, plane[0])) == 0 for q in plane):
            continue  # collinear: an edge, not a facet
        hull = convex_hull_2d(plane)
        back = {pq: p3 for pq, p3 in zip(plane, face_pts)}
        facets.append([vid(back[q]) for q in hull])

    return ConvexPolytope3(vertex_list, facets)


# ---------------------------------------------------------------------------
# survey


SURVEY_HEADER = (
    "id,volume,discrete_volume,concrete,body_symmetric,facets_symmetric,sampled_k"
)


def conjecture_survey(
    corpus: Sequence[tuple[str, Polytope]],
    tol: float = 1e-6,
    samples: int = 200,
    seed: int = 0,
) -> str:
    """One CSV row per polytope: measure, discrete volume, concreteness,
    symmetry certificate and sampled multiplicity (or FAIL).

    Evidence table only; it reports the measurable columns and decides
    nothing about reflection tilings.
    """
    lines = [SURVEY_HEADER]
    for idx, (pid, P) in enumerate(corpus):
        verdict = is_concrete(P, tol)
        sym = multitile_certificate_symmetry(P)
        tiling = check_multitiling_sampling(P, samples, seed + idx)
        k_col = str(tiling.k) if tiling.k is not None else "FAIL"
        lines.append(
            f"{pid},{verdict.continuous_volume},{verdict.discrete_volume:.12g},"
            f"{str(verdict.concrete).lower()},{str(sym.body_symmetric).lower()},"
            f"{str(sym.facets_symmetric).lower()},{k_col}"
        )
    return "\n".join(lines)
