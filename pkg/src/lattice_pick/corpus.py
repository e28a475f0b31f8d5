"""Deterministic polygon corpus for verification runs.

Random convex polygons come from integer edge vectors that sum to zero,
merged by direction and sorted by angle, so construction never produces a
self intersection. A fixed hand-written set of simple non-convex shapes
(reflex vertices, staircases, combs, dented stars) rounds out the corpus.
"""

from __future__ import annotations

import functools
import math

import numpy as np

from .geometry import IntegerPolygon2
from .phenomena import _cmp_angle_2d

COORD_BOUND = 50
MAX_VERTICES = 12


def random_convex_polygon(
    rng: np.random.Generator,
    max_vertices: int = MAX_VERTICES,
    entry_bound: int = 4,
    coord_bound: int = COORD_BOUND,
) -> IntegerPolygon2:
    """Random convex lattice polygon with at most max_vertices vertices and
    coordinates in [0, coord_bound]."""
    while True:
        k = int(rng.integers(3, max_vertices))  # leave room for the closing vector
        vecs = [tuple(int(c) for c in v) for v in rng.integers(-entry_bound, entry_bound + 1, size=(k, 2))]
        vecs = [v for v in vecs if v != (0, 0)]
        closing = (-sum(v[0] for v in vecs), -sum(v[1] for v in vecs))
        if closing != (0, 0):
            vecs.append(closing)
        # merge vectors pointing the same way; same-direction edges would
        # produce collinear consecutive vertices
        grouped: dict[tuple[int, int], tuple[int, int]] = {}
        for v in vecs:
            g = math.gcd(abs(v[0]), abs(v[1]))
            key = (v[0] // g, v[1] // g)
            if key in grouped:
                w = grouped[key]
                grouped[key] = (w[0] + v[0], w[1] + v[1])
            else:
                grouped[key] = v
        edges = [v for v in grouped.values() if v != (0, 0)]
        if len(edges) < 3 or len(edges) > max_vertices:
            continue
        edges.sort(key=functools.cmp_to_key(_cmp_angle_2d))
        verts = []
        x, y = 0, 0
        for ex, ey in edges:
            verts.append((x, y))
            x, y = x + ex, y + ey
        if (x, y) != (0, 0):
            continue  # merging collapsed opposite directions inconsistently
        xmin = min(v[0] for v in verts)
        ymin = min(v[1] for v in verts)
        verts = [(vx - xmin, vy - ymin) for vx, vy in verts]
        if max(max(v) for v in verts) > coord_bound:
            continue
        return IntegerPolygon2(verts)


def fixed_nonconvex_polygons() -> list[IntegerPolygon2]:
    """Hand-written simple non-convex polygons, each with reflex vertices."""
    shapes = [
        # L-shapes
        [(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)],
        [(0, 0), (4, 0), (4, 2), (2, 2), (2, 4), (0, 4)],
        [(0, 0), (5, 0), (5, 1), (1, 1), (1, 5), (0, 5)],
        # T-shape
        [(0, 0), (6, 0), (6, 2), (4, 2), (4, 4), (2, 4), (2, 2), (0, 2)],
        # plus sign
        [(1, 0), (2, 0), (2, 1), (3, 1), (3, 2), (2, 2), (2, 3), (1, 3), (1, 2), (0, 2), (0, 1), (1, 1)],
        # comb with two teeth
        [(0, 0), (5, 0), (5, 3), (4, 3), (4, 1), (3, 1), (3, 3), (2, 3), (2, 1), (1, 1), (1, 3), (0, 3)],
        # dented square
        [(0, 0), (4, 0), (4, 4), (2, 2), (0, 4)],
        # four-pointed star
        [(0, 0), (4, 1), (8, 0), (7, 4), (8, 8), (4, 7), (0, 8), (1, 4)],
        # chevron band
        [(0, 0), (4, 2), (8, 0), (8, 3), (4, 5), (0, 3)],
        # lightning strip
        [(0, 0), (3, 0), (3, 2), (6, 2), (6, 5), (5, 5), (5, 3), (2, 3), (2, 1), (0, 1)],
        # spiral arm
        [(0, 0), (6, 0), (6, 6), (2, 6), (2, 3), (3, 3), (3, 5), (5, 5), (5, 1), (0, 1)],
        # notched rectangle
        [(0, 0), (7, 0), (7, 3), (5, 3), (5, 2), (6, 2), (6, 1), (1, 1), (1, 2), (3, 2), (3, 3), (0, 3)],
    ]
    polygons = [IntegerPolygon2(s) for s in shapes]
    # staircases under the diagonal: reflex at every inner stair corner
    for k in range(2, 6):
        steps = [(0, 0)]
        for i in range(k):
            steps.append((i + 1, i))
            steps.append((i + 1, i + 1))
        steps.append((0, k))
        polygons.append(IntegerPolygon2(steps))
    return polygons


def polygon_corpus(
    count: int = 100, seed: int = 20260801, include_nonconvex: bool = True
) -> list[tuple[str, IntegerPolygon2]]:
    """Deterministic corpus of simple lattice polygons.

    With include_nonconvex, the fixed non-convex shapes are appended after
    the random convex ones; ``count`` is the total size.
    """
    rng = np.random.Generator(np.random.Philox(seed))
    fixed = fixed_nonconvex_polygons() if include_nonconvex else []
    n_random = max(0, count - len(fixed))
    out: list[tuple[str, IntegerPolygon2]] = []
    for i in range(n_random):
        out.append((f"convex{i:03d}", random_convex_polygon(rng)))
    for i, poly in enumerate(fixed[: count - n_random]):
        out.append((f"nonconvex{i:03d}", poly))
    return out
