from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lattice_pick.geometry import (
    ConvexPolytope3,
    GeometryError,
    IntegerPolygon2,
    LocationKind,
    PreconditionError,
    area_2d,
    boundary_lattice_count_2d,
    dilate,
    interior_lattice_count,
    lattice_points_in,
    lattice_points_with_location,
    locate_point,
    volume_3d,
)
from lattice_pick.phenomena import delta_simplex, reeve_tetrahedron

from helpers import (
    boundary_points_brute,
    interior_points_shapely,
    shapely_classify,
    unit_cube_handmade,
)

SQUARE2 = [(0, 0), (2, 0), (2, 2), (0, 2)]
TRIANGLE = [(0, 0), (4, 0), (0, 4)]
HEXAGON = [(0, 0), (1, 0), (2, 1), (2, 2), (1, 2), (0, 1)]
LSHAPE = [(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]


# ---------------------------------------------------------------------------
# construction


def test_rejects_too_few_vertices():
    with pytest.raises(GeometryError, match="at least 3"):
        IntegerPolygon2([(0, 0), (1, 0)])


def test_rejects_repeated_consecutive_vertex():
    with pytest.raises(GeometryError, match="repeated"):
        IntegerPolygon2([(0, 0), (0, 0), (1, 0), (0, 1)])


def test_rejects_collinear_consecutive_vertices():
    with pytest.raises(GeometryError, match="collinear"):
        IntegerPolygon2([(0, 0), (1, 0), (2, 0), (0, 2)])


def test_rejects_collinear_wraparound():
    with pytest.raises(GeometryError, match="collinear"):
        IntegerPolygon2([(1, 0), (2, 2), (0, 0), (2, 0)])


def test_rejects_self_intersection():
    with pytest.raises(GeometryError, match="not simple"):
        IntegerPolygon2([(0, 0), (2, 2), (2, 0), (0, 2)])  # bowtie


def test_rejects_touching_edges():
    # spike touches the opposite edge at (1, 0)
    with pytest.raises(GeometryError, match="not simple"):
        IntegerPolygon2([(0, 0), (2, 0), (2, 2), (1, 0), (0, 2)])


def test_rejects_non_integer_coordinates():
    with pytest.raises(GeometryError, match="not an integer"):
        IntegerPolygon2([(0, 0), (1.5, 0), (0, 1)])


def test_clockwise_input_is_reoriented():
    ccw = IntegerPolygon2(SQUARE2)
    cw = IntegerPolygon2(list(reversed(SQUARE2)))
    assert cw.doubled_area() > 0
    assert set(cw.vertices) == set(ccw.vertices)
    assert area_2d(cw) == area_2d(ccw)


# ---------------------------------------------------------------------------
# measures and counts


@pytest.mark.parametrize(
    "vertices,expected",
    [
        (SQUARE2, Fraction(4)),
        (TRIANGLE, Fraction(8)),
        # hand shoelace: cross terms 0+1+2+2+1+0 = 6, area 3
        (HEXAGON, Fraction(3)),
        (LSHAPE, Fraction(3)),
    ],
)
def test_area_examples(vertices, expected):
    assert area_2d(IntegerPolygon2(vertices)) == expected


@pytest.mark.parametrize(
    "vertices,expected",
    [
        (SQUARE2, 8),
        (TRIANGLE, 12),  # per-edge gcds 4 + 4 + 4
        (HEXAGON, 6),  # all edges primitive
        (LSHAPE, 8),
    ],
)
def test_boundary_count_examples(vertices, expected):
    assert boundary_lattice_count_2d(IntegerPolygon2(vertices)) == expected


def test_boundary_count_matches_brute_enumeration(corpus_sample):
    for pid, P in corpus_sample:
        assert boundary_lattice_count_2d(P) == len(boundary_points_brute(P)), pid


@pytest.mark.parametrize(
    "vertices,expected",
    [(TRIANGLE, 3), (HEXAGON, 1), (LSHAPE, 0), (SQUARE2, 1)],
)
def test_interior_count_examples(vertices, expected):
    assert interior_lattice_count(IntegerPolygon2(vertices)) == expected


def test_interior_points_of_triangle_are_the_known_three():
    P = IntegerPolygon2(TRIANGLE)
    pts = {
        pt
        for pt, loc in lattice_points_with_location(P)
        if loc.kind is LocationKind.INTERIOR
    }
    assert pts == {(1, 1), (1, 2), (2, 1)}


def test_interior_count_matches_shapely(corpus_sample):
    for pid, P in corpus_sample:
        assert interior_lattice_count(P) == len(interior_points_shapely(P)), pid


def test_doubled_area_is_integer(corpus):
    for pid, P in corpus:
        assert (2 * area_2d(P)).denominator == 1, pid


# ---------------------------------------------------------------------------
# point location


def test_locate_unit_square_examples():
    P = IntegerPolygon2([(0, 0), (1, 0), (1, 1), (0, 1)])
    assert locate_point(P, (Fraction(1, 2), Fraction(1, 2))).kind is LocationKind.INTERIOR
    loc = locate_point(P, (Fraction(1, 2), 0))
    assert loc.kind is LocationKind.EDGE_INTERIOR and loc.index == 0
    loc = locate_point(P, (0, 0))
    assert loc.kind is LocationKind.VERTEX and loc.index == 0
    assert locate_point(P, (2, 2)).kind is LocationKind.EXTERIOR


def test_locate_agrees_with_shapely_on_box(corpus):
    kinds = {
        LocationKind.INTERIOR: "interior",
        LocationKind.EDGE_INTERIOR: "boundary",
        LocationKind.VERTEX: "boundary",
        LocationKind.EXTERIOR: "exterior",
    }
    for pid, P in corpus:
        (x0, y0), _ = P.bounding_box()
        for x in range(x0, x0 + 21):
            for y in range(y0, y0 + 21):
                got = kinds[locate_point(P, (x, y)).kind]
                assert got == shapely_classify(P, (x, y)), (pid, x, y)


@given(
    x=st.fractions(min_value=-3, max_value=6, max_denominator=64),
    y=st.fractions(min_value=-3, max_value=6, max_denominator=64),
)
@settings(max_examples=150, deadline=None)
def test_locate_rational_points_agree_with_shapely(x, y):
    P = IntegerPolygon2(HEXAGON)
    kinds = {
        LocationKind.INTERIOR: "interior",
        LocationKind.EDGE_INTERIOR: "boundary",
        LocationKind.VERTEX: "boundary",
        LocationKind.EXTERIOR: "exterior",
    }
    got = kinds[locate_point(P, (x, y)).kind]
    # shapely works in floats; stay away from points it would misclassify
    if got == "boundary":
        return
    assert got == shapely_classify(P, (x, y))


def test_locate_rejects_dimension_mismatch():
    with pytest.raises(GeometryError, match="dimension"):
        locate_point(IntegerPolygon2(SQUARE2), (1, 1, 1))


# ---------------------------------------------------------------------------
# dilation


def test_dilate_square():
    P = IntegerPolygon2([(0, 0), (1, 0), (1, 1), (0, 1)])
    assert dilate(P, 3).vertices == ((0, 0), (3, 0), (3, 3), (0, 3))


def test_dilate_requires_positive_integer():
    P = IntegerPolygon2(SQUARE2)
    with pytest.raises(PreconditionError):
        dilate(P, 0)


def test_dilate_composition_and_scaling():
    P = IntegerPolygon2(HEXAGON)
    assert dilate(P, 6) == dilate(dilate(P, 2), 3)
    assert area_2d(dilate(P, 5)) == 75  # 25 * 3


def test_dilate_delta_simplex():
    D = dilate(delta_simplex(), 2)
    assert D.vertices == ((0, 0, 0), (2, 0, 0), (2, 2, 0), (2, 2, 2))
    assert volume_3d(D) == Fraction(8, 6)


def test_volume_scaling_cubed():
    R = reeve_tetrahedron(3)
    assert volume_3d(dilate(R, 2)) == 8 * volume_3d(R)


# ---------------------------------------------------------------------------
# enumeration


def test_lattice_points_unit_square():
    P = IntegerPolygon2([(0, 0), (1, 0), (1, 1), (0, 1)])
    assert list(lattice_points_in(P)) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_lattice_points_triangle_count():
    assert len(list(lattice_points_in(IntegerPolygon2(TRIANGLE)))) == 15  # B + I


def test_lattice_points_reeve_is_vertices_only():
    R = reeve_tetrahedron(5)
    assert sorted(lattice_points_in(R)) == sorted(R.vertices)


def test_enumeration_is_lexicographic(corpus_sample):
    for pid, P in corpus_sample[:8]:
        pts = list(lattice_points_in(P))
        assert pts == sorted(pts), pid


def test_enumeration_matches_locate(corpus_sample):
    for pid, P in corpus_sample[:6]:
        via_scan = {pt: loc for pt, loc in lattice_points_with_location(P)}
        (x0, y0), (x1, y1) = P.bounding_box()
        for x in range(x0, x1 + 1):
            for y in range(y0, y1 + 1):
                loc = locate_point(P, (x, y))
                if loc.kind is LocationKind.EXTERIOR:
                    assert (x, y) not in via_scan, (pid, x, y)
                else:
                    assert via_scan[(x, y)] == loc, (pid, x, y)


def test_translation_invariance_of_counts():
    P = IntegerPolygon2(HEXAGON)
    Q = P.translate((7, -3))
    assert area_2d(Q) == area_2d(P)
    assert boundary_lattice_count_2d(Q) == boundary_lattice_count_2d(P)
    assert interior_lattice_count(Q) == interior_lattice_count(P)


# ---------------------------------------------------------------------------
# 3D construction and measures


def test_unit_cube_volume():
    assert volume_3d(unit_cube_handmade()) == 1


def test_reeve_volume_is_n_sixths():
    assert volume_3d(reeve_tetrahedron(6)) == 1
    assert volume_3d(reeve_tetrahedron(1)) == Fraction(1, 6)


def test_delta_simplex_volume():
    assert volume_3d(delta_simplex()) == Fraction(1, 6)


def test_six_volume_is_integer():
    for N in (1, 4, 9):
        assert (6 * volume_3d(reeve_tetrahedron(N))).denominator == 1


def test_facet_orientation_is_normalized():
    # both windings of the bottom facet produce the same polytope
    cube = unit_cube_handmade()
    flipped = ConvexPolytope3(
        cube.vertices,
        [(0, 1, 2, 3)] + [list(c) for c in cube.facets[1:]],
    )
    assert volume_3d(flipped) == 1
    assert set(flipped.facets[0]) == {0, 1, 2, 3}


def test_rejects_nonplanar_facet():
    with pytest.raises(GeometryError, match="planar"):
        ConvexPolytope3(
            [(0, 0, 0), (1, 0, 0), (1, 1, 1), (0, 1, 0), (0, 0, 2)],
            [(0, 1, 2, 3), (0, 1, 4), (1, 2, 4), (2, 3, 4), (3, 0, 4)],
        )


def test_rejects_open_surface():
    # square pyramid with one side facet missing
    with pytest.raises(GeometryError, match="opposite traversal"):
        ConvexPolytope3(
            [(0, 0, 0), (2, 0, 0), (2, 2, 0), (0, 2, 0), (1, 1, 1)],
            [(0, 3, 2, 1), (0, 1, 4), (1, 2, 4), (2, 3, 4)],
        )


def test_rejects_duplicate_facet():
    with pytest.raises(GeometryError, match="appears twice"):
        ConvexPolytope3(
            [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)],
            [(0, 2, 1), (0, 1, 3), (1, 2, 3), (0, 2, 1)],
        )


def test_rejects_nonconvex_vertex():
    cube = unit_cube_handmade()
    spiked = list(cube.vertices) + [(0, 0, 3)]
    with pytest.raises(GeometryError):
        ConvexPolytope3(spiked, list(cube.facets))


def test_locate_3d_classification():
    cube = unit_cube_handmade()
    assert locate_point(cube, (Fraction(1, 2),) * 3).kind is LocationKind.INTERIOR
    assert locate_point(cube, (Fraction(1, 2), Fraction(1, 2), 0)).kind is LocationKind.FACET_INTERIOR
    assert locate_point(cube, (Fraction(1, 2), 0, 0)).kind is LocationKind.EDGE_INTERIOR
    vloc = locate_point(cube, (1, 1, 1))
    assert vloc.kind is LocationKind.VERTEX and cube.vertices[vloc.index] == (1, 1, 1)
    assert locate_point(cube, (2, 0, 0)).kind is LocationKind.EXTERIOR


def test_reeve_interior_is_empty():
    for N in (1, 2, 7, 20):
        assert interior_lattice_count(reeve_tetrahedron(N)) == 0


# ---------------------------------------------------------------------------
# property-based sanity


@given(st.integers(min_value=1, max_value=5), st.integers(min_value=1, max_value=5))
@settings(max_examples=20, deadline=None)
def test_dilate_measure_power_law(s, t):
    P = IntegerPolygon2(LSHAPE)
    assert area_2d(dilate(P, s * t)) == Fraction(s * t) ** 2 * area_2d(P)
    assert dilate(P, s * t) == dilate(dilate(P, s), t)
