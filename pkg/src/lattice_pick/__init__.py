"""Exact lattice-point geometry and its Fourier-analytic verification.

The 2D centerpiece is the identity area = interior + boundary/2 - 1 for
simple lattice polygons, checked three ways: exactly over the rationals,
as the lattice sum of the regularized indicator, and as a truncated
regularized frequency sum. The 3D machinery measures where the discrete
volume keeps matching the continuous one (concrete polytopes, multi-tiling
certificates, Reeve tetrahedra, Ehrhart fits).
"""

from .geometry import (
    ConvexPolytope3,
    GeometryError,
    IntegerPolygon2,
    LocationKind,
    PointLocation,
    PreconditionError,
    area_2d,
    boundary_lattice_count_2d,
    convex_hull_2d,
    dilate,
    interior_lattice_count,
    is_convex_polygon,
    lattice_points_in,
    lattice_points_with_location,
    locate_point,
    measure,
    volume_3d,
)
from .solid_angle import (
    DensityEstimate,
    WeightBreakdown,
    dihedral_angle_fraction,
    discrete_volume,
    discrete_volume_closed_form_2d,
    local_density,
    safe_epsilon,
    safe_epsilon_squared,
    safe_radius_squared,
    solid_angle_fraction,
    vertex_angle_fraction,
    vertex_cone_generators,
    weight_2d,
    weight_3d,
)
from .fourier import (
    FrequencyTerm,
    TruncatedSumReport,
    ball_pair_representatives,
    bessel_j1,
    default_epsilon,
    edge_phase_factor,
    frequency_terms,
    integer_phase_dichotomy,
    kernel_ft,
    orthogonal_pair_cancellation,
    poisson_check,
    polygon_ft,
    truncated_regularized_sum,
)
from .pick import PickReport, verify_discrete_volume_identity, verify_pick
from .phenomena import (
    ConcretenessVerdict,
    MultiplicityResult,
    SymmetryReport,
    centrally_symmetric,
    check_multitiling_sampling,
    conjecture_survey,
    delta_simplex,
    is_concrete,
    multiplicity_at,
    multitile_certificate_symmetry,
    reeve_tetrahedron,
    zonotope_from_generators,
)
from .ehrhart import EhrhartPolynomial, ehrhart_fit, lattice_count, leading_coefficient_check
from .polyfile import (
    PolytopeFormatError,
    parse_generators,
    parse_polytopes,
    serialize_polytope,
    serialize_polytopes,
)
from .corpus import fixed_nonconvex_polygons, polygon_corpus, random_convex_polygon

__version__ = "0.1.0"
