"""End-to-end verification of the lattice-point area formula.

The classical statement is exact: area = interior + boundary/2 - 1 over the
rationals. The analytic route checks the same number two more ways, as the
lattice sum of the regularized indicator and as the truncated regularized
frequency sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fourier import default_epsilon, truncated_regularized_sum
from .geometry import (
    IntegerPolygon2,
    PreconditionError,
    area_2d,
    boundary_lattice_count_2d,
    interior_lattice_count,
)
from .solid_angle import discrete_volume

PICK_CSV_HEADER = (
    "id,area,interior,boundary,rhs,classical_ok,discrete_volume,fourier_sum,analytic_ok"
)


@dataclass(frozen=True)
class PickReport:
    area: Fraction
    interior: int
    boundary: int
    rhs: Fraction
    classical_ok: bool
    discrete_volume: float
    fourier_sum: float
    analytic_ok: bool

    def to_csv_row(self, body_id: str) -> str:
        return (
            f"{body_id},{self.area},{self.interior},{self.boundary},{self.rhs},"
            f"{str(self.classical_ok).lower()},{self.discrete_volume:.12g},"
            f"{self.fourier_sum:.12g},{str(self.analytic_ok).lower()}"
        )


def verify_pick(
    P: IntegerPolygon2,
    tol: float = 1e-6,
    eps: float | None = None,
    M: int = 40,
) -> PickReport:
    """Full report: exact counts plus the two analytic area computations."""
    if not tol > 0:
        raise PreconditionError("tolerance must be positive")
    area = area_2d(P)
    interior = interior_lattice_count(P)
    boundary = boundary_lattice_count_2d(P)
    rhs = interior + Fraction(boundary, 2) - 1
    dv = discrete_volume(P).total
    fs = truncated_regularized_sum(P, eps if eps is not None else default_epsilon(P), M).value
    analytic_ok = abs(dv - float(area)) <= tol and abs(fs - float(area)) <= tol
    return PickReport(
        area=area,
        interior=interior,
        boundary=boundary,
        rhs=rhs,
        classical_ok=area == rhs,
        discrete_volume=dv,
        fourier_sum=fs,
        analytic_ok=analytic_ok,
    )


def verify_discrete_volume_identity(P: IntegerPolygon2, tol: float) -> bool:
    """True iff the regularized lattice sum is within tol of the area."""
    if not tol > 0:
        raise PreconditionError("tolerance must be positive")
    return abs(discrete_volume(P).total - float(area_2d(P))) <= tol
