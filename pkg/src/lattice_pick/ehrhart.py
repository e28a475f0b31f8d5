"""Lattice-point counts of integer dilates and exact polynomial fits.

Counting lattice points in tP for integer t is a degree-d polynomial in t
whose leading coefficient is the measure of P; the fit here is exact over
the rationals, anchored at the Euler-characteristic value 1 at t = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geometry import (
    IntegerPolygon2,
    Polytope,
    PreconditionError,
    boundary_lattice_count_2d,
    dilate,
    interior_lattice_count_2d,
    measure,
)


def lattice_count(P: Polytope, t: int) -> int:
    """Number of lattice points in the closed dilate tP."""
    if t < 1:
        raise PreconditionError(f"dilation factor must be >= 1, got {t}")
    Q = dilate(P, t)
    if isinstance(Q, IntegerPolygon2):
        return interior_lattice_count_2d(Q) + boundary_lattice_count_2d(Q)
    lo, hi = Q.bounding_box()
    from .geometry import _classify_scaled_3d, LocationKind

    count = 0
    for x in range(lo[0], hi[0] + 1):
        for y in range(lo[1], hi[1] + 1):
            for z in range(lo[2], hi[2] + 1):
                if _classify_scaled_3d(Q, (x, y, z), 1).kind is not LocationKind.EXTERIOR:
                    count += 1
    return count


@dataclass(frozen=True)
class EhrhartPolynomial:
    """Exact rational coefficients, index i = coefficient of t^i."""

    coefficients: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, t: int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coefficients)


def _solve_exact(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Gaussian elimination over the rationals (small systems only)."""
    n = len(matrix)
    aug = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col]
        aug[col] = [v / inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def ehrhart_fit(P: Polytope) -> EhrhartPolynomial:
    """Exact degree-d fit through the count of 1 at t = 0 and the lattice
    counts of the first d dilates."""
    d = P.dim
    ts = list(range(0, d + 1))
    counts = [Fraction(1)] + [Fraction(lattice_count(P, t)) for t in ts[1:]]
    vander = [[Fraction(t) ** i for i in range(d + 1)] for t in ts]
    coeffs = _solve_exact(vander, counts)
    return EhrhartPolynomial(tuple(coeffs))


def leading_coefficient_check(P: Polytope) -> bool:
    """Leading fitted coefficient equals the exact measure, as rationals."""
    return ehrhart_fit(P).coefficients[-1] == measure(P)
