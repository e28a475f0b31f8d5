"""Closed-form Fourier transforms of polygon indicators and the truncated
regularized frequency sum.

The boundary of a polygon turns the 2D Fourier integral into a finite sum
over edges (divergence theorem), and the mollifier is the normalized disc of
radius 1/2, whose transform is a first-kind Bessel ratio. Summing the
mollified coefficients over a symmetric frequency ball reproduces the area:
coefficients at nonzero integer frequencies are purely imaginary and cancel
in +m/-m pairs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .geometry import IntegerPolygon2, PreconditionError
from .solid_angle import discrete_volume, safe_epsilon, safe_epsilon_squared

Frequency = tuple[int, int]


# ---------------------------------------------------------------------------
# Bessel J1 and the disc-kernel transform

_J1_SWITCH = 14.0


def _j1_over_half_z_series(z2: np.ndarray) -> np.ndarray:
    """sum_k (-1)^k (z^2/4)^k / (k! (k+1)!) = 2 J1(z) / z, given z^2.

    Plain power series; below the switch point the cancellation costs at
    most four digits, leaving ~1e-12 absolute accuracy.
    """
    q = z2 / 4.0
    term = np.ones_like(q)
    acc = np.ones_like(q)
    for k in range(1, 60):
        term = term * (-q) / (k * (k + 1))
        acc += term
        if np.all(np.abs(term) < 1e-18):
            break
    return acc


_J1_AK = []  # Hankel coefficients a_k for nu = 1
_a = 1.0
for _k in range(1, 12):
    _a *= (4.0 - (2 * _k - 1) ** 2) / (8.0 * _k)
    _J1_AK.append(_a)
del _a, _k


def _j1_asymptotic(z: np.ndarray) -> np.ndarray:
    """Hankel large-argument form of J1.

    Truncated after a11; the first omitted term at the switch point is
    below 1e-10 and falls off rapidly beyond it.
    """
    zi2 = 1.0 / (z * z)
    p = np.ones_like(z)
    q = _J1_AK[0] / z
    sign = -1.0
    for k in range(2, len(_J1_AK), 2):
        p = p + sign * _J1_AK[k - 1] * zi2 ** (k // 2)
        q = q + sign * _J1_AK[k] / z * zi2 ** (k // 2)
        sign = -sign
    omega = z - 0.75 * math.pi
    return np.sqrt(2.0 / (math.pi * z)) * (p * np.cos(omega) - q * np.sin(omega))


def _j1_array(z: np.ndarray) -> np.ndarray:
    az = np.abs(z)
    small = az <= _J1_SWITCH
    out = np.empty_like(az)
    if small.any():
        zs = az[small]
        out[small] = 0.5 * zs * _j1_over_half_z_series(zs * zs)
    if (~small).any():
        out[~small] = _j1_asymptotic(az[~small])
    return out * np.sign(z)  # J1 is odd


def bessel_j1(z) -> float | np.ndarray:
    """First-kind Bessel function of order one.

    Power series below the switch point, Hankel asymptotic series above;
    validated against quadrature and an independent implementation to
    better than 1e-10 absolute.
    """
    arr = np.asarray(z, dtype=float)
    out = _j1_array(np.atleast_1d(arr))
    if arr.ndim == 0:
        return float(out[0])
    return out.reshape(arr.shape)


def kernel_ft(xi_norm) -> float | np.ndarray:
    """Transform of the normalized disc of radius 1/2, as a function of the
    frequency magnitude r: 2 J1(pi r) / (pi r), equal to 1 at r = 0.

    Radial by construction; the small-argument branch evaluates the series
    for 2 J1(z)/z directly, so there is no 0/0 at the origin.
    """
    arr = np.asarray(xi_norm, dtype=float)
    if np.any(arr < 0):
        raise ValueError("frequency magnitude must be nonnegative")
    z = math.pi * np.atleast_1d(arr)
    small = z <= _J1_SWITCH
    out = np.empty_like(z)
    if small.any():
        zs = z[small]
        out[small] = _j1_over_half_z_series(zs * zs)
    if (~small).any():
        zl = z[~small]
        out[~small] = 2.0 * _j1_asymptotic(zl) / zl
    if arr.ndim == 0:
        return float(out[0])
    return out.reshape(arr.shape)


# ---------------------------------------------------------------------------
# polygon Fourier transform


def _sinc(z: float) -> float:
    """sin(z)/z with the Taylor value 1 - z^2/6 below 1e-8."""
    if abs(z) < 1e-8:
        return 1.0 - z * z / 6.0
    return math.sin(z) / z


def _edge_data(P: IntegerPolygon2):
    vs = np.asarray(P.vertices, dtype=np.int64)
    nxt = np.roll(vs, -1, axis=0)
    delta = nxt - vs
    ssum = nxt + vs
    wout = np.stack([delta[:, 1], -delta[:, 0]], axis=1)  # |w_j| = edge length
    return delta, ssum, wout


def polygon_ft(P: IntegerPolygon2, xi: Sequence[float]) -> complex:
    """Fourier transform of the indicator of P at a real frequency.

    At zero frequency this is the area. Otherwise the divergence theorem
    reduces the integral to a sum over edges of phase-times-sinc factors
    against the outward normals.
    """
    x0, x1 = float(xi[0]), float(xi[1])
    if x0 == 0.0 and x1 == 0.0:
        return complex(float(Fraction(P.doubled_area(), 2)), 0.0)
    norm_sq = x0 * x0 + x1 * x1
    acc = 0j
    for (a, b) in P.edges():
        dx, dy = b[0] - a[0], b[1] - a[1]
        d = x0 * dx + x1 * dy
        s = x0 * (a[0] + b[0]) + x1 * (a[1] + b[1])
        w = x0 * dy - x1 * dx  # xi . outward normal, scaled by edge length
        phase = complex(math.cos(math.pi * s), -math.sin(math.pi * s))
        acc += w * phase * _sinc(math.pi * d)
    return acc * 1j / (2.0 * math.pi * norm_sq)


def _ft_real_at_integer_frequencies(P: IntegerPolygon2, ms: np.ndarray) -> np.ndarray:
    """Real part of polygon_ft at integer frequencies, vectorized.

    The phase exponent is an exact integer here, so it is reduced mod 2
    before multiplying by pi; the remaining real part is pure rounding
    noise, which is the whole point of the pair-cancellation check.
    """
    delta, ssum, wout = _edge_data(P)
    md = ms @ delta.T
    msum = (ms @ ssum.T) % 2
    mw = (ms @ wout.T).astype(float)
    mm = (ms * ms).sum(axis=1).astype(float)
    z = math.pi * md.astype(float)
    sinc = np.where(np.abs(z) < 1e-8, 1.0 - z * z / 6.0, np.sin(z) / np.where(z == 0, 1.0, z))
    re = (mw / mm[:, None]) * np.sin(math.pi * msum.astype(float)) * sinc
    return re.sum(axis=1) / (2.0 * math.pi)


def integer_phase_dichotomy(P: IntegerPolygon2, m: Frequency, j: int) -> int:
    """Exact value of the edge phase factor at an integer frequency: 1 when
    m is orthogonal to the edge, else 0. Pure integer test."""
    a, b = P.edge(j)
    d = m[0] * (b[0] - a[0]) + m[1] * (b[1] - a[1])
    return 1 if d == 0 else 0


def edge_phase_factor(P: IntegerPolygon2, m: Frequency, j: int) -> complex:
    """Floating evaluation of the edge phase factor exp(-i pi m.(a+b)) *
    sinc(pi m.(b-a)) at an integer frequency.

    The phase exponent is an exact integer, so it is reduced mod 2 before
    multiplying by pi; this keeps the evaluation within ~1e-15 of the exact
    0/1 dichotomy at any frequency magnitude.
    """
    a, b = P.edge(j)
    s = (m[0] * (a[0] + b[0]) + m[1] * (a[1] + b[1])) % 2
    d = m[0] * (b[0] - a[0]) + m[1] * (b[1] - a[1])
    phase = complex(math.cos(math.pi * s), -math.sin(math.pi * s))
    return phase * _sinc(math.pi * d)


# ---------------------------------------------------------------------------
# truncated regularized frequency sum


@dataclass(frozen=True)
class FrequencyTerm:
    """One summand of the regularized frequency sum."""

    m: Frequency
    kernel_factor: float
    coeff: complex
    product: complex


@dataclass(frozen=True)
class TruncatedSumReport:
    """Result of summing the mollified coefficients over a frequency ball."""

    epsilon: float
    radius: int
    value: float
    residual: float
    term_count: int
    max_offending_term: float

    def to_csv_row(self) -> str:
        return (
            f"{self.epsilon:.12g},{self.radius},{self.value:.12g},"
            f"{self.residual:.12g},{self.term_count},{self.max_offending_term:.12g}"
        )


def ball_pair_representatives(M: int) -> list[Frequency]:
    """One representative of each +m/-m pair with 0 < |m| <= M, in
    lexicographic order: all m with m1 > 0, plus (0, m2) with m2 > 0."""
    reps = []
    for m1 in range(0, M + 1):
        lo = 1 if m1 == 0 else -M
        for m2 in range(lo, M + 1):
            if m1 * m1 + m2 * m2 <= M * M:
                reps.append((m1, m2))
    reps.sort()
    return reps


def frequency_terms(P: IntegerPolygon2, epsilon: float, M: int) -> Iterator[FrequencyTerm]:
    """Scalar-path summands for inspection; one per representative m."""
    for m in ball_pair_representatives(M):
        k = kernel_ft(epsilon * math.hypot(m[0], m[1]))
        coeff = polygon_ft(P, (float(m[0]), float(m[1])))
        yield FrequencyTerm(m, k, coeff, k * coeff)


def _require_epsilon(P: IntegerPolygon2, epsilon: float) -> None:
    if not epsilon > 0:
        raise PreconditionError(f"epsilon must be positive, got {epsilon}")
    eps_sq_star = safe_epsilon_squared(P)
    if Fraction(epsilon) ** 2 >= eps_sq_star:
        raise PreconditionError(
            f"epsilon {epsilon} is not below safe_epsilon(P) = "
            f"{math.sqrt(eps_sq_star):.12g}; the mollified indicator would "
            f"differ from the indicator at some lattice point"
        )


def truncated_regularized_sum(
    P: IntegerPolygon2, epsilon: float, M: int
) -> TruncatedSumReport:
    """Sum kernel_ft(eps|m|) * Re polygon_ft(P, m) over the ball |m| <= M.

    The +m/-m pairs are summed together (their imaginary parts are exact
    conjugates), which makes the cancellation of all nonzero integer
    frequencies structural: the residual against the area is pure rounding
    noise, not a truncation tail.
    """
    _require_epsilon(P, epsilon)
    if M < 1:
        raise PreconditionError(f"ball radius must be >= 1, got {M}")
    area = float(Fraction(P.doubled_area(), 2))
    reps = ball_pair_representatives(M)
    ms = np.asarray(reps, dtype=np.int64)
    re = _ft_real_at_integer_frequencies(P, ms)
    kern = kernel_ft(epsilon * np.sqrt((ms * ms).sum(axis=1).astype(float)))
    pair_terms = 2.0 * kern * re
    value = area + float(pair_terms.sum())
    max_term = float(np.abs(pair_terms).max()) if len(pair_terms) else 0.0
    return TruncatedSumReport(
        epsilon=float(epsilon),
        radius=M,
        value=value,
        residual=value - area,
        term_count=2 * len(reps) + 1,
        max_offending_term=max_term,
    )


def orthogonal_pair_cancellation(
    P: IntegerPolygon2, j: int, epsilon: float, M: int, symmetric: bool = True
) -> float:
    """Absolute value of the kernel-weighted normal-component sum over the
    frequencies orthogonal to edge j inside the ball |m| <= M.

    Those frequencies are the nonzero multiples of one primitive lattice
    vector; the summand is odd in the multiplier, so summing each +k/-k
    pair together gives exactly zero. ``symmetric=False`` keeps only the
    positive multipliers, deliberately breaking the pairing to show the
    cancellation is a +/- phenomenon and not term-by-term decay.
    """
    _require_epsilon(P, epsilon)
    a, b = P.edge(j)
    dx, dy = b[0] - a[0], b[1] - a[1]
    g = math.gcd(abs(dx), abs(dy))
    p = (dy // g, -dx // g)  # primitive lattice vector orthogonal to the edge
    pp = p[0] * p[0] + p[1] * p[1]
    length = math.hypot(dx, dy)
    n_unit = (dy / length, -dx / length)
    k_max = math.isqrt((M * M) // pp)
    total = 0.0
    for k in range(1, k_max + 1):
        kern = kernel_ft(epsilon * k * math.sqrt(pp))
        dot = k * (p[0] * n_unit[0] + p[1] * n_unit[1])
        term_plus = kern * dot / (k * k * pp)
        if symmetric:
            total += term_plus + (-term_plus)
        else:
            total += term_plus
    return abs(total)


def poisson_check(P: IntegerPolygon2, epsilon: float, M: int) -> float:
    """Gap between the two sides of the regularized Poisson identity at the
    origin: lattice sum of the regularized indicator vs the truncated
    frequency sum."""
    lattice_side = discrete_volume(P).total
    frequency_side = truncated_regularized_sum(P, epsilon, M).value
    return abs(lattice_side - frequency_side)


def default_epsilon(P: IntegerPolygon2) -> float:
    """Half the mollifier threshold: the default scale for frequency sums."""
    return 0.5 * safe_epsilon(P)
