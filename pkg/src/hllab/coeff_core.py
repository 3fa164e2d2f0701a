"""Truncated Taylor series on the unit disk and coefficient-domain transforms.

A function ``f(z) = sum a_n z^n`` is carried around as the finite list of its
coefficients.  Everything here acts coefficientwise: Hadamard products,
dilations, partial sums, fractional derivatives/integrals, and the
Cauchy-type test functions ``(1 - z)^(-gamma)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

import numpy as np
from scipy.special import gammaln

__all__ = [
    "CoefficientSeries",
    "FracOrder",
    "AbelResult",
    "log_gamma_ratio",
    "hadamard",
    "dilate",
    "partial_sum",
    "monomial",
    "cauchy_kernel",
    "cauchy_power",
    "binomial_power",
    "lacunary",
    "frac_apply",
    "evaluate_circle",
    "abel_sum",
]


@dataclass(frozen=True, eq=False)
class CoefficientSeries:
    """Coefficients ``(a_0, ..., a_N)`` of a polynomial; trailing zeros allowed."""

    coeffs: np.ndarray

    def __post_init__(self) -> None:
        a = np.array(self.coeffs, dtype=np.complex128).reshape(-1)
        if a.size == 0:
            raise ValueError("a coefficient series needs at least one coefficient")
        if not np.all(np.isfinite(a)):
            raise ValueError("coefficients must be finite")
        a.setflags(write=False)
        object.__setattr__(self, "coeffs", a)

    @classmethod
    def from_iterable(cls, values: Iterable[complex]) -> "CoefficientSeries":
        return cls(np.fromiter(values, dtype=np.complex128))

    @classmethod
    def zeros(cls, degree: int) -> "CoefficientSeries":
        return cls(np.zeros(degree + 1, dtype=np.complex128))

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    def __len__(self) -> int:
        return self.coeffs.size

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoefficientSeries):
            return NotImplemented
        return bool(np.array_equal(self.coeffs, other.coeffs))

    def __hash__(self) -> int:
        return hash(self.coeffs.tobytes())

    def __repr__(self) -> str:
        return f"CoefficientSeries(degree={self.degree})"

    def scale(self, c: complex) -> "CoefficientSeries":
        return CoefficientSeries(self.coeffs * c)

    def __add__(self, other: "CoefficientSeries") -> "CoefficientSeries":
        n = max(len(self), len(other))
        out = np.zeros(n, dtype=np.complex128)
        out[: len(self)] += self.coeffs
        out[: len(other)] += other.coeffs
        return CoefficientSeries(out)

    def __call__(self, w: complex | np.ndarray) -> complex | np.ndarray:
        """Evaluate the polynomial at ``w`` (Horner)."""
        w = np.asarray(w, dtype=np.complex128)
        acc = np.zeros_like(w)
        for a in self.coeffs[::-1]:
            acc = acc * w + a
        return acc if acc.ndim else complex(acc)


@dataclass(frozen=True)
class FracOrder:
    """Order of a fractional operator.

    ``flavor="gamma"`` selects the D-operators (ratios ``Gamma(n+beta+1)/n!``),
    ``flavor="power"`` the J-operators (factors ``(n+1)^beta``).
    """

    beta: float
    flavor: Literal["gamma", "power"] = "gamma"

    def __post_init__(self) -> None:
        if not math.isfinite(self.beta):
            raise ValueError(f"fractional order must be finite, got {self.beta}")
        if self.flavor not in ("gamma", "power"):
            raise ValueError(f"unknown flavor {self.flavor!r}")


_STIRLING_MIN = 20.0


def _stirling_tail(z: np.ndarray) -> np.ndarray:
    # lgamma(z) - [(z - 1/2) ln z - z + ln(2 pi)/2], accurate to ~1e-17 for z >= 20
    iz = 1.0 / z
    iz2 = iz * iz
    return iz * (1 / 12 - iz2 * (1 / 360 - iz2 * (1 / 1260 - iz2 * (1 / 1680 - iz2 / 1188))))


def log_gamma_ratio(x: np.ndarray | float, a: float, b: float) -> np.ndarray:
    """``ln Gamma(x + a) - ln Gamma(x + b)`` for ``x + min(a, b) > 0``.

    Plain ``gammaln`` differences lose ~``eps * x ln x`` absolute accuracy, which
    is 1e-9 by ``x = 2**20``.  For large arguments the Stirling expansion is
    differenced analytically so that only O(1) quantities cancel.
    """
    x = np.asarray(x, dtype=np.float64)
    lo = x + min(a, b)
    if np.any(lo <= 0):
        bad = x[lo <= 0]
        raise ValueError(f"gamma ratio hits a pole or negative argument at x={bad[:3]}")
    out = np.empty_like(x)
    small = lo < _STIRLING_MIN
    if np.any(small):
        xs = x[small]
        out[small] = gammaln(xs + a) - gammaln(xs + b)
    big = ~small
    if np.any(big):
        z = x[big]
        za, zb = z + a, z + b
        out[big] = (
            (a - b) * np.log(z)
            + (za - 0.5) * np.log1p(a / z)
            - (zb - 0.5) * np.log1p(b / z)
            - (a - b)
            + _stirling_tail(za)
            - _stirling_tail(zb)
        )
    return out


def _as_series(f: CoefficientSeries | Sequence[complex] | np.ndarray) -> CoefficientSeries:
    return f if isinstance(f, CoefficientSeries) else CoefficientSeries(np.asarray(f))


def hadamard(f: CoefficientSeries, g: CoefficientSeries) -> CoefficientSeries:
    """Coefficientwise product, truncated to the shorter of the two."""
    n = min(len(f), len(g))
    return CoefficientSeries(f.coeffs[:n] * g.coeffs[:n])


def dilate(f: CoefficientSeries, w: complex) -> CoefficientSeries:
    """``f_w(z) = f(wz)`` for ``|w| <= 1``."""
    if abs(w) > 1:
        raise ValueError(f"dilation parameter must satisfy |w| <= 1, got {w}")
    n = np.arange(len(f))
    if w == 0:
        powers = (n == 0).astype(np.complex128)
    elif isinstance(w, (int, float)) or np.isreal(w):
        powers = np.power(float(np.real(w)), n)
    else:
        powers = np.exp(n * np.log(complex(w)))
    return CoefficientSeries(f.coeffs * powers)


def partial_sum(f: CoefficientSeries, N: int) -> CoefficientSeries:
    """``S_N(f)``, zero-extended when ``N`` exceeds the stored degree."""
    if N < 0:
        raise ValueError("partial sum index must be nonnegative")
    out = np.zeros(N + 1, dtype=np.complex128)
    m = min(N + 1, len(f))
    out[:m] = f.coeffs[:m]
    return CoefficientSeries(out)


def monomial(n: int, degree: int | None = None) -> CoefficientSeries:
    """``u_n(z) = z^n``, optionally zero-padded up to ``degree``."""
    deg = n if degree is None else max(n, degree)
    out = np.zeros(deg + 1, dtype=np.complex128)
    out[n] = 1.0
    return CoefficientSeries(out)


def cauchy_kernel(N: int) -> CoefficientSeries:
    """Degree-``N`` truncation of ``c(z) = 1/(1 - z)``."""
    return CoefficientSeries(np.ones(N + 1, dtype=np.complex128))


def cauchy_power(gamma: float, N: int) -> CoefficientSeries:
    """Degree-``N`` truncation of ``(1 - z)^(-gamma)``, ``gamma > 0``.

    Coefficient ``n`` is ``Gamma(n + gamma) / (Gamma(gamma) n!)``.
    """
    if not gamma > 0:
        raise ValueError(f"cauchy_power needs gamma > 0, got {gamma}")
    if N < 0:
        raise ValueError("degree must be nonnegative")
    n = np.arange(N + 1, dtype=np.float64)
    logc = log_gamma_ratio(n, gamma, 1.0) - gammaln(gamma)
    return CoefficientSeries(np.exp(logc))


def binomial_power(kappa: float, N: int) -> CoefficientSeries:
    """Degree-``N`` truncation of ``(1 - z)^kappa`` for any real ``kappa``.

    Used for test functions that vanish at ``z = 1`` (``kappa > 0``), which
    ``cauchy_power`` cannot express.
    """
    if kappa < 0:
        return cauchy_power(-kappa, N)
    out = np.empty(N + 1, dtype=np.float64)
    out[0] = 1.0
    if N:
        n = np.arange(1, N + 1, dtype=np.float64)
        out[1:] = np.cumprod((n - 1 - kappa) / n)
    return CoefficientSeries(out)


def lacunary(N: int, coeffs: Sequence[complex] | None = None) -> CoefficientSeries:
    """``sum_k c_k z^(2^k)`` over ``2^k <= N`` (all ``c_k = 1`` by default)."""
    out = np.zeros(N + 1, dtype=np.complex128)
    k = 0
    while (1 << k) <= N:
        out[1 << k] = 1.0 if coeffs is None else coeffs[k]
        k += 1
    return CoefficientSeries(out)


def _frac_factors(n: np.ndarray, order: FracOrder, direction: str) -> np.ndarray:
    beta = order.beta
    if direction not in ("derivative", "integral"):
        raise ValueError(f"direction must be 'derivative' or 'integral', got {direction!r}")
    sign = 1.0 if direction == "derivative" else -1.0
    if beta < 0:
        # D^beta = D_{-beta} for negative orders, and likewise for J
        beta, sign = -beta, -sign
    if beta == 0:
        return np.ones_like(n)
    if order.flavor == "power":
        return np.power(n + 1.0, sign * beta)
    return np.exp(sign * log_gamma_ratio(n, beta + 1.0, 1.0))


def frac_apply(
    f: CoefficientSeries,
    order: FracOrder | float,
    direction: Literal["derivative", "integral"] = "derivative",
) -> CoefficientSeries:
    """Fractional derivative (``f^[beta]``) or integral (``f_[beta]``) of ``f``.

    The gamma flavor multiplies ``a_n`` by ``Gamma(n+beta+1)/n!`` (derivative)
    or its reciprocal (integral); the power flavor by ``(n+1)^(+-beta)``.
    A negative order swaps derivative and integral.
    """
    if not isinstance(order, FracOrder):
        order = FracOrder(float(order))
    n = np.arange(len(f), dtype=np.float64)
    return CoefficientSeries(f.coeffs * _frac_factors(n, order, direction))


def evaluate_circle(f: CoefficientSeries, r: float, M: int):
    """Sample ``f(r e^{2 pi i j / M})`` for ``j = 0..M-1`` via one inverse FFT."""
    from .boundary import CircleSamples

    if not 0 <= r <= 1:
        raise ValueError(f"radius must lie in [0, 1], got {r}")
    if M < 1 or M & (M - 1):
        raise ValueError(f"M must be a power of two, got {M}")
    if M < len(f):
        raise ValueError(f"M={M} < deg f + 1 = {len(f)} would alias")
    c = f.coeffs * np.power(float(r), np.arange(len(f))) if r != 1 else f.coeffs
    values = M * np.fft.ifft(c, M)
    return CircleSamples(radius=float(r), values=values)


@dataclass(frozen=True)
class AbelResult:
    value: complex
    converged: bool
    trace: tuple[complex, ...]


def abel_sum(
    lam: CoefficientSeries | Sequence[complex],
    r_schedule: Sequence[float],
    tol: float = 1e-8,
) -> AbelResult:
    """Abel means ``sum lam_n r^n`` along an increasing schedule of radii.

    Reports the last mean and whether the last two means differ by less than
    ``tol``.  For a finite sequence the true limit is the plain coefficient sum.
    """
    lam = _as_series(lam)
    r = np.asarray(r_schedule, dtype=np.float64)
    if r.size == 0:
        raise ValueError("r_schedule must be nonempty")
    if np.any((r <= 0) | (r >= 1)) or np.any(np.diff(r) <= 0):
        raise ValueError("r_schedule must be increasing inside (0, 1)")
    trace = tuple(complex(np.sum(lam.coeffs * np.power(ri, np.arange(len(lam))))) for ri in r)
    converged = len(trace) >= 2 and abs(trace[-1] - trace[-2]) < tol
    return AbelResult(value=trace[-1], converged=converged, trace=trace)
