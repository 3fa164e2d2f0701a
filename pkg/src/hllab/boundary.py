"""Quantities computed from samples of a function on a circle.

Distribution functions, decreasing rearrangements, Lorentz quasinorms,
integral means, moduli of continuity and the BMO seminorm.  The uniform
measure puts mass ``1/M`` on each of the ``M`` equispaced samples, so the
decreasing rearrangement is a step function and the Lorentz integral can be
evaluated cell by cell in closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .coeff_core import CoefficientSeries, evaluate_circle

__all__ = [
    "CircleSamples",
    "RearrangementProfile",
    "distribution",
    "rearrangement",
    "lorentz_quasinorm",
    "hardy_lorentz_norm",
    "lp_mean",
    "modulus_of_continuity",
    "modulus_profile",
    "dyadic_arcs",
    "bmoa_seminorm",
    "check_lorentz_params",
]

INF = math.inf


@dataclass(frozen=True, eq=False)
class CircleSamples:
    radius: float
    values: np.ndarray

    def __post_init__(self) -> None:
        v = np.array(self.values, dtype=np.complex128).reshape(-1)
        if v.size < 1:
            raise ValueError("need at least one sample")
        if not np.all(np.isfinite(v)):
            raise ValueError("samples must be finite")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @property
    def M(self) -> int:
        return self.values.size

    def rotate(self, k: int) -> "CircleSamples":
        return CircleSamples(self.radius, np.roll(self.values, -k))


@dataclass(frozen=True, eq=False)
class RearrangementProfile:
    """Nonincreasing ``|f|`` values; sample ``j`` covers ``[j/M, (j+1)/M)``."""

    sorted_abs: np.ndarray

    def __post_init__(self) -> None:
        a = np.array(self.sorted_abs, dtype=np.float64).reshape(-1)
        if np.any(np.diff(a) > 0):
            raise ValueError("profile must be nonincreasing")
        a.setflags(write=False)
        object.__setattr__(self, "sorted_abs", a)

    @property
    def M(self) -> int:
        return self.sorted_abs.size

    @property
    def step(self) -> float:
        return 1.0 / self.M

    def __call__(self, s: float | np.ndarray) -> np.ndarray:
        """Evaluate ``f*(s)`` for ``s`` in ``[0, 1)``."""
        idx = np.clip(np.floor(np.asarray(s) * self.M).astype(int), 0, self.M - 1)
        return self.sorted_abs[idx]


def distribution(samples: CircleSamples, s: float) -> float:
    """Normalized measure of ``{|f| > s}``."""
    return float(np.count_nonzero(np.abs(samples.values) > s)) / samples.M


def rearrangement(samples: CircleSamples) -> RearrangementProfile:
    a = np.abs(samples.values)
    return RearrangementProfile(np.sort(a)[::-1])


def check_lorentz_params(p: float, q: float) -> None:
    if not (p > 0 and q > 0):
        raise ValueError(f"Lorentz exponents must be positive, got p={p}, q={q}")
    if p == INF and q != INF:
        raise ValueError("L^{inf,q} is trivial for q < inf; use q = inf with p = inf")


def lorentz_quasinorm(profile: RearrangementProfile, p: float, q: float) -> float:
    """``||f||_{p,q}`` of a step-function rearrangement, integrated exactly.

    For ``q < inf`` each cell contributes
    ``f*_j^q (p/q) [((j+1)/M)^{q/p} - (j/M)^{q/p}]``; for ``q = inf`` the
    supremum of ``f*(s) s^{1/p}`` is reached at the right end of a cell.
    """
    check_lorentz_params(p, q)
    a = profile.sorted_abs
    M = a.size
    if p == INF:
        return float(a[0])
    j = np.arange(M + 1, dtype=np.float64)
    if q == INF:
        return float(np.max(a * np.power(j[1:] / M, 1.0 / p)))
    top = float(a[0])
    if top == 0:
        return 0.0
    e = q / p
    # integer powers first, then one scale: keeps the p = q case exact
    cell = np.diff(np.power(j, e)) / (M**e)
    total = math.fsum((np.power(a / top, q) * cell).tolist()) * (p / q)
    return top * total ** (1.0 / q)


def hardy_lorentz_norm(f: CoefficientSeries, p: float, q: float, M: int) -> float:
    """``||f||_{H^{p,q}}`` from ``M`` boundary samples of the polynomial ``f``."""
    return lorentz_quasinorm(rearrangement(evaluate_circle(f, 1.0, M)), p, q)


def _pmean(absvals: np.ndarray, p: float, axis: int = -1) -> np.ndarray:
    top = np.max(absvals, axis=axis, keepdims=True)
    if p == INF:
        return np.squeeze(top, axis=axis)
    # scale by the max so tiny values do not underflow when raised to p
    safe = np.where(top > 0, top, 1.0)
    m = np.mean(np.power(absvals / safe, p), axis=axis) ** (1.0 / p)
    return m * np.squeeze(top, axis=axis)


def lp_mean(samples: CircleSamples, p: float) -> float:
    """Integral mean ``M_p(r, f)`` over the sampled circle."""
    if not p > 0:
        raise ValueError(f"p must be positive, got {p}")
    return float(_pmean(np.abs(samples.values), p))


def _difference(v: np.ndarray, k: int, order: int) -> np.ndarray:
    if order == 1:
        return np.roll(v, -k) - v
    return np.roll(v, -k) - 2 * v + np.roll(v, k)


def modulus_profile(samples: CircleSamples, order: int, p: float) -> np.ndarray:
    """``omega(t_k)`` (order 1) or ``Omega(t_k)`` (order 2) at ``t_k = 2 pi k / M``.

    Entry ``k - 1`` holds the modulus at the ``k``-th grid shift,
    ``k = 1..M//2``; it is a running maximum so it is nondecreasing.
    """
    if order not in (1, 2):
        raise ValueError("order must be 1 or 2")
    if not p >= 1:
        raise ValueError(f"moduli of continuity use p in [1, inf], got {p}")
    v = samples.values
    kmax = max(samples.M // 2, 1)
    # +h and -h give the same mean by rotation invariance
    raw = np.array([_pmean(np.abs(_difference(v, k, order)), p) for k in range(1, kmax + 1)])
    return np.maximum.accumulate(raw)


def modulus_of_continuity(samples: CircleSamples, order: int, t: float, p: float) -> float:
    """Sup over grid shifts ``0 < |h| <= t`` of the ``p``-mean of the difference."""
    M = samples.M
    k = int(math.floor(t * M / (2 * math.pi) + 1e-9))
    if k < 1:
        raise ValueError(f"t={t} is below the grid resolution 2*pi/{M}")
    prof = modulus_profile(samples, order, p)
    return float(prof[min(k, prof.size) - 1])


def dyadic_arcs(M: int) -> list[tuple[int, int]]:
    """Arcs ``(start, length)`` of lengths ``M, M/2, ..., 2`` at every grid offset."""
    arcs = [(0, M)]
    L = M // 2
    while L >= 2:
        arcs.extend((s, L) for s in range(M))
        L //= 2
    return arcs


def _oscillation_for_length(v: np.ndarray, L: int, starts: np.ndarray) -> np.ndarray:
    M = v.size
    ext = np.concatenate([v, v[: L - 1]]) if L > 1 else v
    windows = np.lib.stride_tricks.sliding_window_view(ext, L)[starts]
    avg = windows.mean(axis=1, keepdims=True)
    return np.abs(windows - avg).mean(axis=1)


def bmoa_seminorm(
    samples: CircleSamples, interval_grid: Iterable[tuple[int, int]] | None = None
) -> float:
    """Largest mean oscillation ``m(I)^{-1} ||(f - f_I) chi_I||_1`` over the arcs.

    Arcs are ``(start, length)`` in sample units, wrapping around the circle.
    The default family is every dyadic length at every grid offset, so the
    value is invariant under rotating the samples.
    """
    v = samples.values
    M = v.size
    if interval_grid is None:
        best = 0.0
        L = M
        while L >= 2:
            starts = np.arange(M) if L < M else np.array([0])
            # chunk to bound memory at about 4M complex entries
            chunk = max(1, (1 << 22) // L)
            for i in range(0, starts.size, chunk):
                best = max(best, float(_oscillation_for_length(v, L, starts[i : i + chunk]).max()))
            L //= 2
        return best
    by_len: dict[int, list[int]] = {}
    for s, L in interval_grid:
        if not 1 <= L <= M:
            raise ValueError(f"arc length {L} outside [1, {M}]")
        by_len.setdefault(L, []).append(s % M)
    best = 0.0
    for L, starts in by_len.items():
        best = max(best, float(_oscillation_for_length(v, L, np.array(starts)).max()))
    return best
