"""Radial-integral quasinorms of mixed Bergman and Bergman-Sobolev type.

``||f||_{H(p,q,alpha)}^q = int_0^1 M_p(r, f)^q (1 - r)^(q alpha - 1) dr`` with
the usual supremum when ``q = inf``; the Sobolev variant applies a fractional
derivative of order ``beta`` first.  The ``dr`` integral is discretized on a
grid graded toward ``r = 1``.  The weight is integrated exactly over each cell
and ``M_p`` is frozen at the cell's node, so constants are integrated without
quadrature error however singular the weight is.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Literal

import numpy as np

from .boundary import INF, _pmean
from .coeff_core import CoefficientSeries, FracOrder, frac_apply

__all__ = [
    "RadialGrid",
    "MixedNormSpec",
    "graded_radial_grid",
    "integral_means",
    "bergman_quasinorm",
    "sobolev_quasinorm",
    "dirichlet_norm",
    "bloch_norm",
    "h0_decay_metric",
]

# bound on radii x samples evaluated in one FFT batch
_BATCH = 1 << 21


@dataclass(frozen=True, eq=False)
class RadialGrid:
    nodes: np.ndarray
    weights: np.ndarray

    def __post_init__(self) -> None:
        r = np.array(self.nodes, dtype=np.float64).reshape(-1)
        w = np.array(self.weights, dtype=np.float64).reshape(-1)
        if r.size < 1 or r.size != w.size:
            raise ValueError("nodes and weights must be nonempty and of equal length")
        if np.any(np.diff(r) <= 0) or r[0] <= 0 or r[-1] >= 1:
            raise ValueError("nodes must be strictly increasing inside (0, 1)")
        if np.any(w <= 0) or w.sum() > 1 + 1e-9:
            raise ValueError("weights must be positive with total at most 1")
        r.setflags(write=False)
        w.setflags(write=False)
        object.__setattr__(self, "nodes", r)
        object.__setattr__(self, "weights", w)

    @property
    def K(self) -> int:
        return self.nodes.size

    def cell_edges(self) -> np.ndarray:
        """Partition of ``[0, 1]`` with node ``k`` inside cell ``k``.

        Interior edges are node midpoints; the outer cells reach 0 and 1.
        """
        r = self.nodes
        return np.concatenate([[0.0], 0.5 * (r[:-1] + r[1:]), [1.0]])


def graded_radial_grid(K: int = 512, gamma_grade: float = 3.0) -> RadialGrid:
    """Nodes ``r_k = 1 - (1 - k/(K+1))^grade`` with midpoint-rule weights."""
    if K < 2:
        raise ValueError(f"need K >= 2 radial nodes, got {K}")
    if not gamma_grade >= 1:
        raise ValueError(f"grade must be >= 1, got {gamma_grade}")
    k = np.arange(K + 2, dtype=np.float64)
    full = 1.0 - np.power(1.0 - k / (K + 1), gamma_grade)
    full[0], full[-1] = 0.0, 1.0
    weights = 0.5 * (full[2:] - full[:-2])
    return RadialGrid(full[1:-1], weights)


@dataclass(frozen=True)
class MixedNormSpec:
    p: float
    q: float
    alpha: float
    beta: float = 0.0
    little_oh: bool = False
    flavor: Literal["gamma", "power"] = "gamma"

    def __post_init__(self) -> None:
        if not (self.p > 0 and self.q > 0):
            raise ValueError(f"exponents must be positive, got p={self.p}, q={self.q}")
        if not (self.alpha > 0 and math.isfinite(self.alpha)):
            raise ValueError(f"alpha must be a positive real, got {self.alpha}")
        if not math.isfinite(self.beta):
            raise ValueError("beta must be finite")
        if self.little_oh and self.q != INF:
            raise ValueError("the little-oh variant is defined for q = inf only")


def integral_means(f: CoefficientSeries, radii: np.ndarray, p: float, M: int) -> np.ndarray:
    """``M_p(r, f)`` for each radius, from ``M`` samples per circle."""
    if M < 1 or M & (M - 1):
        raise ValueError(f"M must be a power of two, got {M}")
    if M < len(f):
        raise ValueError(f"M={M} < deg f + 1 = {len(f)} would alias")
    radii = np.asarray(radii, dtype=np.float64)
    n = np.arange(len(f), dtype=np.float64)
    out = np.empty(radii.size)
    step = max(1, _BATCH // M)
    for i in range(0, radii.size, step):
        rr = radii[i : i + step, None]
        c = f.coeffs[None, :] * np.power(rr, n[None, :])
        vals = M * np.fft.ifft(c, M, axis=1)
        out[i : i + step] = _pmean(np.abs(vals), p, axis=1)
    return out


def _weight_moments(edges: np.ndarray, nu: float) -> np.ndarray:
    # exact int over each cell of (1 - r)^nu dr, nu > -1
    u = np.power(1.0 - edges, nu + 1.0)
    return (u[:-1] - u[1:]) / (nu + 1.0)


def bergman_quasinorm(
    f: CoefficientSeries, spec: MixedNormSpec, grid: RadialGrid, M: int
) -> float:
    """``||f||_{H(p,q,alpha)}``; ``spec.beta`` must be 0 (see sobolev_quasinorm)."""
    if spec.beta != 0:
        raise ValueError("bergman_quasinorm takes beta = 0; use sobolev_quasinorm")
    if not np.any(f.coeffs):
        return 0.0
    means = integral_means(f, grid.nodes, spec.p, M)
    if spec.q == INF:
        # r = 0 is an implicit node: M_p(0, f) = |a_0|
        vals = means * np.power(1.0 - grid.nodes, spec.alpha)
        return float(max(abs(f.coeffs[0]), vals.max()))
    nu = spec.q * spec.alpha - 1.0
    w = _weight_moments(grid.cell_edges(), nu)
    total = math.fsum((w * np.power(means, spec.q)).tolist())
    return total ** (1.0 / spec.q)


def sobolev_quasinorm(
    f: CoefficientSeries, spec: MixedNormSpec, grid: RadialGrid, M: int
) -> float:
    """``||f||_{H(p,q,alpha,beta)} = ||f^[beta]||_{H(p,q,alpha)}``."""
    g = frac_apply(f, FracOrder(spec.beta, spec.flavor), "derivative")
    return bergman_quasinorm(g, replace(spec, beta=0.0), grid, M)


def dirichlet_norm(f: CoefficientSeries, s: float, grid: RadialGrid, M: int) -> float:
    """Norm of the Dirichlet-type space ``H(s, s, 1, 1)``."""
    return sobolev_quasinorm(f, MixedNormSpec(s, s, 1.0, 1.0), grid, M)


def bloch_norm(f: CoefficientSeries, grid: RadialGrid, M: int) -> float:
    """Norm of ``H(inf, inf, 1, 1)``."""
    return sobolev_quasinorm(f, MixedNormSpec(INF, INF, 1.0, 1.0), grid, M)


def h0_decay_metric(
    f: CoefficientSeries, spec: MixedNormSpec, grid: RadialGrid, M: int
) -> float:
    """How much of ``M_p(r, f^[beta]) (1 - r)^alpha`` survives near the boundary.

    Max over the outer quarter of the grid nodes divided by the max over all
    nodes and ``r = 0``.  Near 0 means the profile decays toward ``r = 1``;
    near 1 means the supremum sits at the boundary.
    """
    if spec.q != INF:
        raise ValueError("the decay metric is defined for q = inf")
    g = frac_apply(f, FracOrder(spec.beta, spec.flavor), "derivative")
    if not np.any(g.coeffs):
        return 0.0
    vals = integral_means(g, grid.nodes, spec.p, M) * np.power(1.0 - grid.nodes, spec.alpha)
    top = max(float(vals.max()), abs(g.coeffs[0]))
    tail = float(vals[(3 * grid.K) // 4 :].max())
    return tail / top
