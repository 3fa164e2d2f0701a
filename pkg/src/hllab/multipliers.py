"""Coefficient multipliers between function and sequence spaces.

A multiplier ``lambda`` acts by ``f -> lambda * f`` (Hadamard product).  Its
operator quasinorm between two spaces is estimated from below by sweeping a
deterministic family of test polynomials.
"""

from __future__ import annotations

import math
import warnings
import zlib
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .boundary import (
    INF,
    bmoa_seminorm,
    check_lorentz_params,
    hardy_lorentz_norm,
    lp_mean,
    modulus_profile,
)
from .coeff_core import (
    CoefficientSeries,
    FracOrder,
    binomial_power,
    cauchy_power,
    dilate,
    evaluate_circle,
    frac_apply,
    hadamard,
    lacunary,
    monomial,
)
from .mixed_norm import MixedNormSpec, graded_radial_grid, h0_decay_metric, sobolev_quasinorm
from .seq_spaces import blocked_norm, ces_norm, lp_seq_norm

__all__ = [
    "ResolutionError",
    "Resolution",
    "SpaceSpec",
    "parse_space",
    "TestFamily",
    "dilated_cauchy",
    "generator_from_tag",
    "FamilyMember",
    "OpnormEstimate",
    "W_GRID",
    "apply_multiplier",
    "space_norm",
    "opnorm_estimate",
    "duality_pairing",
    "analytic_transform",
]


class ResolutionError(ValueError):
    """The sampling resolution cannot represent the polynomial."""


def _next_pow2(n: int) -> int:
    return 1 << max(0, (n - 1).bit_length())


@dataclass(frozen=True)
class Resolution:
    """Numeric controls: circle samples ``M`` (None: automatic), radial grid ``K``, grade."""

    M: int | None = None
    K: int = 512
    grade: float = 3.0
    oversample: int = 4

    def __post_init__(self) -> None:
        if self.M is not None and (self.M < 1 or self.M & (self.M - 1)):
            raise ValueError(f"M must be a power of two, got {self.M}")
        if self.K < 2 or not self.grade >= 1 or self.oversample < 1:
            raise ValueError("need K >= 2, grade >= 1, oversample >= 1")

    def samples_for(self, f: CoefficientSeries) -> int:
        if self.M is None:
            return max(64, _next_pow2(self.oversample * len(f)))
        if self.M < len(f):
            raise ResolutionError(f"M={self.M} < deg f + 1 = {len(f)}")
        return self.M


_GRIDS: dict[tuple[int, float], object] = {}


def _grid(res: Resolution):
    key = (res.K, res.grade)
    if key not in _GRIDS:
        _GRIDS[key] = graded_radial_grid(res.K, res.grade)
    return _GRIDS[key]


# family name -> (parameter names, number of required parameters)
_FAMILIES: dict[str, tuple[tuple[str, ...], int]] = {
    "hl": (("p", "q"), 2),
    "hardy": (("s",), 1),
    "berg": (("p", "q", "alpha", "beta"), 3),
    "blocked": (("p", "q", "alpha"), 2),
    "lp": (("s", "alpha"), 1),
    "ces": (("s",), 1),
    "bloch": ((), 0),
    "littlebloch": ((), 0),
    "bmoa": ((), 0),
    "lip": (("alpha", "s"), 2),
    "zyg": (("s",), 1),
    "hsob": (("s", "beta"), 2),
    "dirichlet": (("s",), 1),
}

_DEFAULTS = {"beta": 0.0, "alpha": 0.0}


@dataclass(frozen=True)
class SpaceSpec:
    """A space and its parameters, e.g. ``SpaceSpec("hl", (0.5, 1.0))``.

    Families: ``hl`` Hardy-Lorentz (p, q); ``hardy`` H^s; ``berg`` mixed
    Bergman-Sobolev (p, q, alpha[, beta]); ``blocked`` l(p, q[, alpha]) on
    coefficients; ``lp`` weighted l^s (s[, alpha]); ``ces`` ces(s); ``bloch``;
    ``littlebloch`` (decay metric of the Bloch profile); ``bmoa``; ``lip``
    Lipschitz (alpha, s); ``zyg`` Zygmund (s); ``hsob`` Hardy-Sobolev
    (s, beta); ``dirichlet`` D^s.
    """

    family: str
    params: tuple[float, ...] = ()
    resolution: Resolution = field(default_factory=Resolution)

    def __post_init__(self) -> None:
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown space family {self.family!r}")
        names, need = _FAMILIES[self.family]
        params = tuple(float(x) for x in self.params)
        if not need <= len(params) <= len(names):
            raise ValueError(f"{self.family} takes {need}..{len(names)} parameters, got {len(params)}")
        params = params + tuple(_DEFAULTS[n] for n in names[len(params) :])
        object.__setattr__(self, "params", params)
        self._validate()

    def _validate(self) -> None:
        P = self.named
        fam = self.family
        if fam == "hl":
            check_lorentz_params(P["p"], P["q"])
        elif fam == "berg":
            MixedNormSpec(P["p"], P["q"], P["alpha"], P["beta"])
        elif fam in ("blocked",):
            if not (P["p"] > 0 and P["q"] > 0):
                raise ValueError("blocked exponents must be positive")
        elif fam in ("lp", "hardy", "hsob", "dirichlet"):
            if not P["s"] > 0:
                raise ValueError("s must be positive")
        elif fam == "ces":
            if not 1 < P["s"] < INF:
                raise ValueError("ces(s) needs 1 < s < inf")
        elif fam == "lip":
            if not (0 < P["alpha"] < 1 and P["s"] >= 1):
                raise ValueError("Lipschitz space needs 0 < alpha < 1 <= s")
        elif fam == "zyg":
            if not P["s"] >= 1:
                raise ValueError("Zygmund space needs s >= 1")

    @property
    def named(self) -> dict[str, float]:
        return dict(zip(_FAMILIES[self.family][0], self.params))

    def label(self) -> str:
        return ":".join([self.family] + [_fmt(x) for x in self.params])


def _fmt(x: float) -> str:
    if x == INF:
        return "inf"
    return repr(int(x)) if float(x).is_integer() else repr(float(x))


def parse_space(text: str, resolution: Resolution | None = None) -> SpaceSpec:
    """Parse ``family:param:...`` with ``inf`` accepted for infinite exponents."""
    parts = text.strip().split(":")
    try:
        params = tuple(INF if s.lower() in ("inf", "infinity") else float(s) for s in parts[1:])
    except ValueError as exc:
        raise ValueError(f"bad numeric parameter in {text!r}") from exc
    return SpaceSpec(parts[0], params, resolution or Resolution())


def apply_multiplier(lam: CoefficientSeries, f: CoefficientSeries) -> CoefficientSeries:
    """``B_lambda f = lambda * f``."""
    return hadamard(lam, f)


def _lip_norm(f: CoefficientSeries, order: int, alpha: float, s: float, M: int) -> float:
    samples = evaluate_circle(f, 1.0, M)
    prof = modulus_profile(samples, order, s)
    t = 2 * math.pi * np.arange(1, prof.size + 1) / M
    return abs(f.coeffs[0]) + float(np.max(prof / np.power(t, alpha)))


def space_norm(f: CoefficientSeries, spec: SpaceSpec) -> float:
    """Quasinorm of ``f`` in ``spec``."""
    if not np.any(f.coeffs):
        return 0.0
    fam, P, res = spec.family, spec.named, spec.resolution
    if fam in ("blocked", "lp", "ces"):
        if fam == "blocked":
            return blocked_norm(f, P["p"], P["q"], P["alpha"])
        if fam == "lp":
            return lp_seq_norm(f, P["s"], P["alpha"])
        return ces_norm(f, P["s"])
    M = res.samples_for(f)
    if fam == "hl":
        return hardy_lorentz_norm(f, P["p"], P["q"], M)
    if fam == "hardy":
        return lp_mean(evaluate_circle(f, 1.0, M), P["s"])
    if fam == "hsob":
        g = frac_apply(f, FracOrder(P["beta"]), "derivative")
        return lp_mean(evaluate_circle(g, 1.0, M), P["s"])
    if fam == "bmoa":
        return abs(f.coeffs[0]) + bmoa_seminorm(evaluate_circle(f, 1.0, M))
    if fam == "lip":
        return _lip_norm(f, 1, P["alpha"], P["s"], M)
    if fam == "zyg":
        return _lip_norm(f, 2, 1.0, P["s"], M)
    grid = _grid(res)
    if fam == "berg":
        return sobolev_quasinorm(f, MixedNormSpec(P["p"], P["q"], P["alpha"], P["beta"]), grid, M)
    if fam == "dirichlet":
        return sobolev_quasinorm(f, MixedNormSpec(P["s"], P["s"], 1.0, 1.0), grid, M)
    if fam == "bloch":
        return sobolev_quasinorm(f, MixedNormSpec(INF, INF, 1.0, 1.0), grid, M)
    if fam == "littlebloch":
        return h0_decay_metric(f, MixedNormSpec(INF, INF, 1.0, 1.0, little_oh=True), grid, M)
    raise AssertionError(fam)  # unreachable: families are validated


# test families ---------------------------------------------------------------

Generator = Callable[[int, np.random.Generator], CoefficientSeries]


def _random_poly(N: int, rng: np.random.Generator) -> CoefficientSeries:
    return CoefficientSeries(rng.standard_normal(N + 1) + 1j * rng.standard_normal(N + 1))


DILATION_TAIL = 40.0


def dilated_cauchy(gamma: float, N: int, c: float = 4.0) -> CoefficientSeries:
    """``(1 - rz)^(-gamma)`` with ``1 - r = c/N``, kept to degree ``N ceil(40/c)``.

    The kept tail makes the discarded coefficients smaller than ``e^{-40}``
    times the leading ones.  Plain truncation at degree ``N`` would not do:
    for ``p < 1`` the partial sums of ``(1 - z)^(-gamma)`` have
    ``H^{p,q}`` quasinorms far above that of the function itself.
    """
    N = max(N, 1)
    r = max(0.0, 1.0 - c / N)
    return dilate(cauchy_power(gamma, N * math.ceil(DILATION_TAIL / c)), r)


def _dilated_cauchy(gamma: float, c: float) -> Generator:
    return lambda N, rng: dilated_cauchy(gamma, N, c)


def generator_from_tag(tag: str) -> Generator:
    """Build a generator from tags such as ``random``, ``cauchy:2``, ``dilated:2.5:10``."""
    name, *args = tag.split(":")
    a = [float(x) for x in args]
    if name == "random" and not a:
        return _random_poly
    if name == "monomial" and not a:
        return lambda N, rng: monomial(N)
    if name == "constant" and not a:
        return lambda N, rng: monomial(0, N)
    if name == "lacunary" and not a:
        return lambda N, rng: lacunary(N)
    if name == "cauchy" and len(a) == 1:
        return lambda N, rng: cauchy_power(a[0], N)
    if name == "binomial" and len(a) == 1:
        return lambda N, rng: binomial_power(a[0], N)
    if name == "dilated" and len(a) in (1, 2):
        return _dilated_cauchy(a[0], a[1] if len(a) == 2 else 4.0)
    raise ValueError(f"unknown generator tag {tag!r}")


@dataclass(frozen=True)
class FamilyMember:
    """A test polynomial; ``degree`` is the sweep scale ``N``, which can be
    below the polynomial's own degree for dilated members."""

    tag: str
    degree: int
    series: CoefficientSeries


@dataclass(frozen=True)
class TestFamily:
    """Tagged generators evaluated at each degree.

    Each member draws from its own generator seeded by ``(seed, degree,
    crc32(tag))``, so a tag yields the same polynomial in any family.
    """

    generators: tuple[str, ...]
    degrees: tuple[int, ...]
    seed: int = 0

    __test__ = False  # not a pytest class

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        for tag in self.generators:
            generator_from_tag(tag)
        if any(d < 0 for d in self.degrees):
            raise ValueError("degrees must be nonnegative")

    def members_at(self, N: int) -> list[FamilyMember]:
        out = []
        for tag in self.generators:
            rng = np.random.default_rng([self.seed, N, zlib.crc32(tag.encode())])
            out.append(FamilyMember(tag, N, generator_from_tag(tag)(N, rng)))
        return out

    def members(self) -> list[FamilyMember]:
        return [m for N in self.degrees for m in self.members_at(N)]


@dataclass(frozen=True)
class OpnormEstimate:
    sup_ratio: float
    argmax_tag: str
    table: tuple[tuple[int, str, float], ...]  # (degree, tag, ratio)

    def per_degree_sup(self) -> dict[int, float]:
        out: dict[int, float] = {}
        for d, _, r in self.table:
            out[d] = max(out.get(d, 0.0), r)
        return out


def opnorm_estimate(
    lam: CoefficientSeries | Callable[[int], CoefficientSeries],
    domain: SpaceSpec,
    target: SpaceSpec,
    family: TestFamily,
) -> OpnormEstimate:
    """Lower bound ``sup_f ||lambda * f||_target / ||f||_domain`` over the family.

    ``lam`` may be a callable returning the multiplier for a given
    polynomial degree; it is called with each member's own degree, which
    exceeds the sweep scale for dilated members.  Members with zero domain norm are skipped with a warning.
    """
    rows = []
    for m in family.members():
        den = space_norm(m.series, domain)
        if den == 0:
            warnings.warn(f"skipping {m.tag} at degree {m.degree}: zero domain norm")
            continue
        lm = lam(m.series.degree) if callable(lam) and not isinstance(lam, CoefficientSeries) else lam
        num = space_norm(apply_multiplier(lm, m.series), target)
        rows.append((m.degree, m.tag, num / den))
    if not rows:
        raise ValueError("every family member has zero domain norm")
    rows.sort(key=lambda r: (r[0], r[1]))
    best = max(rows, key=lambda r: r[2])
    return OpnormEstimate(best[2], f"{best[1]}@{best[0]}", tuple(rows))


def duality_pairing(g: CoefficientSeries, f: CoefficientSeries) -> complex:
    """``sum_n a_n lambda_n``, the Abel limit of the pairing for polynomials."""
    n = min(len(g), len(f))
    return complex(np.sum(g.coeffs[:n] * f.coeffs[:n]))


def _w_grid() -> np.ndarray:
    ang = np.exp(2j * np.pi * np.arange(16) / 16)
    return np.concatenate([r * ang for r in (0.0, 0.5, 0.9)])


W_GRID = _w_grid()
W_GRID.setflags(write=False)


def analytic_transform(lam: CoefficientSeries, w_grid: Sequence[complex] | np.ndarray) -> np.ndarray:
    """``g_lambda(w) = sum lambda_n w^n`` for points strictly inside the disk."""
    w = np.asarray(w_grid, dtype=np.complex128)
    if np.any(np.abs(w) >= 1):
        raise ValueError("analytic transform points must satisfy |w| < 1")
    return np.asarray(lam(w))
