"""Theorem statements turned into deterministic numerical experiments.

An embedding ``X -> Y`` or a multiplier statement becomes a family of ratios
``||T f||_Y / ||f||_X`` evaluated over a sweep of degrees.  For each degree
the largest ratio seen so far (the embedding constant restricted to
polynomials of that degree) is recorded, and the slope of its logarithm
against ``log N`` decides the verdict: bounded constants give slope near 0,
failing statements give a positive power.

Every check pairs the claims with controls that are false by construction
and must visibly fail; a control that stays bounded means the sweep had no
power, and the verdict is ``inconclusive``.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np
from scipy.special import gamma as gamma_fn
from scipy.special import gammaln

from .boundary import INF, evaluate_circle, lp_mean, rearrangement
from .coeff_core import (
    CoefficientSeries,
    binomial_power,
    cauchy_kernel,
    cauchy_power,
    dilate,
    frac_apply,
    hadamard,
    lacunary,
)
from .config import load_thresholds
from .multipliers import (
    W_GRID,
    Resolution,
    SpaceSpec,
    TestFamily,
    analytic_transform,
    dilated_cauchy,
    duality_pairing,
    space_norm,
)
from .seq_spaces import blocked_norm, qstar

__all__ = [
    "DEFAULT_DEGREES",
    "SHARPNESS_DEGREES",
    "VerificationReport",
    "cauchy_pairing_residual",
    "check_nested_embedding",
    "check_hl_coefficient_inequality",
    "check_sharpness_cauchy",
    "check_blocked_parseval",
    "check_seq_multiplier",
    "check_mixed_multiplier",
    "check_hardy_multiplier",
    "check_duality_pairing",
    "check_lipschitz_identifications",
    "REGISTRY",
    "run_check",
]

DEFAULT_DEGREES: tuple[int, ...] = (64, 128, 256, 512)
SHARPNESS_DEGREES: tuple[int, ...] = (64, 128, 256, 512, 1024, 2048, 4096)
THRESHOLDS = load_thresholds()

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"


# report ----------------------------------------------------------------------


def _jsonable(x):
    if isinstance(x, float):
        if math.isnan(x):
            return "nan"
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return x
    if isinstance(x, (np.floating, np.integer)):
        return _jsonable(x.item())
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one check.

    ``statistics`` holds one row per (series, degree); ``samples`` one row per
    (series, degree, generator); ``conditions`` the exact identities that
    were asserted along the way.  ``verdict`` is a function of these rows and
    ``thresholds_used`` only.
    """

    check_id: str
    params: dict
    degrees: tuple[int, ...]
    statistics: tuple[dict, ...]
    slope_fit: dict
    verdict: str
    thresholds_used: dict
    samples: tuple[dict, ...] = ()
    conditions: tuple[dict, ...] = ()
    config: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return _jsonable(asdict(self))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def csv_rows(self) -> list[dict]:
        return [
            {
                "check_id": self.check_id,
                "degree": s["degree"],
                "generator": f"{s['series']}/{s['generator']}",
                "ratio": s["ratio"],
                "verdict": self.verdict,
            }
            for s in self.samples
        ]

    def with_config(self, config: dict) -> "VerificationReport":
        return VerificationReport(**{**asdict(self), "config": dict(config)})


def _fit(x: np.ndarray, y: np.ndarray) -> tuple[float, float]:
    """Least-squares slope and R^2 of ``y`` against ``x``."""
    xm, ym = x.mean(), y.mean()
    sxx = float(np.sum((x - xm) ** 2))
    if sxx == 0:
        return 0.0, 1.0
    slope = float(np.sum((x - xm) * (y - ym)) / sxx)
    resid = y - (ym + slope * (x - xm))
    syy = float(np.sum((y - ym) ** 2))
    r2 = 1.0 - float(np.sum(resid**2)) / syy if syy > 0 else 1.0
    return slope, r2


@dataclass
class _Series:
    name: str
    role: str  # claim | control | demo
    kind: str  # upper | two_sided
    scale: str = "log"  # log: against log N; loglog: against log log N
    rows: list[tuple[int, str, float]] = field(default_factory=list)


class _Builder:
    """Accumulates ratio samples and conditions, then renders a report."""

    def __init__(self, check_id: str, params: dict, degrees: Sequence[int], control: str | None):
        if control not in (None, "inverted"):
            raise ValueError(f"unknown control mode {control!r}")
        self.check_id = check_id
        self.params = dict(params)
        self.params["control"] = control or "none"
        self.degrees = tuple(sorted(set(int(d) for d in degrees)))
        if not self.degrees:
            raise ValueError("need at least one degree")
        self.control = control
        self.series: dict[str, _Series] = {}
        self.conditions: list[dict] = []

    def add(self, name: str, role: str, kind: str, degree: int, gen: str, ratio: float, scale: str = "log"):
        s = self.series.setdefault(name, _Series(name, role, kind, scale))
        s.rows.append((int(degree), gen, float(ratio)))

    def condition(self, name: str, value: float, threshold: float, ok: bool | None = None, cmp: str = "<="):
        if ok is None:
            ok = value <= threshold if cmp == "<=" else value >= threshold
        self.conditions.append(
            {"name": name, "value": float(value), "threshold": float(threshold), "cmp": cmp, "ok": bool(ok)}
        )

    def _analyse(self, s: _Series, th: dict) -> tuple[list[dict], dict]:
        by_deg: dict[int, list[tuple[str, float]]] = {}
        for d, g, r in s.rows:
            by_deg.setdefault(d, []).append((g, r))
        degs = sorted(by_deg)
        stats = []
        run_sup, run_inf = 0.0, INF
        sups, infs = [], []
        for d in degs:
            vals = sorted(by_deg[d], key=lambda t: t[0])
            gmax, rmax = max(vals, key=lambda t: t[1])
            rmin = min(v for _, v in vals)
            run_sup, run_inf = max(run_sup, rmax), min(run_inf, rmin)
            sups.append(run_sup)
            infs.append(run_inf)
            stats.append(
                {
                    "series": s.name,
                    "role": s.role,
                    "degree": d,
                    "ratio_min": rmin,
                    "ratio_max": rmax,
                    "sup_ratio": run_sup,
                    "inf_ratio": run_inf,
                    "witness": gmax,
                }
            )
        fit = {"role": s.role, "kind": s.kind, "scale": s.scale, "n_degrees": len(degs)}
        if len(degs) < 2 or s.kind not in ("upper", "two_sided"):
            fit.update(slope=None, outcome=INCONCLUSIVE)
            return stats, fit
        x = np.log(np.asarray(degs, dtype=np.float64))
        if s.scale == "loglog":
            x = np.log(x)
        S, I = np.asarray(sups), np.asarray(infs)
        slope = _fit(x, np.log(S))[0] if np.all(S > 0) else 0.0
        fit["slope"] = slope
        if slope > th["slope_fail"]:
            outcome = FAIL
        elif slope < th["slope_pass"]:
            outcome = PASS
        else:
            outcome = INCONCLUSIVE
        if s.kind == "two_sided":
            slope_inf = _fit(x, np.log(I))[0] if np.all(I > 0) else -INF
            spread = S[-1] / I[-1] if I[-1] > 0 else INF
            drift = max(abs(S[-1] / S[-2] - 1), abs(I[-1] / I[-2] - 1)) if I[-2] > 0 else INF
            spread_max = th["ces_spread_max"] if s.name.startswith("ces") else th["spread_max"]
            fit.update(slope_inf=slope_inf, spread=spread, drift=drift)
            if slope_inf < -th["slope_fail"] or spread >= spread_max:
                outcome = FAIL
            elif outcome == PASS and (slope_inf <= -th["slope_pass"] or drift >= th["drift_max"]):
                outcome = INCONCLUSIVE
        fit["outcome"] = outcome
        return stats, fit

    def report(self) -> VerificationReport:
        th = THRESHOLDS
        series = list(self.series.values())
        if self.control == "inverted":
            # report the false-by-construction statements as the claims
            series = [_Series(s.name, "claim", s.kind, s.scale, s.rows) for s in series if s.role == "control"]
        statistics, samples, slope_fit = [], [], {}
        for s in series:
            st, fit = self._analyse(s, th)
            statistics.extend(st)
            slope_fit[s.name] = fit
            for d, g, r in sorted(s.rows, key=lambda t: (t[0], t[1])):
                samples.append({"series": s.name, "degree": d, "generator": g, "ratio": r})
        claims = [f["outcome"] for f in slope_fit.values() if f["role"] == "claim"]
        controls = [f["outcome"] for f in slope_fit.values() if f["role"] == "control"]
        if len(self.degrees) < 2:
            verdict = INCONCLUSIVE
        elif any(not c["ok"] for c in self.conditions) or FAIL in claims:
            verdict = FAIL
        elif INCONCLUSIVE in claims or any(c != FAIL for c in controls):
            verdict = INCONCLUSIVE
        else:
            verdict = PASS
        return VerificationReport(
            check_id=self.check_id,
            params=_jsonable(self.params),
            degrees=self.degrees,
            statistics=tuple(statistics),
            slope_fit=slope_fit,
            verdict=verdict,
            thresholds_used=dict(th),
            samples=tuple(samples),
            conditions=tuple(self.conditions),
        )


# helpers ---------------------------------------------------------------------


class _Norms:
    """Memoized ``space_norm`` keyed by member identity and space label."""

    def __init__(self, resolution: Resolution | None):
        self.res = resolution or Resolution()
        self._cache: dict[tuple, float] = {}

    def spec(self, family: str, *params: float) -> SpaceSpec:
        return SpaceSpec(family, params, self.res)

    def __call__(self, key: tuple, f: CoefficientSeries, spec: SpaceSpec) -> float:
        k = key + (spec.label(),)
        if k not in self._cache:
            self._cache[k] = space_norm(f, spec)
        return self._cache[k]


def _family(family, default: Sequence[str], degrees: Sequence[int], seed: int) -> TestFamily:
    if isinstance(family, TestFamily):
        return TestFamily(family.generators, tuple(degrees), family.seed)
    gens = tuple(default if family is None else family)
    return TestFamily(gens, tuple(degrees), seed)


def _tag(x: float) -> str:
    return repr(round(float(x), 12))


def _conj(q: float) -> float:
    """Conjugate exponent, with ``q' = inf`` for ``q <= 1``."""
    if q <= 1:
        return INF
    if q == INF:
        return 1.0
    return q / (q - 1)


def cauchy_pairing_residual(g: CoefficientSeries, a: float, w_grid=W_GRID) -> float:
    """Largest ``|(g * F)(w) - g^[a-1](w)/Gamma(a)| / (1 + |g^[a-1](w)/Gamma(a)|)``.

    ``F`` is ``(1 - z)^(-a)`` truncated at the degree of ``g``.  Requires
    ``a >= 1`` so that ``a - 1`` is a genuine derivative order.
    """
    if a < 1:
        raise ValueError(f"the pairing identity is checked for a >= 1, got {a}")
    F = cauchy_power(a, g.degree)
    lhs = analytic_transform(hadamard(g, F), w_grid)
    rhs = analytic_transform(frac_apply(g, a - 1.0), w_grid) / gamma_fn(a)
    return float(np.max(np.abs(lhs - rhs) / (1.0 + np.abs(rhs))))


# checks ----------------------------------------------------------------------


def check_nested_embedding(
    p0: float = 0.25,
    p: float = 0.5,
    s: float = 1.0,
    q: float = 1.0,
    t: float = 1.0,
    beta: float = 3.0,
    family=None,
    degrees: Sequence[int] = DEFAULT_DEGREES,
    seed: int = 0,
    control: str | None = None,
    resolution: Resolution | None = None,
) -> VerificationReport:
    """``H(p0, q, beta + 1/p - 1/p0, beta) -> H^{p,q} -> H(s, t, 1/p - 1/s)``.

    Claims: both embedding ratios stay bounded.  Controls: the reversed
    inequalities grow on random polynomials and monomials.
    """
    if not (0 < p0 < p < s <= INF and 0 < q <= t <= INF and beta > 1 / p0 - 1 / p):
        raise ValueError("need 0 < p0 < p < s <= inf, 0 < q <= t <= inf, beta > 1/p0 - 1/p")
    b = _Builder("nested_embedding", dict(p0=p0, p=p, s=s, q=q, t=t, beta=beta, seed=seed), degrees, control)
    nm = _Norms(resolution)
    left = nm.spec("berg", p0, q, beta + 1 / p - 1 / p0, beta)
    mid = nm.spec("hl", p, q)
    right = nm.spec("berg", s, t, 1 / p - 1 / s)
    fam = _family(family, ("random", f"dilated:{_tag(1 / p)}", "lacunary"), b.degrees, seed)
    ctrl = _family(None, ("random", "monomial"), b.degrees, seed)
    for m in fam.members():
        key = (m.tag, m.degree)
        L, Mv, R = nm(key, m.series, left), nm(key, m.series, mid), nm(key, m.series, right)
        b.add("lower_embedding", "claim", "upper", m.degree, m.tag, Mv / L)
        b.add("upper_embedding", "claim", "upper", m.degree, m.tag, R / Mv)
    for m in ctrl.members():
        key = (m.tag, m.degree)
        L, Mv, R = nm(key, m.series, left), nm(key, m.series, mid), nm(key, m.series, right)
        b.add("inverted_lower", "control", "upper", m.degree, m.tag, L / Mv)
        b.add("inverted_upper", "control", "upper", m.degree, m.tag, Mv / R)
    return b.report()


def _coef_functional(f: CoefficientSeries, p: float, q: float) -> float:
    # (sum_{n>=1} n^{q(1-1/p)-1} |a_n|^q)^{1/q}
    a = np.abs(f.coeffs[1:])
    n = np.arange(1, a.size + 1, dtype=np.float64)
    return float(np.sum(np.power(n, q * (1 - 1 / p) - 1) * np.power(a, q)) ** (1 / q))


def check_hl_coefficient_inequality(
    p: float = 0.5,
    q: float = 1.0,
    family=None,
    degrees: Sequence[int] = DEFAULT_DEGREES,
    seed: int = 0,
    control: str | None = None,
    resolution: Resolution | None = None,
) -> VerificationReport:
    """``(sum n^{q(1-1/p)-1} |a_n|^q)^{1/q} <= C ||f||_{H^{p,q}}`` and its reverse as control."""
    if not (0 < p < 1 and 0 < q < INF):
        raise ValueError("need 0 < p < 1 and 0 < q < inf")
    b = _Builder("hl_coefficient_inequality", dict(p=p, q=q, seed=seed), degrees, control)
    nm = _Norms(resolution)
    hl = nm.spec("hl", p, q)
    fam = _family(
        family, ("random", "monomial", "lacunary", f"cauchy:{_tag(1 / p)}", f"dilated:{_tag(1 / p)}"), b.degrees, seed
    )
    ctrl = _family(None, ("monomial", "random"), b.degrees, seed)
    for m in fam.members():
        lhs = _coef_functional(m.series, p, q)
        b.add("coefficient_bound", "claim", "upper", m.degree, m.tag, lhs / nm((m.tag, m.degree), m.series, hl))
    for m in ctrl.members():
        lhs = _coef_functional(m.series, p, q)
        b.add("reverse_bound", "control", "upper", m.degree, m.tag, nm((m.tag, m.degree), m.series, hl) / lhs)
    return b.report()


def _extremal(gam: float, N: int, variant: str) -> CoefficientSeries:
    if variant == "truncated":
        return cauchy_power(gam, N)
    return dilated_cauchy(gam, N, 1.0)


def check_sharpness_cauchy(
    p: float = 0.5,
    q: float | Sequence[float] = (1.0, 2.0),
    degrees: Sequence[int] = SHARPNESS_DEGREES,
    variant: str = "dilated",
    control: str | None = None,
    resolution: Resolution | None = None,
) -> VerificationReport:
    """Extremal behaviour of ``g(z) = (1 - z)^(-1/p)`` at scale ``N``.

    ``variant="dilated"`` uses ``g_N = g_r`` with ``r = 1 - 1/N``;
    ``variant="truncated"`` uses the partial sum ``S_N g``, whose
    ``H^{p,inf}`` quasinorm grows like ``N^{1/p - 1}`` because of the
    truncation tail, so that variant is expected to fail (a)-(c).

    (a) ``||g_N||_{H^{p,inf}}`` stays bounded; (b) ``||g_N||_{H^{p,q}}^q``
    grows linearly in ``log N``; (c) ``g_N^*(t) t^{1/p}`` is flat within a
    bounded factor on ``[8/N, 1/8]``; (d) the coefficients follow their
    Stirling asymptotics.  Control: the exponent ``1/p + 1/4`` is too large
    for ``H^{p,inf}`` and its norms grow.
    """
    if not 0 < p < 1:
        raise ValueError("need 0 < p < 1")
    if variant not in ("dilated", "truncated"):
        raise ValueError(f"unknown variant {variant!r}")
    qs = tuple(float(x) for x in (q if isinstance(q, (tuple, list)) else (q,)))
    if not qs or any(not 0 < x < INF for x in qs):
        raise ValueError("q values must be finite and positive")
    th = THRESHOLDS
    b = _Builder("sharpness_cauchy", dict(p=p, q=list(qs), variant=variant), degrees, control)
    nm = _Norms(resolution)
    gam = 1 / p
    powers: dict[float, list[float]] = {x: [] for x in qs}
    for N in b.degrees:
        g = _extremal(gam, N, variant)
        M = nm.res.samples_for(g)
        b.add("weak_norm", "claim", "upper", N, f"cauchy:{_tag(gam)}", nm(("g", N), g, nm.spec("hl", p, INF)))
        h = _extremal(gam + 0.25, N, variant)
        b.add("weak_norm_excess_exponent", "control", "upper", N, f"cauchy:{_tag(gam + 0.25)}",
              nm(("h", N), h, nm.spec("hl", p, INF)))
        for x in qs:
            powers[x].append(nm(("g", N), g, nm.spec("hl", p, x)) ** x)
        prof = rearrangement(evaluate_circle(g, 1.0, M))
        lo, hi = 8.0 / N, 1.0 / 8.0
        if lo < hi:
            j = np.arange(int(math.ceil(lo * M)), int(math.floor(hi * M)) + 1)
            flat = prof.sorted_abs[j] * np.power(j / M, 1 / p)
            b.condition(f"rearrangement_flatness@{N}", flat.max() / flat.min(), th["rearrangement_factor"])
    logs = np.log(np.asarray(b.degrees, dtype=np.float64))
    if len(b.degrees) >= 2:
        for x in qs:
            y = np.asarray(powers[x])
            coef, r2 = _fit(logs, y)
            local = np.diff(y) / np.diff(logs)
            dev = float(np.max(np.abs(local / coef - 1))) if coef > 0 else INF
            b.condition(f"log_growth_coefficient_q={_tag(x)}", coef, 0.0, ok=coef > 0, cmp=">")
            b.condition(f"log_growth_r2_q={_tag(x)}", r2, th["r2_min"], cmp=">=")
            b.condition(f"log_growth_stability_q={_tag(x)}", dev, th["coef_stability"])
    n = 4096
    c = cauchy_power(gam, n).coeffs[n].real
    stirling = c / (n ** (gam - 1) / math.exp(gammaln(gam)))
    b.condition("stirling_ratio_error", abs(stirling - 1), th["stirling_tol"])
    return b.report()


def check_blocked_parseval(
    q: float = 2.0,
    alpha: float = 1.0,
    beta: float = 0.0,
    family=None,
    degrees: Sequence[int] = DEFAULT_DEGREES,
    seed: int = 0,
    control: str | None = None,
    resolution: Resolution | None = None,
) -> VerificationReport:
    """``H(2, q, alpha, beta) = l(2, q, beta - alpha)`` as a two-sided ratio bound.

    Control: the blocked weight lowered by 1/4 no longer matches.
    """
    if not (q > 0 and alpha > 0):
        raise ValueError("need q > 0 and alpha > 0")
    th = THRESHOLDS
    b = _Builder("blocked_parseval", dict(q=q, alpha=alpha, beta=beta, seed=seed), degrees, control)
    nm = _Norms(resolution)
    H = nm.spec("berg", 2.0, q, alpha, beta)
    B = nm.spec("blocked", 2.0, q, beta - alpha)
    Bwrong = nm.spec("blocked", 2.0, q, beta - alpha - 0.25)
    fam = _family(family, ("random", "monomial", "lacunary", "cauchy:1", "dilated:2:4"), b.degrees, seed)
    worst = 0.0
    for m in fam.members():
        key = (m.tag, m.degree)
        h = nm(key, m.series, H)
        b.add("parseval_ratio", "claim", "two_sided", m.degree, m.tag, h / nm(key, m.series, B))
        b.add("mismatched_weight", "control", "upper", m.degree, m.tag, h / nm(key, m.series, Bwrong))
        for r in (0.3, 0.7, 0.99):
            M = nm.res.samples_for(m.series)
            m2 = lp_mean(evaluate_circle(m.series, r, M), 2.0)
            worst = max(worst, abs(m2 - _parseval_mean(m.series, r)) / _parseval_mean(m.series, r))
    b.condition("parseval_anchor", worst, th["parseval_tol"])
    return b.report()


def _parseval_mean(f: CoefficientSeries, r: float) -> float:
    """``(sum |a_n|^2 r^{2n})^{1/2}``, scaled against underflow."""
    v = np.abs(f.coeffs) * np.power(r, np.arange(len(f)))
    top = float(v.max())
    return top * math.sqrt(math.fsum(((v / top) ** 2).tolist())) if top > 0 else 0.0


class _PerLength:
    """Multiplier factory memoized by polynomial length."""

    def __init__(self, make: Callable[[int], CoefficientSeries]):
        self.make = make
        self._cache: dict[int, CoefficientSeries] = {}

    def __call__(self, f: CoefficientSeries) -> CoefficientSeries:
        n = len(f)
        if n not in self._cache:
            self._cache[n] = self.make(n - 1)
        return self._cache[n]


def _blocked_multiplier(N: int, s: float, t: float, w: float, growth: float, seed: int) -> CoefficientSeries:
    """Random-phase ``lambda`` of degree ``N`` with flat moduli on each dyadic block.

    Block ``k`` has ``l^s`` norm ``b_k`` after weighting by ``n^w``, where
    ``b_k = 2^{growth k}`` (growth > 0 leaves the class) or, for ``growth = 0``,
    a profile with finite ``l^t`` norm; the admissible one is normalized to
    ``l(s, t, w)`` norm 1.
    """
    rng = np.random.default_rng([seed, N, 7])
    n = np.arange(N + 1, dtype=np.float64)
    k = np.zeros(N + 1)
    k[1:] = np.floor(np.log2(n[1:])) + 1
    size = np.where(k == 0, 1.0, np.power(2.0, np.maximum(k - 1, 0)))
    if growth > 0:
        bk = np.power(2.0, growth * k)
    elif t == INF:
        bk = np.ones_like(k)
    else:
        bk = np.power(k + 1, -2.0 / t)
    inner = 1.0 if s == INF else np.power(size, -1.0 / s)
    wn = np.where(n == 0, 1.0, np.power(np.maximum(n, 1.0), w))
    phase = np.exp(2j * np.pi * rng.random(N + 1))
    lam = CoefficientSeries(bk * inner / wn * phase)
    if growth > 0:
        return lam
    return lam.scale(1.0 / blocked_norm(lam, s, t, w))


def check_seq_multiplier(
    p: float = 0.5,
    q: float = 1.0,
    s: float = 2.0,
    degrees: Sequence[int] = DEFAULT_DEGREES,
    seed: int = 0,
    control: str | None = None,
    resolution: Resolution | None = None,
) -> VerificationReport:
    """``(H^{p,q}, l^s) = l(s, q*s, 1/p - 1)``.

    Sufficiency: a normalized member of the target class keeps
    ``||lambda * f||_{l^s} / ||f||_{H^{p,q}}`` bounded over the family.  The
    boundary weight ``lambda_n = n^{1 - 1/p}`` must map ``H^{p,inf}`` into
    ``l^inf``.  Necessity control: block norms inflated by ``2^{k/2}`` make
    the ratio grow on dilated Cauchy functions.
    """
    if not (0 < p < 1 and 0 < q < INF and s > 0):
        raise ValueError("need 0 < p < 1, 0 < q < inf, s > 0")
    t = qstar(q, s)
    w = 1 / p - 1
    b = _Builder("seq_multiplier", dict(p=p, q=q, s=s, seed=seed, target_q=t), degrees, control)
    nm = _Norms(resolution)
    hl, hl_weak = nm.spec("hl", p, q), nm.spec("hl", p, INF)
    ls, linf = nm.spec("lp", s), nm.spec("lp", INF)
    g1, g2 = _tag(1 / p), _tag(1 / p + 1)
    fam = _family(None, ("random", "monomial", "lacunary", f"dilated:{g1}", f"dilated:{g2}:10"), b.degrees, seed)
    probe = _family(None, (f"dilated:{g2}:10",), b.degrees, seed)
    good = _PerLength(lambda N: _blocked_multiplier(N, s, t, w, 0.0, seed))
    bad = _PerLength(lambda N: _blocked_multiplier(N, s, t, w, 0.5, seed))

    def _edge(N: int) -> CoefficientSeries:
        e = np.ones(N + 1)
        e[1:] = np.power(np.arange(1, N + 1, dtype=np.float64), 1 - 1 / p)
        return CoefficientSeries(e)

    edge = _PerLength(_edge)
    for m in fam.members():
        key = (m.tag, m.degree)
        d = nm(key, m.series, hl)
        b.add("sufficiency", "claim", "upper", m.degree, m.tag, space_norm(hadamard(good(m.series), m.series), ls) / d)
        b.add("diagonal_edge", "claim", "upper", m.degree, m.tag,
              space_norm(hadamard(edge(m.series), m.series), linf) / nm(key, m.series, hl_weak))
    for m in probe.members():
        d = nm((m.tag, m.degree), m.series, hl)
        b.add("inflated_block_probe", "control", "upper", m.degree, m.tag,
              space_norm(hadamard(bad(m.series), m.series), ls) / d)
    worst = max(abs(blocked_norm(lam, s, t, w) - 1) for lam in good._cache.values())
    b.condition("multiplier_normalization", worst, 1e-12)
    return b.report()


def _power_multiplier(c: float, N: int) -> CoefficientSeries:
    # (1 - z)^(-c) for any real c
    return cauchy_power(c, N) if c > 0 else binomial_power(-c, N)


def check_mixed_multiplier(
    p: float = 0.5,
    q: float = 1.0,
    s: float = 2.0,
    t: float = 2.0,
    alpha: float | None = None,
    beta: float = 1.0,
    gamma: float = 0.0,
    delta: float = 0.0,
    degrees: Sequence[int] = DEFAULT_DEGREES,
    seed: int = 0,
    control: str | None = None,
    resolution: Resolution | None = None,
) -> VerificationReport:
    """Multipliers into ``H(s, t, beta, gamma)``.

    With ``alpha=None`` the domain is ``H^{p,q}``; otherwise it is
    ``H(p, q, alpha, delta)``.  Either way the multiplier space is
    ``H(s, q*t, 1, m)`` with ``m = 1/p + gamma - beta (+ alpha - delta)``.

    Admissible ``lambda = (1 - z)^(-c)`` sits on the boundary of that space
    (``c = 1 + 1/s - m``).  Sufficiency: ``||lambda * f|| / ||f||`` bounded.
    Necessity: ``F = (1 - z)^(-a)`` belongs to the domain and
    ``lambda * F = lambda^[a-1] / Gamma(a)`` exactly, so
    ``||lambda^[a-1]||`` against ``||F||`` (both dilated to scale ``N``) must
    stay bounded; for the all-ones ``lambda`` it grows (control).
    """
    if not (0 < p and 0 < q and 0 < s and 0 < t and beta > 0):
        raise ValueError("exponents and beta must be positive")
    if alpha is None:
        if not p < min(1.0, s):
            raise ValueError("need p < min(1, s) for a Hardy-Lorentz domain")
        m_order = 1 / p + gamma - beta
        a = 1 / p
        domain_args = ("hl", p, q)
    else:
        if not (alpha > 0 and p <= min(1.0, s)):
            raise ValueError("need alpha > 0 and p <= min(1, s)")
        m_order = 1 / p + alpha - beta + gamma - delta
        a = alpha + 1 / p - delta
        domain_args = ("berg", p, q, alpha, delta)
    if a < 1:
        raise ValueError("the extremal exponent alpha + 1/p - delta must be >= 1")
    th = THRESHOLDS
    b = _Builder(
        "mixed_multiplier",
        dict(p=p, q=q, s=s, t=t, alpha="none" if alpha is None else alpha, beta=beta, gamma=gamma,
             delta=delta, seed=seed, multiplier_order=m_order),
        degrees,
        control,
    )
    nm = _Norms(resolution)
    dom = nm.spec(*domain_args)
    tgt = nm.spec("berg", s, t, beta, gamma)
    mult = nm.spec("berg", s, qstar(q, t), 1.0, m_order)
    c = 1 + 1 / s - m_order
    ftag = f"dilated:{_tag(a)}"
    fam = _family(None, ("random", "monomial", "lacunary", ftag), b.degrees, seed)
    good = _PerLength(lambda N: (lambda lam: lam.scale(1.0 / space_norm(lam, mult)))(_power_multiplier(c, N)))
    worst = 0.0
    for m in fam.members():
        d = nm((m.tag, m.degree), m.series, dom)
        b.add("sufficiency", "claim", "upper", m.degree, m.tag, space_norm(hadamard(good(m.series), m.series), tgt) / d)
    for N in b.degrees:
        F = dilated_cauchy(a, N)
        r = 1.0 - 4.0 / N
        fdom = nm((ftag, N), F, dom)
        L = F.degree
        for name, role, mu in (("necessity_admissible", "claim", good(F)), ("necessity_all_ones", "control", cauchy_kernel(L))):
            worst = max(worst, cauchy_pairing_residual(mu, a))
            image = dilate(frac_apply(mu, a - 1.0), r).scale(1.0 / gamma_fn(a))
            b.add(name, role, "upper", N, ftag, space_norm(image, tgt) / fdom)
    b.condition("cauchy_pairing_identity", worst, th["pairing_tol"])
    return b.report()


def _lacunary_multiplier(N: int, exponent: float) -> CoefficientSeries:
    k = np.arange(int(math.log2(N)) + 1) if N >= 1 else np.arange(0)
    return lacunary(N, np.power(2.0, exponent * k))


def check_hardy_multiplier(
    p: float = 0.5,
    q: float = 1.0,
    s: float = 1.0,
    degrees: Sequence[int] = DEFAULT_DEGREES,
    seed: int = 0,
    control: str | None = None,
    resolution: Resolution | None = None,
) -> VerificationReport:
    """``(H^{p,q}, H^s) = H(s, inf, 1, 1/p)`` and the chain ``D^s, H^s, H(s,2,1,1)``.

    For ``s <= 2`` the chain reads ``D^s -> H^s -> H(s,2,1,1)`` and reverses
    for ``s >= 2``.  The reversed chain for ``s < 2`` fails only
    logarithmically on lacunary series, so that control is fitted against
    ``log log N``.  Admissible multipliers: ``(1 - z)^(-c)`` and a lacunary
    series, both on the boundary of ``H(s, inf, 1, 1/p)``; inadmissible: the
    all-ones sequence and an inflated lacunary series.  For ``s = 2`` the
    multiplier norm is also compared with ``l(2, inf, 1/p - 1)``.
    """
    if not (0 < s < INF and 0 < p < min(1.0, s) and 0 < q <= min(2.0, s)):
        raise ValueError("need 0 < s < inf, 0 < p < min(1, s), 0 < q <= min(2, s)")
    b = _Builder("hardy_multiplier", dict(p=p, q=q, s=s, seed=seed), degrees, control)
    nm = _Norms(resolution)
    Hs, Ds, B = nm.spec("hardy", s), nm.spec("dirichlet", s), nm.spec("berg", s, 2.0, 1.0, 1.0)
    dom, mult = nm.spec("hl", p, q), nm.spec("berg", s, INF, 1.0, 1 / p)
    fam = _family(None, ("random", "monomial", "lacunary", f"dilated:{_tag(1 / p)}", f"dilated:{_tag(1 / p + 1)}:10"),
                  b.degrees, seed)
    chain_fam = _family(None, ("random", "monomial", "lacunary", f"cauchy:{_tag(1 / s)}"), b.degrees, seed)
    for m in chain_fam.members():
        key = (m.tag, m.degree)
        hs, ds, bb = nm(key, m.series, Hs), nm(key, m.series, Ds), nm(key, m.series, B)
        if s <= 2:
            b.add("chain_dirichlet_to_hardy", "claim", "upper", m.degree, m.tag, hs / ds)
            b.add("chain_hardy_to_bergman", "claim", "upper", m.degree, m.tag, bb / hs)
        if s >= 2:
            b.add("chain_bergman_to_hardy", "claim", "upper", m.degree, m.tag, hs / bb)
            b.add("chain_hardy_to_dirichlet", "claim", "upper", m.degree, m.tag, ds / hs)
    if s < 2:
        swap = _family(None, ("lacunary",), b.degrees, seed)
        for m in swap.members():
            key = (m.tag, m.degree)
            b.add("swapped_chain_lacunary", "control", "upper", m.degree, m.tag,
                  nm(key, m.series, Ds) / nm(key, m.series, Hs), scale="loglog")

    def _normalized(lam: CoefficientSeries) -> CoefficientSeries:
        return lam.scale(1.0 / space_norm(lam, mult))

    c = 1 + 1 / s - 1 / p
    admissible = {
        "power": _PerLength(lambda N: _normalized(_power_multiplier(c, N))),
        "lacunary": _PerLength(lambda N: _normalized(_lacunary_multiplier(N, 1 - 1 / p))),
    }
    bad = {
        "all_ones": _PerLength(cauchy_kernel),
        "inflated_lacunary": _PerLength(lambda N: _lacunary_multiplier(N, 1 - 1 / p + 0.5)),
    }
    for m in fam.members():
        d = nm((m.tag, m.degree), m.series, dom)
        for name, lam in admissible.items():
            b.add(f"sufficiency_{name}", "claim", "upper", m.degree, m.tag,
                  space_norm(hadamard(lam(m.series), m.series), Hs) / d)
        for name, lam in bad.items():
            b.add(f"necessity_{name}", "control", "upper", m.degree, m.tag,
                  space_norm(hadamard(lam(m.series), m.series), Hs) / d)
    if s == 2:
        blk = nm.spec("blocked", 2.0, INF, 1 / p - 1)
        for N in b.degrees:
            probe = cauchy_kernel(N)
            for name, lam in {**admissible, **bad}.items():
                mu = lam(probe)
                b.add("multiplier_norm_vs_blocked", "claim", "two_sided", N, name,
                      space_norm(mu, mult) / space_norm(mu, blk))
    return b.report()


def check_duality_pairing(
    p: float = 0.5,
    q: float = 2.0,
    degrees: Sequence[int] = DEFAULT_DEGREES,
    seed: int = 0,
    control: str | None = None,
    resolution: Resolution | None = None,
) -> VerificationReport:
    """``(H^{p,q})^* = H(inf, q', 1, 1/p)`` under the coefficient pairing.

    ``g = (1 - z)^kappa`` with ``kappa > 1/p - 1`` normalized in the dual
    space keeps ``|<g, f>| / ||f||_{H^{p,q}}`` bounded.  Control: the
    unnormalized ``(1 - z)^(-1/p - 1)`` lies far outside the dual ball.
    The dilation identity ``<g, f_r> = (f * g)(r)`` is asserted exactly.
    """
    if not (0 < p < 1 and 0 < q < INF):
        raise ValueError("need 0 < p < 1 and 0 < q < inf")
    th = THRESHOLDS
    qc = _conj(q)
    b = _Builder("duality_pairing", dict(p=p, q=q, seed=seed, dual_q=qc), degrees, control)
    nm = _Norms(resolution)
    dom, dual = nm.spec("hl", p, q), nm.spec("berg", INF, qc, 1.0, 1 / p)
    fam = _family(
        None, ("random", "monomial", "lacunary", f"dilated:{_tag(1 / p)}", f"binomial:{_tag(1 - 1 / p)}"), b.degrees, seed
    )
    kappas = (1 / p - 1 + 0.25, 1 / p - 1 + 0.5)
    gs = {
        f"binomial:{_tag(k)}": _PerLength(lambda N, k=k: (lambda g: g.scale(1.0 / space_norm(g, dual)))(binomial_power(k, N)))
        for k in kappas
    }
    bad = _PerLength(lambda N: cauchy_power(1 / p + 1, N))
    first = next(iter(gs))
    worst = 0.0
    for m in fam.members():
        d = nm((m.tag, m.degree), m.series, dom)
        for gname, g in gs.items():
            b.add(f"pairing_{gname}", "claim", "upper", m.degree, m.tag, abs(duality_pairing(g(m.series), m.series)) / d)
        b.add("pairing_outside_dual_ball", "control", "upper", m.degree, m.tag,
              abs(duality_pairing(bad(m.series), m.series)) / d)
        g0 = gs[first](m.series)
        for r in (0.5, 0.9):
            lhs = duality_pairing(g0, dilate(m.series, r))
            rhs = hadamard(m.series, g0)(r)
            worst = max(worst, abs(lhs - rhs) / max(1.0, abs(rhs)))
    b.condition("pairing_dilation_identity", worst, th["dilation_tol"])
    return b.report()


def check_lipschitz_identifications(
    alpha: float = 0.5,
    s: float = INF,
    degrees: Sequence[int] = DEFAULT_DEGREES,
    seed: int = 0,
    control: str | None = None,
    resolution: Resolution | None = None,
) -> VerificationReport:
    """Lipschitz and Zygmund classes as Bergman-Sobolev spaces, plus BMOA.

    Claims: ``Lambda_alpha^s ~ H(s, inf, 1 - alpha, 1)`` and
    ``Lambda_*^s ~ H(s, inf, 1, 2)`` as two-sided ratio bounds, and
    ``||f||_BMO <= C ||f||_{H(inf, 2, 1, 1)}``.  Control: the Lipschitz norm
    against ``H(s, inf, 5/4 - alpha, 1)`` grows like ``N^{1/4}``.  Demo:
    lacunary series stay bounded in the Bloch norm while the BMO seminorm
    grows like ``sqrt(log N)``.
    """
    if not 0 < alpha < 1 <= s:
        raise ValueError("need 0 < alpha < 1 <= s")
    b = _Builder("lipschitz_identifications", dict(alpha=alpha, s=s, seed=seed), degrees, control)
    nm = _Norms(resolution)
    lip, zyg = nm.spec("lip", alpha, s), nm.spec("zyg", s)
    H1, H2 = nm.spec("berg", s, INF, 1 - alpha, 1.0), nm.spec("berg", s, INF, 1.0, 2.0)
    Hwrong = nm.spec("berg", s, INF, 1.25 - alpha, 1.0)
    Hbmo, bloch, bmo = nm.spec("berg", INF, 2.0, 1.0, 1.0), nm.spec("bloch"), nm.spec("bmoa")
    fam = _family(None, ("random", "monomial", "lacunary", f"binomial:{_tag(alpha)}", "binomial:1.5"), b.degrees, seed)
    for m in fam.members():
        key = (m.tag, m.degree)
        f = m.series
        L = nm(key, f, lip)
        b.add("lipschitz_equivalence", "claim", "two_sided", m.degree, m.tag, L / nm(key, f, H1))
        b.add("zygmund_equivalence", "claim", "two_sided", m.degree, m.tag, nm(key, f, zyg) / nm(key, f, H2))
        b.add("bmoa_embedding", "claim", "upper", m.degree, m.tag,
              (nm(key, f, bmo) - abs(f.coeffs[0])) / nm(key, f, Hbmo))
        b.add("lipschitz_mismatched_order", "control", "upper", m.degree, m.tag, L / nm(key, f, Hwrong))
    demo = _family(None, ("lacunary",), b.degrees, seed)
    for m in demo.members():
        key = (m.tag, m.degree)
        b.add("lacunary_bloch_norm", "demo", "upper", m.degree, m.tag, nm(key, m.series, bloch), scale="loglog")
        b.add("lacunary_bmo_seminorm", "demo", "upper", m.degree, m.tag,
              nm(key, m.series, bmo) - abs(m.series.coeffs[0]), scale="loglog")
    return b.report()


# registry --------------------------------------------------------------------


@dataclass(frozen=True)
class CheckEntry:
    func: Callable[..., VerificationReport]
    defaults: dict


REGISTRY: dict[str, CheckEntry] = {
    "nested_embedding": CheckEntry(check_nested_embedding, dict(p0=0.25, p=0.5, s=1.0, q=1.0, t=1.0, beta=3.0)),
    "hl_coefficient_inequality": CheckEntry(check_hl_coefficient_inequality, dict(p=0.5, q=1.0)),
    "sharpness_cauchy": CheckEntry(check_sharpness_cauchy, dict(p=0.5)),
    "blocked_parseval": CheckEntry(check_blocked_parseval, dict(q=2.0, alpha=1.0, beta=0.0)),
    "seq_multiplier": CheckEntry(check_seq_multiplier, dict(p=0.5, q=1.0, s=2.0)),
    "mixed_multiplier": CheckEntry(check_mixed_multiplier, dict(p=0.5, q=1.0, s=2.0, t=2.0, beta=1.0, gamma=0.0)),
    "hardy_multiplier": CheckEntry(check_hardy_multiplier, dict(p=0.5, q=1.0, s=1.0)),
    "duality_pairing": CheckEntry(check_duality_pairing, dict(p=0.5, q=2.0)),
    "lipschitz_identifications": CheckEntry(check_lipschitz_identifications, dict(alpha=0.5, s=INF)),
}


def run_check(check_id: str, params: dict | None = None, **kwargs) -> VerificationReport:
    """Run a registered check with its defaults overridden by ``params``."""
    if check_id not in REGISTRY:
        raise KeyError(check_id)
    entry = REGISTRY[check_id]
    merged = {**entry.defaults, **(params or {})}
    return entry.func(**merged, **kwargs)
