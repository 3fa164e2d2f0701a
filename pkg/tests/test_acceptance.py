"""Acceptance criteria, one test per criterion at the stated tolerances and budgets."""

import json
import math
import time
from fractions import Fraction

import numpy as np
import pytest

from hllab import (

    SHARPNESS_DEGREES,
    CoefficientSeries,
    FracOrder,
    MixedNormSpec,
    RearrangementProfile,
    W_GRID,
    bergman_quasinorm,
    blocked_norm,
    cauchy_pairing_residual,
    cauchy_power,
    frac_apply,
    graded_radial_grid,
    integral_means,
    kellogg_target_params,
    lorentz_quasinorm,
    qstar,
    run_check,
)
from hllab.cli import main

INF = math.inf

from conftest import record_criterion


def _random_poly(rng, max_deg):
    d = int(rng.integers(0, max_deg + 1))
    return CoefficientSeries(rng.standard_normal(d + 1) + 1j * rng.standard_normal(d + 1))


def test_criterion_01_parseval_anchor():
    t0 = time.perf_counter()
    rng = np.random.default_rng(1)
    radii = np.array([0.3, 0.7, 0.99])
    worst = 0.0
    for _ in range(200):
        f = _random_poly(rng, 512)
        M = max(64, 1 << (4 * len(f) - 1).bit_length())
        got = integral_means(f, radii, 2.0, M)
        n = np.arange(len(f))
        exact = np.array([math.sqrt(math.fsum((np.abs(f.coeffs) ** 2 * r ** (2 * n)).tolist())) for r in radii])
        worst = max(worst, float(np.max(np.abs(got - exact) / exact)))
    dt = time.perf_counter() - t0
    ok = worst < 1e-10 and dt < 10
    record_criterion(1, ok, f"max rel err {worst:.2e} (tol 1e-10), {dt:.2f}s")
    assert ok


def test_criterion_02_closed_form_norms():
    t0 = time.perf_counter()
    one = RearrangementProfile(np.ones(1024))
    errs = [abs(lorentz_quasinorm(one, p, q) - (p / q) ** (1 / q)) for p, q in [(2, 1), (0.5, 0.5)]]
    errs.append(abs(lorentz_quasinorm(one, 3, INF) - 1.0))
    grid = graded_radial_grid(512)
    berg = [
        abs(bergman_quasinorm(CoefficientSeries([1.0]), MixedNormSpec(p, 2.0, a), grid, 64) - (1 / (2 * a)) ** 0.5)
        for p in (0.5, 1.0, 2.0)
        for a in (0.25, 0.5, 1.0, 2.0)
    ]
    dt = time.perf_counter() - t0
    ok = max(errs) <= 1e-12 and max(berg) < 1e-4 and dt < 5
    record_criterion(2, ok, f"Lorentz err {max(errs):.1e} (tol 1e-12), mixed err {max(berg):.1e} (tol 1e-4), {dt:.2f}s")
    assert ok


def test_criterion_03_weak_type_constant():
    t0 = time.perf_counter()
    rng = np.random.default_rng(3)
    grid = [(p, q) for p in (0.5, 1.0, 2.0) for q in (0.5, 1.0, 4.0)]
    worst = -INF
    for _ in range(1000):
        a = np.sort(rng.pareto(rng.uniform(0.5, 3.0), 1024))[::-1]
        prof = RearrangementProfile(a)
        for p, q in grid:
            weak = lorentz_quasinorm(prof, p, INF)
            bound = (q / p) ** (1 / q) * lorentz_quasinorm(prof, p, q)
            worst = max(worst, (weak - bound) / bound)
    dt = time.perf_counter() - t0
    ok = worst <= 1e-12 and dt < 10
    record_criterion(3, ok, f"max relative excess {worst:.2e} (slack 1e-12), {dt:.2f}s")
    assert ok


def test_criterion_04_fractional_round_trip():
    t0 = time.perf_counter()
    rng = np.random.default_rng(4)
    worst = 0.0
    for beta in (0.25, 0.5, 1.0, 2.5, 5.0):
        for flavor in ("gamma", "power"):
            for deg in (0, 1, 17, 256, 512):
                f = CoefficientSeries(rng.standard_normal(deg + 1) + 1j * rng.standard_normal(deg + 1))
                o = FracOrder(beta, flavor)
                back = frac_apply(frac_apply(f, o, "derivative"), o, "integral")
                worst = max(worst, float(np.max(np.abs(back.coeffs - f.coeffs) / np.abs(f.coeffs))))
    cworst = 0.0
    for gamma in (0.5, 4 / 3, 2.0, 3.0, 4.0):
        c = cauchy_power(gamma, 4096).coeffs.real
        ref = np.empty(4097)
        ref[0] = 1.0
        for n in range(1, 4097):
            ref[n] = ref[n - 1] * (n - 1 + gamma) / n
        cworst = max(cworst, float(np.max(np.abs(c - ref) / ref)))
    dt = time.perf_counter() - t0
    ok = worst < 1e-12 and cworst < 1e-10 and dt < 5
    record_criterion(4, ok, f"round trip {worst:.1e} (tol 1e-12), Cauchy vs recurrence {cworst:.1e} (tol 1e-10), {dt:.2f}s")
    assert ok


def test_criterion_05_qstar_algebra():
    t0 = time.perf_counter()
    values = [Fraction(1, 4), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(1), Fraction(3, 2),
              Fraction(2), Fraction(5, 2), Fraction(3), Fraction(4), Fraction(8), INF]
    bad = [(q, s) for q in values for s in values if qstar(qstar(q, s), s) != max(q, s)]
    dt = time.perf_counter() - t0
    ok = not bad and dt < 1
    record_criterion(5, ok, f"{len(values)}x{len(values)} grid, {len(bad)} mismatches, {dt:.3f}s")
    assert ok


HOLDER_TUPLES = [
    # (p, q, alpha, r, s, beta) for l(p,q,alpha) -> l(r,s,beta)
    (1.0, 1.0, 0.0, 1.0, 1.0, 0.0),
    (2.0, 2.0, 0.5, 1.0, 1.0, 1.0),
    (0.5, 1.0, 0.0, 2.0, 2.0, 1.0),
    (INF, 2.0, 1.0, 2.0, 1.0, 0.0),
    (2.0, INF, -0.5, 1.0, 4.0, 0.25),
    (4.0, 0.5, 0.0, 4.0, 0.5, -1.0),
]


def test_criterion_06_holder_constant_one():
    t0 = time.perf_counter()
    rng = np.random.default_rng(6)
    worst = -INF
    for p, q, alpha, r, s, beta in HOLDER_TUPLES:
        pr, qs, w = kellogg_target_params(p, q, alpha, r, s, beta)
        for _ in range(500):
            n = int(rng.integers(1, 1025))
            lam = rng.standard_normal(n) * rng.pareto(2.0, n)
            x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            lhs = blocked_norm(lam * x, r, s, beta)
            rhs = blocked_norm(lam, pr, qs, w) * blocked_norm(x, p, q, alpha)
            worst = max(worst, (lhs - rhs) / rhs)
    dt = time.perf_counter() - t0
    ok = worst <= 1e-12 and dt < 10
    record_criterion(6, ok, f"max relative excess {worst:.2e} (slack 1e-12), {dt:.2f}s")
    assert ok


def test_criterion_07_nested_embedding():
    t0 = time.perf_counter()
    details, ok = [], True
    for p0, p, s, q, t, beta in [(0.25, 0.5, 1, 1, 1, 3), (0.5, 0.75, 2, 2, 2, 2)]:
        kw = dict(p0=p0, p=p, s=s, q=q, t=t, beta=beta)
        rep = run_check("nested_embedding", kw)
        inv = run_check("nested_embedding", kw, control="inverted")
        claims = [abs(rep.slope_fit[k]["slope"]) for k in ("lower_embedding", "upper_embedding")]
        controls = [f["slope"] for f in inv.slope_fit.values()]
        ok &= max(claims) < 0.05 and min(controls) > 0.1
        details.append(f"({p0},{p}): claim |slope| {max(claims):.3f}, control slope {min(controls):.3f}")
    dt = time.perf_counter() - t0
    ok &= dt < 180
    record_criterion(7, ok, "; ".join(details) + f", {dt:.1f}s")
    assert ok


def _sharpness_ok(rep):
    fit = rep.slope_fit["weak_norm"]
    conds = {c["name"]: c for c in rep.conditions}
    r2 = [c for n, c in conds.items() if n.startswith("log_growth_r2")]
    flat = [c for n, c in conds.items() if n.startswith("rearrangement_flatness")]
    ok = fit["slope"] < 0.05 and all(c["ok"] for c in r2) and all(c["ok"] for c in flat)
    worst_r2 = min(c["value"] for c in r2)
    worst_flat = max(c["value"] for c in flat)
    return ok, f"weak slope {fit['slope']:.3f}, min R^2 {worst_r2:.3f}, max flatness factor {worst_flat:.2f}"


def test_criterion_08_sharpness_of_cauchy_witness():
    # Literal statement: truncated Taylor polynomials S_N of (1-z)^(-1/p).
    t0 = time.perf_counter()
    ok, details = True, []
    for p in (0.5, 0.75):
        rep = run_check("sharpness_cauchy", dict(p=p, q=(1.0, 2.0)), variant="truncated", degrees=SHARPNESS_DEGREES)
        good, d = _sharpness_ok(rep)
        ok &= good
        details.append(f"p={p}: {d}")
    dt = time.perf_counter() - t0
    ok &= dt < 120
    record_criterion(8, ok, "truncated S_N; " + "; ".join(details) + f", {dt:.1f}s")
    assert ok


def test_criterion_08_dilated_extremals():
    # Same statistics on the dilations (1 - r z)^(-1/p), r = 1 - 1/N, which
    # are the extremals the sharpness statement actually needs.
    ok = True
    for p in (0.5, 0.75):
        rep = run_check("sharpness_cauchy", dict(p=p, q=(1.0, 2.0)), variant="dilated", degrees=SHARPNESS_DEGREES)
        good, d = _sharpness_ok(rep)
        print(f"dilated p={p}: {d} -> {rep.verdict}")
        ok &= good and rep.verdict == "pass"
    assert ok


def test_criterion_09_blocked_parseval():
    t0 = time.perf_counter()
    ok, details = True, []
    for q, alpha, beta in [(2.0, 1.0, 0.0), (INF, 1.0, 1.0), (1.0, 0.5, 0.0)]:
        rep = run_check("blocked_parseval", dict(q=q, alpha=alpha, beta=beta))
        fit = rep.slope_fit["parseval_ratio"]
        ok &= fit["spread"] < 20 and fit["slope"] < 0.05
        details.append(f"({q},{alpha},{beta}): spread {fit['spread']:.2f} slope {fit['slope']:.3f}")
    dt = time.perf_counter() - t0
    ok &= dt < 120
    record_criterion(9, ok, "; ".join(details) + f", {dt:.1f}s")
    assert ok


def test_criterion_10_fractional_pairing_identity():
    t0 = time.perf_counter()
    rng = np.random.default_rng(10)
    worst = 0.0
    for alpha, p in [(1.0, 0.5), (0.5, 0.75)]:
        for _ in range(100):
            g = _random_poly(rng, 512)
            worst = max(worst, cauchy_pairing_residual(g, alpha + 1 / p, W_GRID))
    dt = time.perf_counter() - t0
    ok = worst < 1e-9 and dt < 30
    record_criterion(10, ok, f"max rel residual {worst:.2e} (tol 1e-9), {dt:.2f}s")
    assert ok


def test_criterion_11_multiplier_suite():
    t0 = time.perf_counter()
    runs = [
        ("seq_multiplier", dict(p=0.5, q=1.0, s=2.0)),
        ("mixed_multiplier", dict(p=0.5, q=1.0, s=2.0, t=2.0, beta=1.0, gamma=0.0)),
        ("hardy_multiplier", dict(p=0.5, q=1.0, s=1.0)),
        ("hardy_multiplier", dict(p=0.5, q=1.0, s=2.0)),
        ("duality_pairing", dict(p=0.5, q=2.0)),
    ]
    ok, details = True, []
    for cid, kw in runs:
        rep = run_check(cid, kw)
        controls = [f for f in rep.slope_fit.values() if f["role"] == "control"]
        good = rep.verdict == "pass" and controls and all(f["outcome"] == "fail" for f in controls)
        ok &= bool(good)
        details.append(f"{cid}{'(s=%g)' % kw['s'] if cid == 'hardy_multiplier' else ''} {rep.verdict}")
    dt = time.perf_counter() - t0
    ok &= dt < 300
    record_criterion(11, ok, ", ".join(details) + f", {dt:.1f}s")
    assert ok


def test_criterion_12_suite_determinism(tmp_path, capsys):
    t0 = time.perf_counter()
    codes = [main(["suite", "--seed", "0", "--out", str(tmp_path / name)]) for name in ("a", "b")]
    capsys.readouterr()
    a = (tmp_path / "a" / "summary.json").read_bytes()
    b = (tmp_path / "b" / "summary.json").read_bytes()
    dt = time.perf_counter() - t0
    ok = a == b
    verdicts = json.loads(a)
    record_criterion(12, ok, f"summary.json identical={a == b}, exit codes {codes}, "
                     f"{sum(v == 'pass' for v in verdicts.values())}/{len(verdicts)} pass, {dt:.1f}s")
    assert ok
