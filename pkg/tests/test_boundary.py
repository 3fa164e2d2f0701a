import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hllab import (
    CircleSamples,
    RearrangementProfile,
    bmoa_seminorm,
    cauchy_power,
    distribution,
    dyadic_arcs,
    evaluate_circle,
    hardy_lorentz_norm,
    lorentz_quasinorm,
    lp_mean,
    modulus_of_continuity,
    modulus_profile,
    monomial,
    rearrangement,
)

from conftest import random_series

INF = math.inf


def _profile(values):
    return RearrangementProfile(np.sort(np.abs(values))[::-1])


@pytest.mark.parametrize("p,q", [(2.0, 1.0), (0.5, 0.5), (3.0, 1.0), (1.0, 4.0)])
def test_constant_has_closed_form_lorentz_norm(p, q):
    assert abs(lorentz_quasinorm(_profile(np.ones(256)), p, q) - (p / q) ** (1 / q)) < 1e-12


def test_weak_norm_of_constant_is_one():
    assert lorentz_quasinorm(_profile(np.ones(64)), 0.5, INF) == 1.0


def test_lorentz_p_equals_q_is_lp_mean(rng):
    v = rng.standard_normal(512)
    s = CircleSamples(1.0, v)
    assert abs(lorentz_quasinorm(rearrangement(s), 1.5, 1.5) - lp_mean(s, 1.5)) < 1e-12


def test_lorentz_rejects_trivial_infinite_p():
    with pytest.raises(ValueError):
        lorentz_quasinorm(_profile(np.ones(4)), INF, 1.0)
    assert lorentz_quasinorm(_profile(np.array([3.0, 1.0])), INF, INF) == 3.0


def test_profile_must_be_nonincreasing():
    with pytest.raises(ValueError):
        RearrangementProfile(np.array([1.0, 2.0]))


def test_rearrangement_is_equimeasurable(rng):
    s = CircleSamples(1.0, rng.standard_normal(128))
    prof = rearrangement(s)
    for level in (0.1, 0.5, 1.0):
        assert distribution(s, level) == np.count_nonzero(prof.sorted_abs > level) / 128


@given(st.integers(0, 10_000), st.sampled_from([0.5, 1.0, 2.0]), st.sampled_from([0.5, 1.0, 4.0]))
def test_weak_type_inequality(seed, p, q):
    a = np.random.default_rng(seed).pareto(1.5, 1024)
    prof = _profile(a)
    assert lorentz_quasinorm(prof, p, INF) <= (q / p) ** (1 / q) * lorentz_quasinorm(prof, p, q) * (1 + 1e-12)


def test_monomial_hardy_lorentz_norm():
    assert abs(hardy_lorentz_norm(monomial(5), 0.5, 0.5, 64) - 1.0) < 1e-12


def test_lp_mean_is_rotation_invariant(rng):
    f = random_series(rng, 20)
    s = evaluate_circle(f, 1.0, 64)
    assert abs(lp_mean(s, 0.7) - lp_mean(s.rotate(5), 0.7)) < 1e-12


def test_modulus_of_monomial():
    # |z^n(e^{ih n} - 1)| = 2|sin(nh/2)|, sup-norm modulus at t = 2 pi / M
    M, n = 256, 3
    s = evaluate_circle(monomial(n), 1.0, M)
    t = 2 * np.pi / M
    assert abs(modulus_of_continuity(s, 1, t, INF) - 2 * math.sin(n * t / 2)) < 1e-12
    prof = modulus_profile(s, 2, 2.0)
    assert np.all(np.diff(prof) >= 0)


def test_modulus_rejects_small_p_and_tiny_t():
    s = evaluate_circle(monomial(1), 1.0, 16)
    with pytest.raises(ValueError):
        modulus_profile(s, 1, 0.5)
    with pytest.raises(ValueError):
        modulus_of_continuity(s, 1, 1e-6, 2.0)


def test_dyadic_arcs_cover_all_offsets():
    arcs = dyadic_arcs(16)
    assert arcs[0] == (0, 16)
    assert sum(1 for _, L in arcs if L == 2) == 16


def test_bmoa_default_matches_explicit_arcs(rng):
    f = random_series(rng, 15)
    s = evaluate_circle(f, 1.0, 64)
    assert abs(bmoa_seminorm(s) - bmoa_seminorm(s, dyadic_arcs(64))) < 1e-12
    assert abs(bmoa_seminorm(s) - bmoa_seminorm(s.rotate(7))) < 1e-12


def test_bmoa_of_constant_vanishes():
    assert bmoa_seminorm(CircleSamples(1.0, np.full(32, 2.0 + 1j))) < 1e-15


def test_cauchy_weak_norm_is_bounded_under_dilation():
    from hllab import dilate

    vals = [hardy_lorentz_norm(dilate(cauchy_power(2.0, 40 * N), 1 - 1 / N), 0.5, INF, 1 << 15) for N in (64, 256)]
    assert abs(vals[1] / vals[0] - 1) < 0.05


def test_parseval_for_one_plus_z():
    from hllab import CoefficientSeries

    assert abs(hardy_lorentz_norm(CoefficientSeries([1.0, 1.0]), 2.0, 2.0, 64) - math.sqrt(2)) < 1e-12


def test_constant_lorentz_example():
    assert lorentz_quasinorm(_profile(np.ones(8)), 2.0, 1.0) == pytest.approx(2.0, abs=1e-15)


@pytest.mark.parametrize("k", [1, 3, 10])
def test_moduli_of_u1(k):
    M = 128
    s = evaluate_circle(monomial(1), 1.0, M)
    t = 2 * np.pi * k / M
    assert abs(modulus_of_continuity(s, 1, t, INF) - 2 * math.sin(t / 2)) < 1e-12
    assert abs(modulus_of_continuity(s, 2, t, INF) - 4 * math.sin(t / 2) ** 2) < 1e-12


def test_bmo_full_circle_of_u1():
    s = evaluate_circle(monomial(1), 1.0, 64)
    assert abs(bmoa_seminorm(s, [(0, 64)]) - 1.0) < 1e-12
