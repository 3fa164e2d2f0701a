import math

import numpy as np
import pytest

from hllab import (
    W_GRID,
    CoefficientSeries,
    Resolution,
    ResolutionError,
    SpaceSpec,
    TestFamily,
    analytic_transform,
    apply_multiplier,
    cauchy_kernel,
    dilate,
    dilated_cauchy,
    duality_pairing,
    generator_from_tag,
    monomial,
    opnorm_estimate,
    parse_space,
    space_norm,
)

INF = math.inf


def test_parse_space_defaults_and_labels():
    s = parse_space("berg:2:inf:1")
    assert s.named == {"p": 2.0, "q": INF, "alpha": 1.0, "beta": 0.0}
    assert s.label() == "berg:2:inf:1:0"
    for bad in ("nope:1", "hl:1", "hl:inf:1", "ces:1", "lip:1.5:2", "berg:1:x:1"):
        with pytest.raises(ValueError):
            parse_space(bad)


def test_resolution_rules():
    f = cauchy_kernel(100)
    assert Resolution().samples_for(f) == 512
    with pytest.raises(ResolutionError):
        Resolution(M=64).samples_for(f)
    with pytest.raises(ValueError):
        Resolution(M=48)


@pytest.mark.parametrize(
    "space,value",
    [("hl:0.5:0.5", 1.0), ("hardy:3", 1.0), ("lp:2", 1.0), ("blocked:2:1", 1.0), ("hl:2:1", 2.0)],
)
def test_norms_of_unimodular_monomial(space, value):
    assert abs(space_norm(monomial(3), parse_space(space)) - value) < 1e-12


def test_zero_function_has_zero_norm():
    zero = CoefficientSeries(np.zeros(5))
    for space in ("hl:0.5:1", "berg:1:1:1", "bmoa", "lip:0.5:inf", "blocked:1:1"):
        assert space_norm(zero, parse_space(space)) == 0.0


def test_lipschitz_norm_of_monomial():
    # ||z^n||_Lip(alpha, inf) ~ n^alpha
    vals = [space_norm(monomial(n), parse_space("lip:0.5:inf")) for n in (16, 64)]
    assert 1.7 < vals[1] / vals[0] < 2.3


def test_bmoa_norm_adds_constant_term():
    f = CoefficientSeries([2.0, 0.0])
    assert space_norm(f, parse_space("bmoa")) == 2.0


def test_family_seeding_is_per_tag():
    a = TestFamily(("random", "monomial"), (16, 32), seed=5).members_at(16)
    b = TestFamily(("monomial", "random"), (16,), seed=5).members_at(16)
    ra = next(m for m in a if m.tag == "random").series
    rb = next(m for m in b if m.tag == "random").series
    assert ra == rb
    assert TestFamily(("random",), (16,), seed=6).members_at(16)[0].series != ra


def test_generator_tags():
    rng = np.random.default_rng(0)
    assert generator_from_tag("cauchy:2")(8, rng).degree == 8
    assert generator_from_tag("binomial:0.5")(8, rng).degree == 8
    assert generator_from_tag("constant")(8, rng).coeffs[0] == 1
    with pytest.raises(ValueError):
        generator_from_tag("bogus")
    with pytest.raises(ValueError):
        TestFamily(("cauchy",), (8,))


def test_dilated_cauchy_scale():
    f = dilated_cauchy(2.0, 64)
    assert f.degree == 64 * 10
    assert abs(f(0.5) - (1 - 0.5 * (1 - 4 / 64)) ** -2) < 1e-12


def test_opnorm_identity_multiplier_is_one():
    fam = TestFamily(("random", "monomial", "lacunary"), (32, 64))
    est = opnorm_estimate(lambda N: cauchy_kernel(N), parse_space("hardy:2"), parse_space("hardy:2"), fam)
    assert abs(est.sup_ratio - 1.0) < 1e-12
    assert set(est.per_degree_sup()) == {32, 64}


def test_opnorm_uses_member_length_for_dilated_members():
    fam = TestFamily(("dilated:2",), (16,))
    est = opnorm_estimate(cauchy_kernel, parse_space("hardy:2"), parse_space("hardy:2"), fam)
    assert abs(est.sup_ratio - 1.0) < 1e-12


def test_pairing_and_dilation_identity():
    rng = np.random.default_rng(3)
    f = CoefficientSeries(rng.standard_normal(20))
    g = CoefficientSeries(rng.standard_normal(25))
    r = 0.7
    assert abs(duality_pairing(g, dilate(f, r)) - apply_multiplier(f, g)(r)) < 1e-12


def test_analytic_transform():
    assert W_GRID.size == 48 and not W_GRID.flags.writeable
    lam = cauchy_kernel(200)
    assert np.allclose(analytic_transform(lam, [0.5]), [2.0])
    with pytest.raises(ValueError):
        analytic_transform(lam, [1.0])


def test_lipschitz_of_u1_is_finite_and_positive():
    v = space_norm(monomial(1), parse_space("lip:0.5:inf"))
    assert 0 < v < 2


def test_analytic_transform_converges_geometrically():
    from hllab import cauchy_power

    w = W_GRID
    for N in (64, 256):
        err = np.max(np.abs(analytic_transform(cauchy_power(2.0, N), w) - (1 - w) ** -2.0))
        assert err < 0.9**N * 100 * N
