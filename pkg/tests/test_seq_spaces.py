import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hllab import BlockedSeq, PowerWeight, block_of, blocked_norm, ces_norm, kellogg_target_params, lp_seq_norm, qstar

INF = math.inf
exps = st.one_of(st.just(INF), st.fractions(min_value=Fraction(1, 8), max_value=8))


def test_block_layout():
    assert [block_of(n) for n in range(9)] == [0, 1, 2, 2, 3, 3, 3, 3, 4]
    x = BlockedSeq(np.arange(10))
    assert [len(b) for b in x.blocks()] == [1, 1, 2, 4, 2]
    with pytest.raises(ValueError):
        block_of(-1)


def test_weight_at_zero_is_one():
    assert PowerWeight(-2.0)(np.array([0, 2]))[0] == 1.0


def test_blocked_norm_reduces_to_lp_when_p_equals_q(rng):
    x = rng.standard_normal(300)
    assert abs(blocked_norm(x, 1.5, 1.5, 0.3) - lp_seq_norm(x, 1.5, 0.3)) < 1e-10


def test_blocked_norm_small_example():
    x = np.array([1.0, 2.0, 3.0, 4.0])
    # blocks {1}, {2}, {3, 4}
    assert abs(blocked_norm(x, 2, 1) - (1 + 2 + 5)) < 1e-12
    assert blocked_norm(x, INF, INF) == 4.0


@given(exps, exps)
def test_qstar_involution(q, s):
    assert qstar(qstar(q, s), s) == max(q, s)


def test_qstar_cases():
    assert qstar(INF, 2) == 2
    assert qstar(1, 2) == INF
    assert qstar(Fraction(4), Fraction(2)) == Fraction(4)
    with pytest.raises(ValueError):
        qstar(0, 1)


@given(st.integers(0, 10_000), st.sampled_from([(0.5, 1.0, 2.0), (1.0, 2.0, 2.0), (2.0, INF, 1.0)]))
def test_holder_for_blocked_multipliers(seed, params):
    p, q, s = params
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 1025))
    lam, x = rng.standard_normal(n), rng.standard_normal(n)
    pr, qs, w = kellogg_target_params(p, q, 0.0, s, s, 1.0)
    lhs = blocked_norm(lam * x, s, s, 1.0)
    assert lhs <= blocked_norm(lam, pr, qs, w) * blocked_norm(x, p, q, 0.0) * (1 + 1e-12)


def test_ces_tail_closed_form():
    # a single entry x_1 = 1 gives (sum_{n>=1} n^{-s})^{1/s} = zeta(s)^{1/s}
    from scipy.special import zeta

    assert abs(ces_norm([0.0, 1.0], 2.0) - zeta(2.0) ** 0.5) < 1e-14
    trunc = ces_norm([0.0, 1.0], 2.0, L=10_000)
    assert trunc < ces_norm([0.0, 1.0], 2.0)
    with pytest.raises(ValueError):
        ces_norm([0.0, 1.0, 1.0], 2.0, L=1)
    with pytest.raises(ValueError):
        ces_norm([1.0], 1.0)


def test_ces_truncated_example():
    ref = math.fsum(n**-2.0 for n in range(1, 11)) ** 0.5
    assert abs(ces_norm([0.0, 1.0], 2.0, L=10) - ref) < 1e-15
    assert abs(ref - 1.2449) < 1e-3
