import math
from fractions import Fraction as F

import numpy as np
import pytest

from avalanches.app.distributions import (
    abelian_mean_closed_form,
    abelian_pmf,
    avalanche_pmf,
    avalanche_probability,
    conditional_pmf,
    expectation_identity_check,
    from_weights,
    limit_mean,
    limit_log_probabilities,
    limit_pmf,
    limit_tail_asymptote,
    local_maxima,
    loglog_slope,
    pmf_mean,
    pmf_variance,
    point_mass,
    powerlaw_slope,
    same_distribution,
    tail_log_ratio,
)
from domain.entities import Pmf
from domain.errors import DomainError
from domain.value_objects import DOMAIN_CONSTRAINT, AvalancheParams, LimitParams


def params(N, p):  # noqa
    return AvalancheParams(N=N, p=F(p))


def grid():
    # 60 (N, p) pairs, including the boundary strip 1/(N+1) < p < 1/N
    for N in (1, 2, 3, 5, 8, 13, 40, 200):  # noqa
        for p in (F(0), F(1, 2 * N), F(1, N + 1), F(2 * N + 1, 2 * N * (N + 1)), F(1, 3 * N)):
            yield params(N, p)
    for N in (4, 6, 7, 9):  # noqa
        for k in range(1, 6):
            yield params(N, F(k, 6 * N))


def test_grid_is_large_enough():
    assert sum(1 for _ in grid()) >= 50


def test_avalanche_examples():
    q = F(1, 3)
    assert avalanche_pmf(params(1, q)).probs == (1 - q, q)
    assert avalanche_pmf(params(2, F(1, 4))).probs == (F(9, 16), F(4, 16), F(3, 16))
    assert sum(avalanche_pmf(params(50, F(1, 100))).probs) == 1


def test_avalanche_probability_outside_support():
    assert avalanche_probability(params(2, F(1, 4)), 3) == 0


def test_p_outside_domain_names_constraint():
    with pytest.raises(DomainError, match='frac'):
        params(2, F(1, 2))
    with pytest.raises(DomainError):
        params(2, F(-1, 8))
    assert 'frac {1}{N}' in DOMAIN_CONSTRAINT


def test_abelian_examples():
    assert abelian_pmf(params(1, F(1, 3))).probs == (1,)
    pmf = abelian_pmf(params(2, F(1, 4)))
    assert pmf.support == (1, 2)
    assert pmf.probs == (F(2, 3), F(1, 3))
    assert pmf_mean(pmf) == F(4, 3) == abelian_mean_closed_form(params(2, F(1, 4)))


def test_conditional_examples():
    q = F(1, 5)
    assert conditional_pmf(params(2, q)).probs == (1 - q, q)
    assert conditional_pmf(params(3, q)).probs == (F(16, 25), F(6, 25), F(3, 25))
    assert conditional_pmf(params(1, q)).probs == (1,)


def test_exact_normalization_mean_and_expectation_on_grid():
    for prm in grid():
        for build in (avalanche_pmf, abelian_pmf, conditional_pmf):
            pmf = build(prm)
            assert pmf.total() == 1, (build.__name__, prm)
            assert all(prob >= 0 for prob in pmf.probs)
        assert pmf_mean(abelian_pmf(prm)) == abelian_mean_closed_form(prm), prm
        assert expectation_identity_check(prm), prm


def test_mean_examples():
    assert pmf_mean(point_mass(3)) == 3
    assert pmf_mean(avalanche_pmf(params(1, F(1, 7)))) == F(1, 7)
    assert abelian_mean_closed_form(params(1, F(1, 2))) == 1
    assert abelian_mean_closed_form(params(100, F(1, 200))) == F(200, 101)
    assert expectation_identity_check(params(1, 0))
    assert expectation_identity_check(params(30, F(1, 60)))


def test_variance():
    q = F(1, 3)
    assert pmf_variance(avalanche_pmf(params(1, q))) == q * (1 - q)
    assert pmf_variance(point_mass(4)) == 0


def test_limit_examples():
    pmf = limit_pmf(LimitParams(alpha=1.0, a_max=10))
    assert pmf.probs[0] == pytest.approx(math.exp(-1), abs=1e-7)
    assert pmf.probs[1] == pytest.approx(math.exp(-2), abs=1e-7)
    assert pmf.deficit > 0
    degenerate = limit_pmf(LimitParams(alpha=0.0, a_max=5))
    assert degenerate.probs == (1.0, 0.0, 0.0, 0.0, 0.0, 0.0)


def test_limit_subcritical_normalization():
    pmf = limit_pmf(LimitParams(alpha=0.5, a_max=200), tolerance=1e-12)
    assert abs(math.fsum(pmf.probs) - 1.0) <= 1e-12


def test_limit_truncation_over_tolerance():
    with pytest.raises(DomainError):
        limit_pmf(LimitParams(alpha=0.5, a_max=3), tolerance=1e-12)


def test_limit_params_range():
    with pytest.raises(DomainError):
        LimitParams(alpha=1.5, a_max=10)
    with pytest.raises(DomainError):
        LimitParams(alpha=0.5, a_max=-1)


def test_limit_mean():
    assert limit_mean(0.5) == pytest.approx(2.0)
    pmf = limit_pmf(LimitParams(alpha=0.5, a_max=400))
    assert pmf_mean(pmf) == pytest.approx(limit_mean(0.5), rel=1e-9)
    with pytest.raises(DomainError):
        limit_mean(1.0)


@pytest.mark.parametrize('alpha', [0.5, 0.9, 1.0])
def test_large_n_matches_limit(alpha):
    N = 10**4  # noqa
    # p = 1/N sits on the excluded boundary, the critical case uses 1/(N+1)
    p = F(alpha).limit_denominator(10) / N if alpha < 1 else F(1, N + 1)
    prm = AvalancheParams(N=N, p=p)
    limit = limit_pmf(LimitParams(alpha=alpha, a_max=10))
    for a in range(11):
        assert abs(float(avalanche_probability(prm, a)) - limit.probs[a]) <= 1e-3, a


def test_tail_ratio_uniform_pair():
    pmf = Pmf(support=(0, 1), probs=(F(1, 2), F(1, 2)), exact=True, label='uniform')
    assert tail_log_ratio(pmf, 0) == 0


def test_tail_ratio_needs_both_points():
    with pytest.raises(DomainError):
        tail_log_ratio(point_mass(0), 0)


def test_tail_law_approaches_three_halves():
    pmf = limit_pmf(LimitParams(alpha=1.0, a_max=600))
    scaled = [a * tail_log_ratio(pmf, a) for a in (10, 50, 100, 500)]
    assert scaled == sorted(scaled)
    assert all(value < 1.5 for value in scaled)
    for a, value in zip((10, 50, 100, 500), scaled):
        assert value == pytest.approx(a * limit_tail_asymptote(a), abs=1e-6)
    assert abs(scaled[2] - 1.5) <= 0.03
    assert abs(scaled[3] - 1.5) <= 0.01
    assert scaled[2] == pytest.approx(1.477, abs=1e-3)
    assert scaled[3] == pytest.approx(1.4953, abs=1e-3)


def test_powerlaw_slope_synthetic():
    support = range(1, 101)
    pmf = from_weights(support, (a**-2.0 for a in support), label='inverse-square')
    assert powerlaw_slope(pmf, 1, 100) == pytest.approx(-2.0, abs=1e-6)


def test_powerlaw_slope_critical_and_subcritical():
    critical = limit_pmf(LimitParams(alpha=1.0, a_max=600))
    assert abs(powerlaw_slope(critical, 50, 500) + 1.5) <= 0.05
    subcritical = limit_pmf(LimitParams(alpha=0.5, a_max=200))
    assert powerlaw_slope(subcritical, 10, 100) < -3


def test_powerlaw_slope_window_errors():
    pmf = limit_pmf(LimitParams(alpha=1.0, a_max=100))
    with pytest.raises(DomainError):
        powerlaw_slope(pmf, 50, 500)
    with pytest.raises(DomainError):
        powerlaw_slope(pmf, 10, 10)
    with pytest.raises(DomainError):
        powerlaw_slope(limit_pmf(LimitParams(alpha=0.0, a_max=10)), 1, 5)


def test_loglog_slope_matches_linear_fit():
    logs = limit_log_probabilities(1.0, 600)
    critical = limit_pmf(LimitParams(alpha=1.0, a_max=600))
    assert loglog_slope(logs, 50, 500) == pytest.approx(powerlaw_slope(critical, 50, 500), rel=1e-9)


def test_loglog_slope_survives_underflow():
    # P(500) is about e^-812 at alpha=0.08, below the float range
    logs = limit_log_probabilities(0.08, 600)
    assert limit_pmf(LimitParams(alpha=0.08, a_max=600)).probs[500] == 0.0
    assert np.isfinite(logs[500])
    assert loglog_slope(logs, 50, 500) < -1.5


def test_loglog_slope_window_errors():
    logs = limit_log_probabilities(1.0, 100)
    with pytest.raises(DomainError):
        loglog_slope(logs, 50, 500)
    with pytest.raises(DomainError):
        loglog_slope(logs, 0, 10)
    with pytest.raises(DomainError):
        loglog_slope(limit_log_probabilities(0.0, 10), 1, 5)


def test_local_maxima():
    decreasing = from_weights(range(4), [4, 3, 2, 1], label='decreasing')
    assert local_maxima(decreasing) == [0]
    assert local_maxima(from_weights(range(3), [0.2, 0.5, 0.3], label='peak')) == [1]


def test_local_maxima_near_critical():
    assert local_maxima(avalanche_pmf(params(100, F(99, 10000)))) == [0, 100]


def test_boundary_strip_probabilities_nonnegative():
    # 1 - (N+1)p < 0 here, it only appears with exponent zero
    pmf = avalanche_pmf(params(3, F(3, 10)))
    assert all(prob >= 0 for prob in pmf.probs)
    assert pmf.total() == 1


def test_same_distribution_ignores_labels_and_zeros():
    left = Pmf(support=(0, 1, 2), probs=(F(1, 2), F(1, 2), F(0)), exact=True, label='left')
    right = Pmf(support=(0, 1), probs=(F(1, 2), F(1, 2)), exact=True, label='right')
    assert same_distribution(left, right)
    assert not same_distribution(left, point_mass(0))


def test_limit_log_space_handles_large_support():
    pmf = limit_pmf(LimitParams(alpha=1.0, a_max=2000))
    assert np.isfinite(pmf.probs).all()
    assert pmf.probs[-1] > 0
