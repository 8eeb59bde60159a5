import math
from fractions import Fraction as F

import pytest

from avalanches.app.distributions import from_weights, pmf_mean, point_mass
from avalanches.app.stats import chi_square_gof, empirical_pmf, exact_mean_inside, mean_ci, tv_distance
from avalanches.app.urn import simulate_urns, urn_pmf_formula
from domain.entities import GofReport, Pmf, SimResult
from domain.errors import DegenerateInputError, DomainError
from domain.value_objects import UrnConfig


def sim(histogram, model='synthetic'):
    return SimResult(histogram=histogram, trials=sum(histogram.values()), seed=0, shards=1, model=model)


def test_empirical_examples():
    assert empirical_pmf(sim({0: 3, 1: 1})).probs == (0.75, 0.25)
    single = empirical_pmf(sim({2: 10}))
    assert single.probs == (0.0, 0.0, 1.0)
    padded = empirical_pmf(sim({0: 3, 1: 1}), upper=3)
    assert padded.support == (0, 1, 2, 3)


def test_empirical_normalization():
    pmf = empirical_pmf(sim({0: 7, 1: 3, 4: 11, 9: 13}))
    assert abs(math.fsum(pmf.probs) - 1.0) <= 1e-15


def test_tv_examples():
    p = from_weights(range(2), [1, 0], label='p')
    q = from_weights(range(2), [1, 1], label='q')
    assert tv_distance(p, p) == 0
    assert tv_distance(point_mass(0), point_mass(3)) == 1
    assert tv_distance(p, q) == pytest.approx(0.5)


def test_tv_is_a_metric_on_samples():
    a = from_weights(range(4), [1, 2, 3, 4], label='a')
    b = from_weights(range(3), [3, 1, 1], label='b')
    c = Pmf(support=(1, 2, 5), probs=(F(1, 3), F(1, 3), F(1, 3)), exact=True, label='c')
    for x, y in [(a, b), (b, c), (a, c)]:
        assert tv_distance(x, y) == pytest.approx(tv_distance(y, x))
    assert tv_distance(a, c) <= tv_distance(a, b) + tv_distance(b, c) + 1e-15


def test_chi_square_proportional_observations():
    expected = Pmf(support=(0, 1, 2), probs=(F(1, 2), F(1, 4), F(1, 4)), exact=True, label='e')
    report = chi_square_gof(sim({0: 200, 1: 100, 2: 100}), expected)
    assert report.chi_square == 0
    assert report.dof == report.merged_bins - 1 == 2
    assert report.approx_p_value == pytest.approx(1.0)
    assert report.tv_distance == pytest.approx(0.0)


def test_chi_square_merges_sparse_bins_from_the_right():
    expected = Pmf(
        support=(0, 1, 2, 3),
        probs=(F(90, 100), F(7, 100), F(2, 100), F(1, 100)),
        exact=True,
        label='e',
    )
    report = chi_square_gof(sim({0: 95, 1: 3, 2: 1, 3: 1}), expected)
    # expected counts 90, 7, 2, 1 -> bins {0} and {1, 2, 3}
    assert report.merged_bins == 2
    assert report.dof == 1
    assert report.chi_square == pytest.approx(25 / 90 + 25 / 10)


def test_chi_square_bin_order_does_not_matter():
    expected = urn_pmf_formula(UrnConfig(3, 8))
    forward = sim({0: 400, 1: 310, 2: 200, 3: 90})
    backward = sim(dict(reversed(list(forward.histogram.items()))))
    assert chi_square_gof(forward, expected) == chi_square_gof(backward, expected)


def test_chi_square_single_bin_is_degenerate():
    with pytest.raises(DegenerateInputError):
        chi_square_gof(sim({0: 3}), point_mass(0))
    with pytest.raises(DegenerateInputError):
        chi_square_gof(sim({0: 2, 1: 2}), from_weights(range(2), [1, 1], label='u'))


def test_chi_square_seeded_urn_run(runner):
    cfg = UrnConfig(2, 4)
    res = simulate_urns(cfg, trials=10**5, seed=20240531, runner=runner)
    report = chi_square_gof(res, urn_pmf_formula(cfg))
    assert report.approx_p_value > 0.001
    assert report.dof == 2


def test_gof_report_invariants():
    with pytest.raises(AssertionError):
        GofReport(tv_distance=1.5, chi_square=0.0, dof=1, approx_p_value=1.0, trials=1)
    with pytest.raises(AssertionError):
        GofReport(tv_distance=0.1, chi_square=0.0, dof=0, approx_p_value=1.0, trials=1)


def test_mean_ci_examples():
    assert mean_ci(sim({3: 50})) == (3.0, 0.0)
    mean, _ = mean_ci(sim({0: 500, 1: 500}))
    assert mean == 0.5


def test_mean_ci_scaling():
    _, small = mean_ci(sim({0: 250, 1: 250}))
    _, large = mean_ci(sim({0: 1000, 1: 1000}))
    # sample variance uses n - 1, so the ratio is only close to 2
    assert small / large == pytest.approx(2.0, rel=2e-3)


def test_mean_ci_needs_two_trials():
    with pytest.raises(DomainError):
        mean_ci(sim({1: 1}))


def test_exact_mean_inside(runner):
    res = simulate_urns(UrnConfig(5, 12), trials=20000, seed=3, runner=runner)
    assert exact_mean_inside(res, pmf_mean(urn_pmf_formula(UrnConfig(5, 12))), z=5.0)
