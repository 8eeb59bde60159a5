"""Large Monte Carlo runs against the closed forms. Deselect with -m 'not slow'."""
import pytest

from avalanches.adapters.runners import ProcessShardRunner
from avalanches.app.stats import chi_square_gof, empirical_pmf, tv_distance
from avalanches.app.towers import simulate_tower, tower_pmf_formula, uniform_tower_system
from avalanches.app.urn import simulate_urns, urn_pmf_formula
from domain.value_objects import UrnConfig

pytestmark = pytest.mark.slow

MILLION = 10**6


@pytest.fixture(scope='module')
def pool():
    return ProcessShardRunner()


def test_urn_million_trials(pool):
    cfg = UrnConfig(N=20, M=100)
    res = simulate_urns(cfg, trials=MILLION, seed=20240501, shards=8, runner=pool)
    report = chi_square_gof(res, urn_pmf_formula(cfg))
    assert report.tv_distance <= 0.01
    assert report.approx_p_value > 0.001


def test_tower_million_trials(pool):
    system = uniform_tower_system(L=64, w=1, height=8, N=8)
    res = simulate_tower(system, trials=MILLION, seed=20240502, shards=8, runner=pool)
    report = chi_square_gof(res, tower_pmf_formula(system))
    assert report.tv_distance <= 0.01
    assert report.approx_p_value > 0.001


def test_total_variation_shrinks_with_trials(pool):
    cfg = UrnConfig(N=20, M=100)
    formula = urn_pmf_formula(cfg)
    tv = {
        trials: tv_distance(
            empirical_pmf(simulate_urns(cfg, trials=trials, seed=7, shards=4, runner=pool)),
            formula,
        )
        for trials in (10**3, 10**5, MILLION)
    }
    assert tv[10**3] >= tv[10**5] >= tv[MILLION]
    assert tv[MILLION] <= 0.005
