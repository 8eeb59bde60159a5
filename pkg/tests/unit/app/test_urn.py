from fractions import Fraction as F

import numpy as np
import pytest

from avalanches.app.distributions import avalanche_pmf
from avalanches.app.sampling import shard_generator
from avalanches.app.stats import empirical_pmf
from avalanches.app.urn import (
    simulate_urns,
    urn_pmf_bruteforce,
    urn_pmf_formula,
    urn_statistic,
    urn_statistics,
)
from domain.entities import Assignment
from domain.errors import DomainError, ResourceError
from domain.value_objects import AvalancheParams, UrnConfig


@pytest.mark.parametrize('placement, expected', [((2, 3), 0), ((1, 3), 1), ((1, 1), 2), ((1, 2), 2)])
def test_urn_statistic_examples(placement, expected):
    assert urn_statistic(Assignment(placement).validate(4), 4) == expected


def test_urn_statistic_capped_by_urns():
    assert urn_statistic(Assignment((1,)), 1) == 1
    assert urn_statistic(Assignment((1, 1, 1)), 2) == 2


def test_assignment_validation():
    with pytest.raises(DomainError):
        Assignment((0, 2)).validate(4)
    with pytest.raises(DomainError):
        Assignment((5,)).validate(4)


def test_vectorized_statistic_matches_scan():
    rng = shard_generator(seed=11, shard=0)
    for N, M in [(3, 5), (5, 3), (6, 6), (1, 1)]:  # noqa
        urns = rng.integers(1, M + 1, size=(500, N))
        expected = [urn_statistic(Assignment(tuple(row)), M) for row in urns.tolist()]
        assert urn_statistics(urns, M).tolist() == expected


def test_maximal_prefix_structure():
    cfg = UrnConfig(N=6, M=9)
    urns = shard_generator(3, 0).integers(1, cfg.M + 1, size=(300, cfg.N))
    for assignment in (Assignment(tuple(row)) for row in urns.tolist()):
        x = urn_statistic(assignment, cfg.M)
        occupancy = assignment.occupancy(cfg.M)
        if x < cfg.M:
            assert sum(occupancy[1 : x + 1]) == x
            assert occupancy[x + 1] == 0


def test_formula_examples():
    assert urn_pmf_formula(UrnConfig(2, 4)).probs == (F(9, 16), F(4, 16), F(3, 16))
    assert urn_pmf_formula(UrnConfig(1, 2)).probs == (F(1, 2), F(1, 2))
    for N, M in [(3, 4), (4, 9), (2, 7)]:  # noqa
        assert urn_pmf_formula(UrnConfig(N, M)).probs[0] == (1 - F(1, M)) ** N


def test_formula_needs_enough_urns():
    with pytest.raises(DomainError):
        urn_pmf_formula(UrnConfig(3, 3))


def test_bruteforce_examples():
    assert urn_pmf_bruteforce(UrnConfig(2, 4)).probs == (F(9, 16), F(4, 16), F(3, 16))
    single = urn_pmf_bruteforce(UrnConfig(1, 1))
    assert single.support == (0, 1)
    assert single.probs == (0, 1)


def test_bruteforce_matches_formula_and_avalanche_law():
    for N in range(1, 6):  # noqa
        for M in range(N + 1, 9):  # noqa
            cfg = UrnConfig(N, M)
            formula = urn_pmf_formula(cfg)
            assert urn_pmf_bruteforce(cfg).probs == formula.probs, (N, M)
            assert formula.probs == avalanche_pmf(AvalancheParams(N, F(1, M))).probs


def test_bruteforce_cap():
    with pytest.raises(ResourceError):
        urn_pmf_bruteforce(UrnConfig(5, 8), cap=1000)


def test_simulation_conserves_and_repeats(runner):
    cfg = UrnConfig(3, 7)
    first = simulate_urns(cfg, trials=1000, seed=7, shards=3, runner=runner, chunk_size=128)
    second = simulate_urns(cfg, trials=1000, seed=7, shards=3, runner=runner, chunk_size=128)
    assert sum(first.histogram.values()) == 1000
    assert first.histogram == second.histogram
    assert first.params == {'N': 3, 'M': 7}


def test_chunk_size_does_not_change_the_stream(runner):
    # bounded draws come from one continuous 32-bit stream per shard
    cfg = UrnConfig(4, 9)
    blocks = simulate_urns(cfg, trials=3001, seed=5, shards=2, runner=runner, chunk_size=97)
    whole = simulate_urns(cfg, trials=3001, seed=5, shards=2, runner=runner, chunk_size=10**5)
    assert blocks.histogram == whole.histogram


def test_shard_count_changes_the_draws(runner):
    cfg = UrnConfig(5, 11)
    one = simulate_urns(cfg, trials=5000, seed=1, shards=1, runner=runner)
    four = simulate_urns(cfg, trials=5000, seed=1, shards=4, runner=runner)
    assert one.histogram != four.histogram


def test_empirical_law_close_to_formula(runner):
    res = simulate_urns(UrnConfig(2, 4), trials=10**5, seed=2024, runner=runner)
    empirical = empirical_pmf(res)
    assert abs(empirical.probs[0] - 9 / 16) <= 0.01


def test_simulation_rejects_empty_runs():
    with pytest.raises(DomainError):
        simulate_urns(UrnConfig(2, 4), trials=0, seed=1)
