from fractions import Fraction as F

from avalanches.app import serializers
from domain.entities import Composition, GofReport, Pmf, SimResult, TreeCensus


def test_exact_probabilities_stay_rational():
    pmf = Pmf(support=(0, 1), probs=(F(4, 16), F(3, 4)), exact=True, label='p')
    assert serializers.pmf_to_dict(pmf) == {
        'label': 'p',
        'exact': True,
        'support': [0, 1],
        'probs': ['1/4', '3/4'],
    }


def test_truncated_pmf_reports_deficit():
    pmf = Pmf(support=(0,), probs=(0.75,), exact=False, label='limit', deficit=0.25)
    data = serializers.pmf_to_dict(pmf)
    assert data['probs'] == [0.75]
    assert data['deficit'] == 0.25


def test_pmf_rows_use_significant_digits():
    pmf = Pmf(support=(0, 1), probs=(F(1, 3), F(2, 3)), exact=True, label='p')
    assert serializers.pmf_rows(pmf, digits=5) == [['0', '0.33333'], ['1', '0.66667']]


def test_sim_result_keys_are_ordered():
    res = SimResult(
        histogram={3: 2, 1: 1}, trials=3, seed=7, shards=2, model='urn', params={'N': 2, 'M': 4}
    )
    data = serializers.sim_result_to_dict(res)
    assert list(data) == ['model', 'N', 'M', 'trials', 'seed', 'shards', 'histogram']
    assert data['histogram'] == {'1': 1, '3': 2}
    assert serializers.histogram_rows(res) == [['1', '1'], ['3', '2']]


def test_gof_to_dict():
    report = GofReport(tv_distance=0.01, chi_square=3.5, dof=4, approx_p_value=0.47, trials=100)
    assert serializers.gof_to_dict(report) == {
        'tv': 0.01,
        'chi2': 3.5,
        'dof': 4,
        'p': 0.47,
        'trials': 100,
    }


def test_census_counts_are_strings():
    census = TreeCensus(
        n=2,
        total_rooted_trees=3,
        profile_counts={Composition((2,)): 1, Composition((1, 1)): 2},
    )
    data = serializers.census_to_dict(census)
    assert data['total'] == '3'
    assert data['profiles'][1] == {'parts': [1, 1], 'count': '2'}
    assert serializers.census_rows(census) == [['2', '1'], ['1 1', '2']]


def test_exact_to_json():
    assert serializers.exact_to_json(10**30) == '1' + '0' * 30
    assert serializers.exact_to_json(F(6, 4)) == '3/2'


def test_side_by_side_pads_missing_support():
    left = Pmf(support=(0, 1), probs=(F(1, 2), F(1, 2)), exact=True, label='l')
    right = Pmf(support=(1, 2), probs=(F(1, 2), F(1, 2)), exact=True, label='r')
    rows = serializers.pmfs_side_by_side(left, right, digits=3)
    assert rows == [['0', '0.5', '0'], ['1', '0.5', '0.5'], ['2', '0', '0.5']]
