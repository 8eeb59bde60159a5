"""Plain-data renderings of the domain objects.

JSON documents keep a fixed key order. Exact probabilities travel as
"num/den" strings, big integers as decimal strings, so nothing is rounded on
the JSON side; CSV rows carry decimal strings at a chosen precision.
"""
from fractions import Fraction
from typing import Any, Sequence

from corelib.rational import format_rational, to_decimal_string
from domain.entities import GofReport, Pmf, Probability, SimResult, TreeCensus

DEFAULT_SIGNIFICANT_DIGITS = 17


def probability_to_json(prob: Probability) -> str | float:
    if isinstance(prob, Fraction | int):
        return format_rational(prob)
    return float(prob)


def pmf_to_dict(pmf: Pmf) -> dict[str, Any]:
    data: dict[str, Any] = {
        'label': pmf.label,
        'exact': pmf.exact,
        'support': list(pmf.support),
        'probs': [probability_to_json(prob) for prob in pmf.probs],
    }
    if pmf.deficit is not None:
        data['deficit'] = float(pmf.deficit)
    return data


def pmf_rows(pmf: Pmf, digits: int = DEFAULT_SIGNIFICANT_DIGITS) -> list[list[str]]:
    return [[str(a), to_decimal_string(prob, digits)] for a, prob in pmf]


def sim_result_to_dict(res: SimResult) -> dict[str, Any]:
    return {
        'model': res.model,
        **res.params,
        'trials': res.trials,
        'seed': res.seed,
        'shards': res.shards,
        'histogram': {str(a): count for a, count in res.histogram.items()},
    }


def histogram_rows(res: SimResult) -> list[list[str]]:
    return [[str(a), str(count)] for a, count in res.histogram.items()]


def gof_to_dict(report: GofReport) -> dict[str, Any]:
    return {
        'tv': report.tv_distance,
        'chi2': report.chi_square,
        'dof': report.dof,
        'p': report.approx_p_value,
        'trials': report.trials,
    }


def census_to_dict(census: TreeCensus) -> dict[str, Any]:
    return {
        'n': census.n,
        'total': str(census.total_rooted_trees),
        'profiles': [
            {'parts': list(c.parts), 'count': str(count)}
            for c, count in census.profile_counts.items()
        ],
    }


def census_rows(census: TreeCensus) -> list[list[str]]:
    return [
        [' '.join(map(str, c.parts)), str(count)]
        for c, count in census.profile_counts.items()
    ]


def exact_to_json(value: Fraction | int) -> str:
    """Integers as decimal strings, other rationals as "num/den"."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return format_rational(value)


def pmfs_side_by_side(
    left: Pmf, right: Pmf, digits: int = DEFAULT_SIGNIFICANT_DIGITS
) -> list[list[str]]:
    support: Sequence[int] = sorted(set(left.support) | set(right.support))
    return [
        [str(a), to_decimal_string(left.prob(a), digits), to_decimal_string(right.prob(a), digits)]
        for a in support
    ]


__all__ = [
    'probability_to_json',
    'pmf_to_dict',
    'pmf_rows',
    'sim_result_to_dict',
    'histogram_rows',
    'gof_to_dict',
    'census_to_dict',
    'census_rows',
    'exact_to_json',
    'pmfs_side_by_side',
]
