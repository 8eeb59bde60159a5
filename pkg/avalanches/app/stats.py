"""Compare simulation histograms with exact PMFs."""
import logging
import math
from fractions import Fraction
from typing import Optional

import numpy as np
from scipy.stats import chi2

from domain.entities import GofReport, Pmf, SimResult
from domain.errors import DegenerateInputError, DomainError

logger = logging.getLogger(__name__)

DEFAULT_MIN_EXPECTED = 5.0
EMPIRICAL_TOLERANCE = 1e-15


def empirical_pmf(res: SimResult, upper: Optional[int] = None) -> Pmf:
    """Histogram divided by trials on 0..max observed, or 0..upper if given."""
    if res.trials < 1:
        raise DomainError('an empirical PMF needs at least one trial')
    top = res.max_observed if upper is None else max(upper, res.max_observed)
    support = range(top + 1)
    return Pmf(
        support=tuple(support),
        probs=tuple(res.histogram.get(a, 0) / res.trials for a in support),
        exact=False,
        label=f'empirical({res.model}, trials={res.trials})',
        tolerance=EMPIRICAL_TOLERANCE * max(1, len(support)),
    )


def tv_distance(p: Pmf, q: Pmf) -> float:
    """Half the L1 distance; support points missing on one side count as 0."""
    left, right = p.as_dict(), q.as_dict()
    return 0.5 * math.fsum(
        abs(float(left.get(a, 0)) - float(right.get(a, 0)))
        for a in sorted(left.keys() | right.keys())
    )


def _merge_bins(
    observed: list[float], expected: list[float], min_expected: float
) -> tuple[list[float], list[float]]:
    # sweep from the right, closing a bin once it holds enough expected mass;
    # an underfilled remainder at the left end joins its right neighbour
    merged_obs: list[float] = []
    merged_exp: list[float] = []
    acc_obs = acc_exp = 0.0
    for obs, exp in zip(reversed(observed), reversed(expected)):
        acc_obs += obs
        acc_exp += exp
        if acc_exp >= min_expected:
            merged_obs.append(acc_obs)
            merged_exp.append(acc_exp)
            acc_obs = acc_exp = 0.0
    if acc_exp > 0 or acc_obs > 0:
        if merged_exp:
            merged_obs[-1] += acc_obs
            merged_exp[-1] += acc_exp
        else:
            merged_obs.append(acc_obs)
            merged_exp.append(acc_exp)
    merged_obs.reverse()
    merged_exp.reverse()
    return merged_obs, merged_exp


def chi_square_gof(
    res: SimResult, expected: Pmf, min_expected: float = DEFAULT_MIN_EXPECTED
) -> GofReport:
    """Pearson goodness of fit after merging sparse bins.

    The p-value is the chi-square survival function, i.e. the regularized
    upper incomplete gamma Q(dof/2, stat/2), as evaluated by scipy.
    """
    if res.trials < 1:
        raise DomainError('goodness of fit needs at least one trial')
    support = sorted(set(expected.support) | set(res.histogram))
    probs = expected.as_dict()
    observed = [float(res.histogram.get(a, 0)) for a in support]
    expected_counts = [float(probs.get(a, 0)) * res.trials for a in support]

    merged_obs, merged_exp = _merge_bins(observed, expected_counts, min_expected)
    if len(merged_exp) < 2:
        raise DegenerateInputError(
            f'all expected mass falls into one bin (min expected count {min_expected})'
        )
    if any(exp <= 0 for exp in merged_exp):
        raise DegenerateInputError('observed outcomes outside the expected support')
    obs_arr, exp_arr = np.asarray(merged_obs), np.asarray(merged_exp)
    statistic = float(np.sum((obs_arr - exp_arr) ** 2 / exp_arr))
    dof = len(merged_exp) - 1
    logger.debug('chi-square over %d merged bins (from %d)', len(merged_exp), len(support))
    return GofReport(
        tv_distance=tv_distance(empirical_pmf(res), expected),
        chi_square=statistic,
        dof=dof,
        approx_p_value=float(chi2.sf(statistic, dof)),
        trials=res.trials,
        merged_bins=len(merged_exp),
    )


def mean_ci(res: SimResult, z: float = 1.96) -> tuple[float, float]:
    """Sample mean and the normal half-width z * s / sqrt(trials)."""
    if res.trials < 2:
        raise DomainError(f'a confidence interval needs at least 2 trials, got {res.trials}')
    values = np.fromiter(res.histogram.keys(), dtype=float)
    counts = np.fromiter(res.histogram.values(), dtype=float)
    mean = float(np.dot(values, counts) / res.trials)
    variance = float(np.dot(counts, (values - mean) ** 2) / (res.trials - 1))
    return mean, z * math.sqrt(variance) / math.sqrt(res.trials)


def exact_mean_inside(res: SimResult, exact_mean: Fraction | float, z: float = 1.96) -> bool:
    mean, halfwidth = mean_ci(res, z)
    return abs(mean - float(exact_mean)) <= halfwidth


__all__ = [
    'empirical_pmf',
    'tv_distance',
    'chi_square_gof',
    'mean_ci',
    'exact_mean_inside',
]
