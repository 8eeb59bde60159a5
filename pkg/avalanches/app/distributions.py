"""Closed-form avalanche-size distributions and their analysis tools."""
import logging
import math
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np
from scipy.special import gammaln
from toolz import sliding_window

from domain.entities import Pmf, Probability
from domain.errors import DomainError
from domain.value_objects import AvalancheParams, LimitParams

logger = logging.getLogger(__name__)

DEFAULT_NORMALIZATION_TOL = 1e-12
DEFAULT_FIT_WINDOW = (50, 500)


def _power(base: Fraction | int, exponent: int) -> Fraction:
    # 0^0 == 1 and x^0 == 1 for any x, including negative x
    if exponent == 0:
        return Fraction(1)
    return Fraction(base) ** exponent


def avalanche_probability(params: AvalancheParams, a: int) -> Fraction:
    """P(A = a) = (a+1)^(a-1) C(N,a) p^a (1-(a+1)p)^(N-a)."""
    N, p = params.N, params.p  # noqa
    if not 0 <= a <= N:
        return Fraction(0)
    return (
        _power(a + 1, a - 1)
        * math.comb(N, a)
        * _power(p, a)
        * _power(1 - (a + 1) * p, N - a)
    )


def avalanche_pmf(params: AvalancheParams) -> Pmf:
    return Pmf(
        support=tuple(range(params.N + 1)),
        probs=tuple(avalanche_probability(params, a) for a in range(params.N + 1)),
        exact=True,
        label=f'avalanche(N={params.N}, p={params.p})',
    )


def _abelian_prefactor(params: AvalancheParams) -> Fraction:
    N, p = params.N, params.p  # noqa
    return (1 - N * p) / (1 - (N - 1) * p)


def abelian_pmf(params: AvalancheParams) -> Pmf:
    """p_k = (1-Np)/(1-(N-1)p) k^(k-2) C(N-1,k-1) p^(k-1) (1-kp)^(N-k-1)."""
    N, p = params.N, params.p  # noqa
    prefactor = _abelian_prefactor(params)
    probs = tuple(
        prefactor
        * _power(k, k - 2)
        * math.comb(N - 1, k - 1)
        * _power(p, k - 1)
        * _power(1 - k * p, N - k - 1)
        for k in range(1, N + 1)
    )
    return Pmf(
        support=tuple(range(1, N + 1)),
        probs=probs,
        exact=True,
        label=f'abelian(N={N}, p={p})',
    )


def conditional_pmf(params: AvalancheParams) -> Pmf:
    """Avalanche size given that one particular coordinate fires.

    P(A=a) = a^(a-2) C(N-1,a-1) p^(a-1) (1-ap)^(N-a); differs from the
    Abelian law only in the power of the last factor.
    """
    N, p = params.N, params.p  # noqa
    probs = tuple(
        _power(a, a - 2)
        * math.comb(N - 1, a - 1)
        * _power(p, a - 1)
        * _power(1 - a * p, N - a)
        for a in range(1, N + 1)
    )
    return Pmf(
        support=tuple(range(1, N + 1)),
        probs=probs,
        exact=True,
        label=f'conditional(N={N}, p={p})',
    )


def pmf_mean(pmf: Pmf) -> Probability:
    if pmf.exact:
        return sum((a * prob for a, prob in pmf), Fraction(0))
    return math.fsum(a * prob for a, prob in pmf)


def pmf_variance(pmf: Pmf) -> Probability:
    mean = pmf_mean(pmf)
    if pmf.exact:
        return sum((a * a * prob for a, prob in pmf), Fraction(0)) - mean * mean
    return math.fsum(a * a * prob for a, prob in pmf) - mean * mean


def abelian_mean_closed_form(params: AvalancheParams) -> Fraction:
    return 1 / (1 - (params.N - 1) * params.p)


def expectation_identity_check(params: AvalancheParams) -> bool:
    """(1-Np)/(1-(N-1)p) sum_k k^(k-1) C(N-1,k-1) p^(k-1) (1-kp)^(N-k-1) == 1/(1-(N-1)p)."""
    N, p = params.N, params.p  # noqa
    series = sum(
        (
            _power(k, k - 1)
            * math.comb(N - 1, k - 1)
            * _power(p, k - 1)
            * _power(1 - k * p, N - k - 1)
            for k in range(1, N + 1)
        ),
        Fraction(0),
    )
    return _abelian_prefactor(params) * series == abelian_mean_closed_form(params)


def limit_log_probabilities(alpha: float, a_max: int) -> np.ndarray:
    """log P(a) = -alpha(a+1) + a log alpha + (a-1) log(a+1) - log a!."""
    a = np.arange(a_max + 1, dtype=float)
    if alpha == 0.0:
        logs = np.full(a_max + 1, -np.inf)
        logs[0] = 0.0
        return logs
    return -alpha * (a + 1) + a * math.log(alpha) + (a - 1) * np.log1p(a) - gammaln(a + 1)


def limit_pmf(
    params: LimitParams, tolerance: float | None = None
) -> Pmf:
    """Borel-type law e^(-alpha(a+1)) alpha^a (a+1)^(a-1) / a!, truncated at aMax.

    The truncation deficit 1 - sum is carried on the Pmf. When ``tolerance``
    is given the deficit must not exceed it.
    """
    probs = np.exp(limit_log_probabilities(params.alpha, params.a_max))
    deficit = 1.0 - math.fsum(probs)
    logger.debug(
        'limit law alpha=%s truncated at %d, deficit %.3e',
        params.alpha,
        params.a_max,
        deficit,
    )
    if tolerance is not None and abs(deficit) > tolerance:
        raise DomainError(
            f'truncation at aMax={params.a_max} leaves a deficit of {deficit:.3e} > {tolerance:.1e}'
        )
    return Pmf(
        support=tuple(range(params.a_max + 1)),
        probs=tuple(float(v) for v in probs),
        exact=False,
        label=f'limit(alpha={params.alpha}, aMax={params.a_max})',
        deficit=deficit,
    )


def limit_mean(alpha: float) -> float:
    if not 0.0 <= alpha < 1.0:
        raise DomainError(f'the limit law has a finite mean only for alpha in [0, 1), got {alpha}')
    return 1.0 / (1.0 - alpha)


def _log(prob: Probability) -> float:
    if isinstance(prob, Fraction):
        return math.log(prob.numerator) - math.log(prob.denominator)
    return math.log(prob)


def tail_log_ratio(pmf: Pmf, a: int) -> float:
    """log(P(a) / P(a+1))."""
    masses = pmf.as_dict()
    if a not in masses or a + 1 not in masses:
        raise DomainError(f'{a} and {a + 1} must both lie in the support of {pmf.label}')
    if masses[a] <= 0 or masses[a + 1] <= 0:
        raise DomainError(f'{pmf.label}: zero probability at {a} or {a + 1}')
    return _log(masses[a]) - _log(masses[a + 1])


def limit_tail_asymptote(a: int) -> float:
    """Critical-limit value of log(P(a)/P(a+1)): 1 + a log((a+1)/(a+2)) ~ 3/(2a)."""
    return 1.0 + a * (math.log1p(a) - math.log1p(a + 1))


def loglog_slope(log_masses: np.ndarray, a_min: int, a_max: int) -> float:
    """Least-squares slope of log P(a) against log a, with log P indexed by a."""
    if not 1 <= a_min < a_max:
        raise DomainError(f'fit window must satisfy 1 <= aMin < aMax, got [{a_min}, {a_max}]')
    if a_max >= len(log_masses):
        raise DomainError(
            f'fit window [{a_min}, {a_max}] leaves the support 0..{len(log_masses) - 1}'
        )
    y = np.asarray(log_masses[a_min : a_max + 1], dtype=float)
    if not np.all(np.isfinite(y)):
        raise DomainError('zero probability inside the fit window')
    x = np.log(np.arange(a_min, a_max + 1, dtype=float))
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)


def powerlaw_slope(
    pmf: Pmf, a_min: int = DEFAULT_FIT_WINDOW[0], a_max: int = DEFAULT_FIT_WINDOW[1]
) -> float:
    """Least-squares slope of log P(a) against log a over a_min..a_max."""
    if not 1 <= a_min < a_max:
        raise DomainError(f'fit window must satisfy 1 <= aMin < aMax, got [{a_min}, {a_max}]')
    masses = pmf.as_dict()
    window = range(a_min, a_max + 1)
    missing = [a for a in window if a not in masses]
    if missing:
        raise DomainError(f'fit window [{a_min}, {a_max}] leaves the support of {pmf.label}')
    if any(masses[a] <= 0 for a in window):
        raise DomainError(f'{pmf.label}: nonpositive probability inside the fit window')
    logs = np.full(a_max + 1, np.nan)
    logs[a_min:] = [_log(masses[a]) for a in window]
    return loglog_slope(logs, a_min, a_max)


def local_maxima(pmf: Pmf) -> list[int]:
    """Support points whose mass strictly exceeds every existing neighbour."""
    padded = (None, *pmf.probs, None)
    return [
        a
        for a, (left, mid, right) in zip(pmf.support, sliding_window(3, padded))
        if (left is None or mid > left) and (right is None or mid > right)
    ]


def same_distribution(p: Pmf, q: Pmf) -> bool:
    """Equal masses on every outcome; labels and zero entries are ignored."""
    return {a: v for a, v in p if v} == {a: v for a, v in q if v}


def point_mass(a: int, label: str | None = None) -> Pmf:
    return Pmf(support=(a,), probs=(Fraction(1),), exact=True, label=label or f'delta({a})')


def from_weights(
    support: Sequence[int], weights: Iterable[float], label: str
) -> Pmf:
    """Floating PMF proportional to the given weights."""
    weights = np.asarray(list(weights), dtype=float)
    probs = weights / weights.sum()
    return Pmf(
        support=tuple(support),
        probs=tuple(float(v) for v in probs),
        exact=False,
        label=label,
        tolerance=DEFAULT_NORMALIZATION_TOL,
    )


__all__ = [
    'avalanche_probability',
    'avalanche_pmf',
    'abelian_pmf',
    'conditional_pmf',
    'pmf_mean',
    'pmf_variance',
    'abelian_mean_closed_form',
    'expectation_identity_check',
    'limit_log_probabilities',
    'limit_pmf',
    'limit_mean',
    'limit_tail_asymptote',
    'tail_log_ratio',
    'powerlaw_slope',
    'loglog_slope',
    'local_maxima',
    'same_distribution',
    'point_mass',
    'from_weights',
]
