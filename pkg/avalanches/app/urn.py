"""Balls-in-urns statistic whose law is the avalanche distribution."""
import itertools
import logging
import math
from collections import Counter
from fractions import Fraction
from functools import partial

import numpy as np

from avalanches.app.sampling import ShardJob, chunked, shard_jobs
from avalanches.ports.runner import IShardRunner
from avalanches.adapters.runners import LocalShardRunner, merge_histograms
from domain.entities import Assignment, Pmf, SimResult
from domain.errors import DomainError, check_cap
from domain.value_objects import UrnConfig

logger = logging.getLogger(__name__)

DEFAULT_URN_ENUMERATION_CAP = 10**7
DEFAULT_CHUNK_SIZE = 100_000


def urn_statistic(assignment: Assignment, M: int) -> int:  # noqa
    """Largest r such that urns 1..k hold at least k balls for every k <= r."""
    occupancy = assignment.occupancy(M)
    cumulative = 0
    for k in range(1, M + 1):
        cumulative += occupancy[k]
        if cumulative < k:
            return k - 1
    return M


def urn_pmf_formula(cfg: UrnConfig) -> Pmf:
    """C(N,a) (a+1)^(a-1) M^(-a) (1-(a+1)/M)^(N-a), for M >= N + 1."""
    cfg.require_formula_domain()
    N, M = cfg.N, cfg.M  # noqa
    probs = tuple(
        math.comb(N, a)
        * Fraction(a + 1) ** (a - 1)
        * Fraction(1, M**a)
        * Fraction(M - a - 1, M) ** (N - a)
        for a in range(N + 1)
    )
    return Pmf(
        support=tuple(range(N + 1)),
        probs=probs,
        exact=True,
        label=f'urn-formula(N={N}, M={M})',
    )


def urn_pmf_bruteforce(cfg: UrnConfig, cap: int = DEFAULT_URN_ENUMERATION_CAP) -> Pmf:
    """Exact law of X from all M^N equally likely placements."""
    N, M = cfg.N, cfg.M  # noqa
    total = M**N
    check_cap(total, cap, f'urn enumeration (N={N}, M={M})')
    counts = Counter(
        urn_statistic(Assignment(urn_of), M)
        for urn_of in itertools.product(range(1, M + 1), repeat=N)
    )
    upper = min(N, M)
    return Pmf(
        support=tuple(range(upper + 1)),
        probs=tuple(Fraction(counts[a], total) for a in range(upper + 1)),
        exact=True,
        label=f'urn-bruteforce(N={N}, M={M})',
    )


def urn_statistics(urns: np.ndarray, M: int) -> np.ndarray:  # noqa
    """Vectorized statistic over a (trials, N) array of urn numbers.

    With the placements sorted, urns 1..k hold at least k balls exactly when
    the k-th smallest urn number is at most k; X is the first failing k - 1,
    capped at M.
    """
    trials, N = urns.shape  # noqa
    ordered = np.sort(urns, axis=1)
    fails = ordered > np.arange(1, N + 1)
    first = np.where(fails.any(axis=1), fails.argmax(axis=1), N)
    return np.minimum(first, M)


def run_urn_shard(cfg: UrnConfig, job: ShardJob) -> dict[int, int]:
    rng = job.generator()
    counts = np.zeros(cfg.N + 1, dtype=np.int64)
    for block in chunked(job.trials, job.chunk_size):
        urns = rng.integers(1, cfg.M + 1, size=(block, cfg.N))
        counts += np.bincount(urn_statistics(urns, cfg.M), minlength=cfg.N + 1)
    return {a: int(c) for a, c in enumerate(counts) if c}


def simulate_urns(
    cfg: UrnConfig,
    trials: int,
    seed: int,
    shards: int = 1,
    runner: IShardRunner | None = None,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> SimResult:
    if trials < 1 or shards < 1:
        raise DomainError(f'trials and shards must be positive, got {trials}, {shards}')
    runner = runner or LocalShardRunner()
    jobs = shard_jobs(trials, seed, shards, chunk_size)
    logger.debug('urn simulation N=%d M=%d over %d shards', cfg.N, cfg.M, shards)
    histograms = runner.map(partial(run_urn_shard, cfg), jobs)
    return SimResult(
        histogram=merge_histograms(histograms),
        trials=trials,
        seed=seed,
        shards=shards,
        model='urn',
        params={'N': cfg.N, 'M': cfg.M},
    )


__all__ = [
    'urn_statistic',
    'urn_statistics',
    'urn_pmf_formula',
    'urn_pmf_bruteforce',
    'run_urn_shard',
    'simulate_urns',
]
