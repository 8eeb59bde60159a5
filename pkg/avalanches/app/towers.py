"""Product of discrete cyclic towers and its avalanche-size function.

Each coordinate is Z_L with the shift x -> x + w (mod L) and the uniform
measure. With base B = {0..w-1} the levels S^k(B), k = 0..height, are
disjoint intervals, so m(U) = w / L exactly and every state space can be
enumerated.
"""
import itertools
import logging
import math
from collections import Counter
from fractions import Fraction
from functools import partial
from typing import Iterable, Optional, Sequence

import numpy as np

from avalanches.adapters.runners import LocalShardRunner, merge_histograms
from avalanches.app.combinatorics import cascade_weight, compositions, multinomial
from avalanches.app.distributions import avalanche_pmf
from avalanches.app.sampling import ShardJob, chunked, shard_jobs
from avalanches.ports.runner import IShardRunner
from domain.entities import (
    AvalancheTrace,
    CoordinateTower,
    Pmf,
    SimResult,
    TowerState,
    TowerSystem,
)
from domain.errors import DomainError, check_cap
from domain.value_objects import AvalancheParams, PartitionMethod

logger = logging.getLogger(__name__)

DEFAULT_TOWER_ENUMERATION_CAP = 10**7
DEFAULT_GENERAL_PMF_MAX_COORDS = 10
DEFAULT_EXHAUSTIVE_PARTITION_MAX_COORDS = 6
DEFAULT_CHUNK_SIZE = 100_000


def make_tower_system(
    specs: Iterable[CoordinateTower | tuple[int, int, int]],
) -> TowerSystem:
    specs = list(specs)
    N = len(specs)  # noqa
    if N == 0:
        raise DomainError('a tower system needs at least one coordinate')
    coords = []
    for i, spec in enumerate(specs):
        try:
            coord = spec if isinstance(spec, CoordinateTower) else CoordinateTower(*spec)
        except DomainError as exc:
            raise DomainError(f'coordinate {i}: {exc}') from exc
        if coord.height + 1 <= N:
            raise DomainError(
                f'coordinate {i}: tower height {coord.height} needs height + 1 > N = {N}'
            )
        coords.append(coord)
    return TowerSystem(tuple(coords))


def uniform_tower_system(L: int, w: int, height: int, N: int) -> TowerSystem:  # noqa
    return make_tower_system([(L, w, height)] * N)


def first_passage_times(x: TowerState, system: TowerSystem) -> list[Optional[int]]:
    """For each coordinate the l in 0..N with S^l(x_i) in U_i, if any.

    Tower disjointness leaves at most one such l per coordinate.
    """
    x.validate(system)
    times: list[Optional[int]] = []
    for x_i, coord in zip(x.x, system.coords):
        hits = [l for l in range(system.N + 1) if coord.in_excited(coord.shift(x_i, l))]
        assert len(hits) <= 1, 'a coordinate passes its excited level at most once'
        times.append(hits[0] if hits else None)
    return times


def avalanche_trace(x: TowerState, system: TowerSystem) -> AvalancheTrace:
    """A(x,1) = #{x_i in U_i}; A(x,k+1) = #{i: S^l(x_i) in U_i for some l <= A(x,k)}."""
    times = first_passage_times(x, system)
    sequence = [sum(1 for t in times if t == 0)]
    while True:
        horizon = sequence[-1]
        following = sum(1 for t in times if t is not None and t <= horizon)
        sequence.append(following)
        if following == horizon:
            break
    assert len(sequence) - 1 <= system.N, 'the recursion settles within N steps'
    return AvalancheTrace(tuple(sequence))


def avalanche_size(x: TowerState, system: TowerSystem) -> int:
    return avalanche_trace(x, system).size


def passage_time_matrix(states: np.ndarray, system: TowerSystem) -> np.ndarray:
    """Vectorized first passage times; coordinates that never fire get N + 1.

    x lies on level x // w; it reaches the top level after height - x // w
    steps, provided x is inside the tower at all.
    """
    N = system.N  # noqa
    never = N + 1
    times = np.full(states.shape, never, dtype=np.int64)
    for i, coord in enumerate(system.coords):
        column = states[:, i]
        level = column // coord.w
        steps = coord.height - level
        inside = (column < (coord.height + 1) * coord.w) & (steps <= N)
        times[inside, i] = steps[inside]
    return times


def avalanche_sizes(times: np.ndarray) -> np.ndarray:
    sizes = (times == 0).sum(axis=1)
    while True:
        following = (times <= sizes[:, None]).sum(axis=1)
        if np.array_equal(following, sizes):
            return sizes
        sizes = following


def run_tower_shard(system: TowerSystem, job: ShardJob) -> dict[int, int]:
    rng = job.generator()
    bounds = np.array([coord.L for coord in system.coords])
    counts = np.zeros(system.N + 1, dtype=np.int64)
    for block in chunked(job.trials, job.chunk_size):
        states = rng.integers(0, bounds, size=(block, system.N))
        sizes = avalanche_sizes(passage_time_matrix(states, system))
        counts += np.bincount(sizes, minlength=system.N + 1)
    return {a: int(c) for a, c in enumerate(counts) if c}


def simulate_tower(
    system: TowerSystem,
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
    logger.debug('tower simulation N=%d over %d shards', system.N, shards)
    histograms = runner.map(partial(run_tower_shard, system), jobs)
    return SimResult(
        histogram=merge_histograms(histograms),
        trials=trials,
        seed=seed,
        shards=shards,
        model='tower',
        params={'N': system.N, 'coords': system.describe()},
    )


def tower_pmf_bruteforce(
    system: TowerSystem, cap: int = DEFAULT_TOWER_ENUMERATION_CAP
) -> Pmf:
    """Evaluate A on every state; probabilities have denominator prod L_i."""
    total = system.state_count
    check_cap(total, cap, f'tower enumeration over {total} states')
    counts = Counter(
        avalanche_size(TowerState(x), system)
        for x in itertools.product(*(range(coord.L) for coord in system.coords))
    )
    return Pmf(
        support=tuple(range(system.N + 1)),
        probs=tuple(Fraction(counts[a], total) for a in range(system.N + 1)),
        exact=True,
        label=f'tower-bruteforce(N={system.N})',
    )


def _check_probabilities(ps: Sequence[Fraction]) -> tuple[Fraction, ...]:
    ps = tuple(Fraction(p) for p in ps)
    N = len(ps)  # noqa
    if N == 0:
        raise DomainError('at least one coordinate probability is needed')
    for i, p in enumerate(ps):
        if p < 0 or N * p >= 1:
            raise DomainError(f'p_{i + 1}={p} is outside [0, 1/N) for N={N}')
    return ps


def partition_event_measure(
    ps: Sequence[Fraction], blocks: Sequence[Sequence[int]]
) -> Fraction:
    """Measure of the event indexed by an ordered partition (I_1, ..., I_r, I_{r+1}).

    Coordinates in I_1 start excited, those in I_l (l >= 2) fire at step l
    (k_{l-1} admissible levels each) and those in the last block never fire.
    """
    *firing, silent = blocks
    a = sum(len(block) for block in firing)
    measure = Fraction(1)
    previous = 1
    for block in firing:
        for i in block:
            measure *= previous * ps[i]
        previous = len(block)
    for i in silent:
        measure *= 1 - (a + 1) * ps[i]
    return measure


def ordered_partitions(
    labels: Sequence[int], sizes: Sequence[int]
) -> Iterable[tuple[tuple[int, ...], ...]]:
    """Every way to deal the labels into consecutive blocks of the given sizes."""
    if not sizes:
        yield ()
        return
    head, *rest = sizes
    for block in itertools.combinations(labels, head):
        remaining = [label for label in labels if label not in block]
        for tail in ordered_partitions(remaining, rest):
            yield (block, *tail)


def _grouped_probability(ps: tuple[Fraction, ...], a: int) -> Fraction:
    N = len(ps)  # noqa
    if a == 0:
        return math.prod((1 - p for p in ps), start=Fraction(1))
    # the event weight only depends on which coordinates fire and on the
    # block sizes, so each (firing set, composition) pair stands for
    # multinomial(a, c) ordered partitions
    layers = sum(multinomial(a, c) * cascade_weight(c) for c in compositions(a))
    total = Fraction(0)
    for firing in itertools.combinations(range(N), a):
        silent = set(range(N)) - set(firing)
        total += math.prod((ps[i] for i in firing), start=Fraction(1)) * math.prod(
            (1 - (a + 1) * ps[i] for i in silent), start=Fraction(1)
        )
    return layers * total


def _exhaustive_probability(ps: tuple[Fraction, ...], a: int) -> Fraction:
    N = len(ps)  # noqa
    labels = list(range(N))
    if a == 0:
        return partition_event_measure(ps, [labels])
    return sum(
        (
            partition_event_measure(ps, blocks)
            for c in compositions(a)
            for blocks in ordered_partitions(labels, (*c.parts, N - a))
        ),
        Fraction(0),
    )


def avalanche_pmf_general(
    ps: Sequence[Fraction],
    method: PartitionMethod = PartitionMethod.GROUPED,
    max_coords: int = DEFAULT_GENERAL_PMF_MAX_COORDS,
    exhaustive_max_coords: int = DEFAULT_EXHAUSTIVE_PARTITION_MAX_COORDS,
) -> Pmf:
    """Exact P(A = a) for heterogeneous p_1..p_N via the ordered-partition sum."""
    ps = _check_probabilities(ps)
    N = len(ps)  # noqa
    check_cap(N, max_coords, 'heterogeneous avalanche law (coordinates)')
    if method == PartitionMethod.EXHAUSTIVE:
        check_cap(N, exhaustive_max_coords, 'exhaustive partition sum (coordinates)')
        probability = _exhaustive_probability
    else:
        probability = _grouped_probability
    return Pmf(
        support=tuple(range(N + 1)),
        probs=tuple(probability(ps, a) for a in range(N + 1)),
        exact=True,
        label=f'avalanche-general(N={N}, method={PartitionMethod(method).value})',
    )


def tower_pmf_formula(
    system: TowerSystem, max_coords: int = DEFAULT_GENERAL_PMF_MAX_COORDS
) -> Pmf:
    """Closed form matching the system: the homogeneous law or the general sum."""
    if system.homogeneous:
        return avalanche_pmf(AvalancheParams(N=system.N, p=system.ps[0]))
    return avalanche_pmf_general(system.ps, max_coords=max_coords)


__all__ = [
    'make_tower_system',
    'uniform_tower_system',
    'first_passage_times',
    'avalanche_trace',
    'avalanche_size',
    'passage_time_matrix',
    'avalanche_sizes',
    'simulate_tower',
    'run_tower_shard',
    'tower_pmf_bruteforce',
    'partition_event_measure',
    'ordered_partitions',
    'avalanche_pmf_general',
    'tower_pmf_formula',
]
