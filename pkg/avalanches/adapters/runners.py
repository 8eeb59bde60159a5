import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Optional, Sequence

from toolz import merge_with

from avalanches.ports.runner import IShardRunner, R, T

logger = logging.getLogger(__name__)


class LocalShardRunner(IShardRunner):
    def map(self, fn: Callable[[T], R], jobs: Sequence[T]) -> list[R]:
        return [fn(job) for job in jobs]


class ProcessShardRunner(IShardRunner):
    def __init__(self, max_workers: Optional[int] = None):
        self.max_workers = max_workers

    def map(self, fn: Callable[[T], R], jobs: Sequence[T]) -> list[R]:
        if len(jobs) <= 1:
            return [fn(job) for job in jobs]
        logger.debug('fanning %d shards out to a process pool', len(jobs))
        with ProcessPoolExecutor(max_workers=self.max_workers) as pool:
            # executor.map keeps submission order
            return list(pool.map(fn, jobs))


def merge_histograms(histograms: Iterable[dict[int, int]]) -> dict[int, int]:
    return dict(sorted(merge_with(sum, *histograms).items()))


__all__ = ['LocalShardRunner', 'ProcessShardRunner', 'merge_histograms']
