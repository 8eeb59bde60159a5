import abc
from typing import Callable, Sequence, TypeVar

T = TypeVar('T')
R = TypeVar('R')


class IShardRunner(metaclass=abc.ABCMeta):
    """Runs one callable per shard job and returns the results in job order."""

    @abc.abstractmethod
    def map(self, fn: Callable[[T], R], jobs: Sequence[T]) -> list[R]:
        raise NotImplementedError
