"""Reproducible random streams for sharded simulations.

Shard ``i`` of a run seeded with ``seed`` draws from
``Generator(Philox(key=shard_seed(seed, i)))`` where ``shard_seed`` mixes
``seed + i * GOLDEN_GAMMA`` (mod 2^64) through the SplitMix64 finalizer.
Philox is counter based, so shard streams never overlap; bounded integers come
from ``Generator.integers`` (Lemire's rejection method, free of modulo bias).
"""
from dataclasses import dataclass
from typing import Iterator

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def splitmix64(z: int) -> int:
    z = (z + GOLDEN_GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def shard_seed(seed: int, shard: int) -> int:
    return splitmix64((seed + shard * GOLDEN_GAMMA) & MASK64)


def shard_generator(seed: int, shard: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=shard_seed(seed, shard)))


def split_trials(trials: int, shards: int) -> list[int]:
    """Near-equal shard sizes; the first ``trials % shards`` shards take one extra."""
    base, extra = divmod(trials, shards)
    return [base + (1 if i < extra else 0) for i in range(shards)]


def chunked(trials: int, chunk_size: int) -> Iterator[int]:
    while trials > 0:
        block = min(trials, chunk_size)
        yield block
        trials -= block


@dataclass(frozen=True)
class ShardJob:
    seed: int
    shard: int
    trials: int
    chunk_size: int

    def generator(self) -> np.random.Generator:
        return shard_generator(self.seed, self.shard)


def shard_jobs(trials: int, seed: int, shards: int, chunk_size: int) -> list[ShardJob]:
    return [
        ShardJob(seed=seed, shard=i, trials=size, chunk_size=chunk_size)
        for i, size in enumerate(split_trials(trials, shards))
    ]
