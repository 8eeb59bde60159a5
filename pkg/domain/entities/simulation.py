from dataclasses import dataclass, field
from typing import Any

from domain.errors import DomainError


@dataclass(frozen=True)
class SimResult:
    histogram: dict[int, int]
    trials: int
    seed: int
    shards: int
    model: str
    params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        histogram = {int(a): int(c) for a, c in sorted(self.histogram.items()) if c}
        object.__setattr__(self, 'histogram', histogram)
        if any(c < 0 for c in histogram.values()):
            raise DomainError('histogram counts must be nonnegative')
        assert sum(histogram.values()) == self.trials, 'histogram must account for every trial'

    @property
    def max_observed(self) -> int:
        return max(self.histogram, default=0)


@dataclass(frozen=True)
class GofReport:
    tv_distance: float
    chi_square: float
    dof: int
    approx_p_value: float
    trials: int
    merged_bins: int = 0

    def __post_init__(self):
        assert 0.0 <= self.tv_distance <= 1.0 + 1e-12, 'total variation must lie in [0, 1]'
        assert self.chi_square >= 0.0, 'chi-square statistic must be nonnegative'
        assert self.dof >= 1, 'at least two merged bins are needed'
