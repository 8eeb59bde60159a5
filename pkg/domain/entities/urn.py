from dataclasses import dataclass

from domain.errors import DomainError


@dataclass(frozen=True)
class Assignment:
    """urn_of[j] is the urn (1..M) receiving ball j."""

    urn_of: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'urn_of', tuple(int(u) for u in self.urn_of))

    def validate(self, M: int) -> 'Assignment':  # noqa
        for j, urn in enumerate(self.urn_of):
            if not 1 <= urn <= M:
                raise DomainError(f'ball {j} placed in urn {urn}, expected 1..{M}')
        return self

    def occupancy(self, M: int) -> list[int]:  # noqa
        counts = [0] * (M + 1)
        for urn in self.urn_of:
            counts[urn] += 1
        return counts
