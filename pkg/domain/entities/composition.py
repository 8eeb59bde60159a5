from dataclasses import dataclass

from domain.errors import DomainError


@dataclass(frozen=True)
class Composition:
    """Ordered tuple of positive parts (k_1, ..., k_r) summing to n."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, 'parts', parts)
        if not parts:
            raise DomainError('a composition has at least one part')
        if any(k < 1 for k in parts):
            raise DomainError(f'composition parts must be positive, got {parts}')

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def r(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __repr__(self):
        return f'Composition{self.parts}'

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        # ascending number of parts, then lexicographic
        return self.r, self.parts
