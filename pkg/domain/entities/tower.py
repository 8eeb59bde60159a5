from dataclasses import dataclass
from fractions import Fraction

from domain.errors import DomainError


@dataclass(frozen=True)
class CoordinateTower:
    """Cyclic shift x -> x + w (mod L) with base B = {0..w-1}.

    Level k is S^k(B) = {k*w, ..., k*w + w - 1}; the excited set is the top
    level U = S^height(B).
    """

    L: int
    w: int
    height: int

    def __post_init__(self):
        if self.L < 1 or self.w < 1 or self.height < 0:
            raise DomainError(f'invalid tower (L={self.L}, w={self.w}, height={self.height})')
        if (self.height + 1) * self.w > self.L:
            raise DomainError(
                f'tower levels overlap: (height+1)*w = {(self.height + 1) * self.w} > L = {self.L}'
            )

    @property
    def p(self) -> Fraction:
        return Fraction(self.w, self.L)

    def shift(self, x: int, steps: int = 1) -> int:
        return (x + steps * self.w) % self.L

    def in_excited(self, x: int) -> bool:
        low = self.height * self.w
        return low <= x < low + self.w


@dataclass(frozen=True)
class TowerSystem:
    coords: tuple[CoordinateTower, ...]

    def __post_init__(self):
        coords = tuple(self.coords)
        object.__setattr__(self, 'coords', coords)
        if not coords:
            raise DomainError('a tower system needs at least one coordinate')

    @property
    def N(self) -> int:  # noqa
        return len(self.coords)

    @property
    def ps(self) -> tuple[Fraction, ...]:
        return tuple(coord.p for coord in self.coords)

    @property
    def state_count(self) -> int:
        count = 1
        for coord in self.coords:
            count *= coord.L
        return count

    @property
    def homogeneous(self) -> bool:
        return len(set(self.coords)) == 1

    def describe(self) -> list[dict[str, int]]:
        return [{'L': c.L, 'w': c.w, 'height': c.height} for c in self.coords]


@dataclass(frozen=True)
class TowerState:
    x: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'x', tuple(int(v) for v in self.x))

    def validate(self, system: TowerSystem) -> 'TowerState':
        if len(self.x) != system.N:
            raise DomainError(f'state has {len(self.x)} coordinates, system has {system.N}')
        for i, (x_i, coord) in enumerate(zip(self.x, system.coords)):
            if not 0 <= x_i < coord.L:
                raise DomainError(f'coordinate {i} out of range: {x_i} not in 0..{coord.L - 1}')
        return self


@dataclass(frozen=True)
class AvalancheTrace:
    """The nondecreasing sequence A(x,1), A(x,2), ... up to its first repeat."""

    sequence: tuple[int, ...]

    @property
    def size(self) -> int:
        return self.sequence[-1]

    @property
    def steps(self) -> int:
        # minimal k with A(x,k) == A(x,k+1)
        return len(self.sequence) - 1
