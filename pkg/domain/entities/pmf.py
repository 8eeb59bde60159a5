import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from domain.errors import DomainError

Probability = Fraction | float


@dataclass(frozen=True)
class Pmf:
    """A finite probability mass function.

    Exact PMFs carry Fractions and must add up to exactly one. Floating PMFs
    may be truncated; ``deficit`` is then ``1 - sum(probs)`` and must stay
    within ``tolerance`` unless the PMF is declared as truncated.
    """

    support: tuple[int, ...]
    probs: tuple[Probability, ...]
    exact: bool
    label: str
    deficit: Optional[float] = None
    tolerance: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, 'support', tuple(int(a) for a in self.support))
        object.__setattr__(self, 'probs', tuple(self.probs))
        if len(self.support) != len(self.probs):
            raise DomainError('support and probs must have the same length')
        if not self.support:
            raise DomainError(f'{self.label}: empty support')
        if list(self.support) != sorted(set(self.support)):
            raise DomainError(f'{self.label}: support must be strictly increasing')
        if any(prob < 0 for prob in self.probs):
            raise DomainError(f'{self.label}: negative probability')
        if self.exact:
            if not all(isinstance(prob, Fraction | int) for prob in self.probs):
                raise DomainError(f'{self.label}: exact PMF with inexact entries')
            assert sum(self.probs) == 1, f'{self.label}: exact PMF does not sum to 1'
        elif self.tolerance is not None:
            assert (
                abs(math.fsum(self.probs) - 1.0) <= self.tolerance
            ), f'{self.label}: normalization outside tolerance'

    def __iter__(self) -> Iterator[tuple[int, Probability]]:
        return zip(self.support, self.probs)

    def __len__(self):
        return len(self.support)

    def as_dict(self) -> dict[int, Probability]:
        return dict(zip(self.support, self.probs))

    def prob(self, a: int) -> Probability:
        return self.as_dict().get(a, Fraction(0) if self.exact else 0.0)

    def total(self) -> Probability:
        if self.exact:
            return sum(self.probs, Fraction(0))
        return math.fsum(self.probs)

    def to_float(self) -> 'Pmf':
        if not self.exact:
            return self
        return Pmf(
            support=self.support,
            probs=tuple(float(prob) for prob in self.probs),
            exact=False,
            label=self.label,
        )
