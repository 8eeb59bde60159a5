from dataclasses import dataclass
from fractions import Fraction

from corelib.rational import parse_rational
from domain.errors import DomainError

DOMAIN_CONSTRAINT = r'p\in [0,\frac {1}{N})'


@dataclass(frozen=True)
class AvalancheParams:
    """N coordinates with per-coordinate excitation probability p."""

    N: int
    p: Fraction

    def __post_init__(self):
        object.__setattr__(self, 'p', parse_rational(self.p))
        if self.N < 1:
            raise DomainError(f'N must be a positive integer, got {self.N}')
        if self.p < 0 or self.N * self.p >= 1:
            raise DomainError(
                f'p={self.p} is outside the domain {DOMAIN_CONSTRAINT} for N={self.N}'
            )

    @property
    def alpha(self) -> Fraction:
        return self.N * self.p


@dataclass(frozen=True)
class LimitParams:
    alpha: float
    a_max: int

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise DomainError(f'alpha must lie in [0, 1], got {self.alpha}')
        if self.a_max < 0:
            raise DomainError(f'aMax must be nonnegative, got {self.a_max}')


@dataclass(frozen=True)
class UrnConfig:
    """N distinguishable balls dropped uniformly into M numbered urns."""

    N: int
    M: int

    def __post_init__(self):
        if self.N < 1 or self.M < 1:
            raise DomainError(f'urn model needs N >= 1 and M >= 1, got N={self.N}, M={self.M}')

    def require_formula_domain(self):
        if self.M < self.N + 1:
            raise DomainError(
                f'the closed form needs M >= N + 1, got N={self.N}, M={self.M}'
            )
        return self
