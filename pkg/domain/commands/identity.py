from typing import Literal, Optional

from pydantic import Field, model_validator

from .base import CommandBase


class VerifyIdentityCommand(CommandBase):
    type: Literal['identity-command'] = 'identity-command'
    n: Optional[int] = Field(None, ge=1)
    n_max: Optional[int] = Field(None, ge=1)
    s: Optional[int] = Field(None, ge=1)
    forest: bool = False
    binomial: Optional[int] = Field(None, ge=1)

    @model_validator(mode='after')
    def one_range(self):
        if (self.n is None) == (self.n_max is None):
            raise ValueError('exactly one of --n and --n-max is required')
        if self.s is not None and self.n is not None and self.s > self.n:
            raise ValueError(f'--s must not exceed --n, got s={self.s}, n={self.n}')
        return self

    def values_of_n(self) -> range:
        if self.n is not None:
            return range(self.n, self.n + 1)
        return range(1, self.n_max + 1)


class TreeCensusCommand(CommandBase):
    type: Literal['trees-command'] = 'trees-command'
    n: int = Field(..., ge=1)
