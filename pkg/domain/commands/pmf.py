from typing import Literal, Optional

from pydantic import Field, model_validator

from corelib.rational import Rational
from domain.value_objects import AvalancheParams, LimitParams, PmfModel

from .base import CommandBase


class EmitPmfCommand(CommandBase):
    type: Literal['pmf-command'] = 'pmf-command'
    model: PmfModel
    N: Optional[int] = Field(None, ge=1)
    p: Optional[Rational] = None
    alpha: Optional[float] = Field(None, ge=0.0, le=1.0)
    a_max: Optional[int] = Field(None, ge=0)

    @model_validator(mode='after')
    def flags_match_model(self):
        if self.model == PmfModel.LIMIT:
            if self.alpha is None or self.a_max is None:
                raise ValueError('--model limit needs --alpha and --amax')
        elif self.N is None or self.p is None:
            raise ValueError(f'--model {self.model.value} needs --N and --p')
        return self

    def to_domain(self) -> AvalancheParams | LimitParams:
        if self.model == PmfModel.LIMIT:
            return LimitParams(alpha=self.alpha, a_max=self.a_max)
        return AvalancheParams(N=self.N, p=self.p)


class TailCommand(CommandBase):
    type: Literal['tail-command'] = 'tail-command'
    alpha: float = Field(..., ge=0.0, le=1.0)
    a_max: int = Field(600, ge=1)
    fit_window: Optional[tuple[int, int]] = None

    def to_domain(self) -> LimitParams:
        return LimitParams(alpha=self.alpha, a_max=self.a_max)
