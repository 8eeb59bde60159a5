"""Flag groups shared by several commands."""
from typing import Annotated, Any, Optional

from pydantic import BaseModel, BeforeValidator, Field, model_validator

from domain.entities import CoordinateTower
from domain.errors import DomainError
from domain.value_objects import UrnConfig


def _split_ints(v: Any) -> Any:
    if isinstance(v, str):
        try:
            return tuple(int(part) for part in v.split(','))
        except ValueError:
            raise ValueError(f'{v!r} must be a comma separated list of integers')
    return v


TowerTriple = Annotated[tuple[int, int, int], BeforeValidator(_split_ints)]
UniformTower = Annotated[tuple[int, int, int, int], BeforeValidator(_split_ints)]


class UrnFlags(BaseModel):
    N: Optional[int] = Field(None, ge=1)
    M: Optional[int] = Field(None, ge=1)

    def urn_config(self) -> UrnConfig:
        if self.N is None or self.M is None:
            raise DomainError('the urn model needs --N and --M')
        return UrnConfig(N=self.N, M=self.M)


class TowerFlags(BaseModel):
    coords: list[TowerTriple] = Field(default_factory=list)
    uniform: Optional[UniformTower] = None

    @model_validator(mode='after')
    def one_tower_spelling(self):
        if self.coords and self.uniform is not None:
            raise ValueError('give either --coord triples or --uniform, not both')
        return self

    def tower_specs(self) -> list[CoordinateTower]:
        if self.uniform is not None:
            L, w, height, N = self.uniform  # noqa
            if N < 1:
                raise DomainError(f'--uniform needs N >= 1, got {N}')
            return [CoordinateTower(L=L, w=w, height=height)] * N
        if not self.coords:
            raise DomainError('the tower model needs --coord L,w,height or --uniform L,w,height,N')
        return [CoordinateTower(L=L, w=w, height=height) for L, w, height in self.coords]


__all__ = ['UrnFlags', 'TowerFlags', 'TowerTriple', 'UniformTower']
