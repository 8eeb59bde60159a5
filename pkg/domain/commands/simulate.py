from typing import Literal

from pydantic import Field

from domain.value_objects import SimModel

from .base import CommandBase
from .shared import TowerFlags, UrnFlags

SEED_MAX = 2**64 - 1


class SimulateCommand(CommandBase, UrnFlags, TowerFlags):
    type: Literal['simulate-command'] = 'simulate-command'
    model: SimModel
    trials: int = Field(..., ge=1)
    seed: int = Field(0, ge=0, le=SEED_MAX)
    shards: int = Field(1, ge=1)
    exact_oracle: bool = False
    compare: bool = False
