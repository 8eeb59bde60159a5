from typing import Literal

from pydantic import Field

from corelib.rational import Rational
from domain.value_objects import CompareModel, PartitionMethod

from .base import CommandBase
from .shared import TowerFlags, UrnFlags


class CompareOracleCommand(CommandBase, UrnFlags, TowerFlags):
    type: Literal['compare-command'] = 'compare-command'
    model: CompareModel
    ps: list[Rational] = Field(default_factory=list)
    method: PartitionMethod = PartitionMethod.GROUPED
