from .composition import Composition
from .pmf import Pmf, Probability
from .simulation import GofReport, SimResult
from .tower import AvalancheTrace, CoordinateTower, TowerState, TowerSystem
from .tree import LabeledTree, TreeCensus
from .urn import Assignment

__all__ = [
    'Composition',
    'Pmf',
    'Probability',
    'SimResult',
    'GofReport',
    'CoordinateTower',
    'TowerSystem',
    'TowerState',
    'AvalancheTrace',
    'LabeledTree',
    'TreeCensus',
    'Assignment',
]
