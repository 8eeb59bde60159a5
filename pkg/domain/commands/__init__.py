from .base import CommandBase
from .compare import CompareOracleCommand
from .identity import TreeCensusCommand, VerifyIdentityCommand
from .pmf import EmitPmfCommand, TailCommand
from .simulate import SimulateCommand

__all__ = [
    'CommandBase',
    'VerifyIdentityCommand',
    'TreeCensusCommand',
    'EmitPmfCommand',
    'TailCommand',
    'SimulateCommand',
    'CompareOracleCommand',
]
