from domain.commands import (
    CompareOracleCommand,
    EmitPmfCommand,
    SimulateCommand,
    TailCommand,
    TreeCensusCommand,
    VerifyIdentityCommand,
)

from .compare import compare_oracle
from .identity import tree_census, verify_identity
from .pmf import emit_pmf, tail_table
from .simulate import simulate

COMMAND_HANDLERS = {
    VerifyIdentityCommand: verify_identity,
    TreeCensusCommand: tree_census,
    EmitPmfCommand: emit_pmf,
    TailCommand: tail_table,
    SimulateCommand: simulate,
    CompareOracleCommand: compare_oracle,
}

__all__ = ['COMMAND_HANDLERS']
