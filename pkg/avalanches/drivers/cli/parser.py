"""argparse surface: one subcommand per command model."""
import argparse
from typing import Any, Sequence

from domain.commands import (
    CommandBase,
    CompareOracleCommand,
    EmitPmfCommand,
    SimulateCommand,
    TailCommand,
    TreeCensusCommand,
    VerifyIdentityCommand,
)
from domain.value_objects import (
    CompareModel,
    OutputFormat,
    PartitionMethod,
    PmfModel,
    SimModel,
)

PROG = 'avalanches'


def _int_pair(value: str) -> tuple[int, int]:
    try:
        low, high = (int(part) for part in value.split(','))
    except ValueError:
        raise argparse.ArgumentTypeError(f'{value!r} must read "aMin,aMax"')
    return low, high


def _choices(enum) -> list[str]:
    return [member.value for member in enum]


def _output_flags() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_argument_group('output')
    group.add_argument('--format', choices=_choices(OutputFormat), default=OutputFormat.JSON.value)
    group.add_argument('--output', default='-', help="file path, '-' for stdout")
    group.add_argument(
        '--output-dir',
        default=None,
        help='directory for relative --output paths (overrides AVALANCHE_OUTPUT_DIR)',
    )
    group.add_argument('--verbose', action='store_true', help='debug logging on stderr')
    return parent


def _urn_flags(parser: argparse.ArgumentParser):
    parser.add_argument('--N', type=int, dest='N', help='balls')
    parser.add_argument('--M', type=int, dest='M', help='urns')


def _tower_flags(parser: argparse.ArgumentParser):
    parser.add_argument(
        '--coord',
        action='append',
        dest='coords',
        default=[],
        metavar='L,w,height',
        help='one tower coordinate; repeat for each of the N coordinates',
    )
    parser.add_argument('--uniform', metavar='L,w,height,N', help='N identical coordinates')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG, description='Exact and simulated avalanche-size distributions.'
    )
    commands = parser.add_subparsers(dest='command', required=True)
    output = _output_flags()

    identity = commands.add_parser(
        'identity', parents=[output], help='verify the composition identity'
    )
    identity.add_argument('--n', type=int)
    identity.add_argument('--n-max', type=int, help='sweep n = 1..n-max')
    identity.add_argument('--s', type=int, help='add the induction split after s layers')
    identity.add_argument('--forest', action='store_true', help='check the rooted forest form')
    identity.add_argument('--binomial', type=int, metavar='K', help='add the binomial step for k=K')

    trees = commands.add_parser('trees', parents=[output], help='census of rooted labeled trees')
    trees.add_argument('--n', type=int, required=True)

    pmf = commands.add_parser('pmf', parents=[output], help='emit a closed-form PMF')
    pmf.add_argument('--model', choices=_choices(PmfModel), required=True)
    pmf.add_argument('--N', type=int, dest='N')
    pmf.add_argument('--p', help='rational "num/den"')
    pmf.add_argument('--alpha', type=float)
    pmf.add_argument('--amax', type=int, dest='a_max')

    simulate = commands.add_parser('simulate', parents=[output], help='Monte Carlo run')
    simulate.add_argument('--model', choices=_choices(SimModel), required=True)
    _urn_flags(simulate)
    _tower_flags(simulate)
    simulate.add_argument('--trials', type=int, required=True)
    simulate.add_argument('--seed', type=int, default=0)
    simulate.add_argument('--shards', type=int, default=1)
    simulate.add_argument(
        '--exact-oracle', action='store_true', help='also enumerate the exact law'
    )
    simulate.add_argument(
        '--compare', action='store_true', help='goodness of fit against the closed form'
    )

    tail = commands.add_parser('tail', parents=[output], help='tail table of the limit law')
    tail.add_argument('--alpha', type=float, required=True)
    tail.add_argument('--amax', type=int, dest='a_max', default=600)
    tail.add_argument('--fit-window', type=_int_pair, metavar='aMin,aMax')

    compare = commands.add_parser(
        'compare', parents=[output], help='exact oracle against the closed form'
    )
    compare.add_argument('--model', choices=_choices(CompareModel), required=True)
    _urn_flags(compare)
    _tower_flags(compare)
    compare.add_argument('--ps', nargs='+', default=[], metavar='num/den')
    compare.add_argument(
        '--method', choices=_choices(PartitionMethod), default=PartitionMethod.GROUPED.value
    )
    return parser


_COMMAND_FIELDS: dict[str, tuple[type[CommandBase], Sequence[str]]] = {
    'identity': (VerifyIdentityCommand, ('n', 'n_max', 's', 'forest', 'binomial')),
    'trees': (TreeCensusCommand, ('n',)),
    'pmf': (EmitPmfCommand, ('model', 'N', 'p', 'alpha', 'a_max')),
    'simulate': (
        SimulateCommand,
        (
            'model',
            'N',
            'M',
            'coords',
            'uniform',
            'trials',
            'seed',
            'shards',
            'exact_oracle',
            'compare',
        ),
    ),
    'tail': (TailCommand, ('alpha', 'a_max', 'fit_window')),
    'compare': (CompareOracleCommand, ('model', 'N', 'M', 'coords', 'uniform', 'ps', 'method')),
}


def build_command(args: argparse.Namespace) -> CommandBase:
    """Validate parsed flags into a frozen command; raises pydantic ValidationError."""
    command_cls, fields = _COMMAND_FIELDS[args.command]
    values: dict[str, Any] = {
        name: getattr(args, name) for name in fields if getattr(args, name) is not None
    }
    return command_cls.model_validate(values)


__all__ = ['build_parser', 'build_command', 'PROG']
