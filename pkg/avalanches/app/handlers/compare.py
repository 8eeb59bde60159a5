from avalanches.app import towers, urn
from avalanches.app.artifacts import CommandResult
from avalanches.app.distributions import same_distribution
from avalanches.app.serializers import pmf_to_dict, pmfs_side_by_side
from avalanches.di import FromDI
from corelib.config import Settings
from domain.commands import CompareOracleCommand
from domain.entities import Pmf
from domain.errors import DomainError
from domain.value_objects import CompareModel, PartitionMethod


def _oracle_and_formula(cmd: CompareOracleCommand, settings: Settings) -> tuple[Pmf, Pmf]:
    match cmd.model:
        case CompareModel.URN:
            cfg = cmd.urn_config()
            return (
                urn.urn_pmf_bruteforce(cfg, cap=settings.URN_ENUMERATION_CAP),
                urn.urn_pmf_formula(cfg),
            )
        case CompareModel.TOWER:
            system = towers.make_tower_system(cmd.tower_specs())
            return (
                towers.tower_pmf_bruteforce(system, cap=settings.TOWER_ENUMERATION_CAP),
                towers.tower_pmf_formula(system, max_coords=settings.GENERAL_PMF_MAX_COORDS),
            )
        case CompareModel.GENERAL:
            if not cmd.ps:
                raise DomainError('the general model needs --ps p_1 ... p_N')
            caps = {
                'max_coords': settings.GENERAL_PMF_MAX_COORDS,
                'exhaustive_max_coords': settings.EXHAUSTIVE_PARTITION_MAX_COORDS,
            }
            return (
                towers.avalanche_pmf_general(cmd.ps, PartitionMethod.EXHAUSTIVE, **caps),
                towers.avalanche_pmf_general(cmd.ps, cmd.method, **caps),
            )


def compare_oracle(cmd: CompareOracleCommand, settings: FromDI[Settings]) -> CommandResult:
    oracle, formula = _oracle_and_formula(cmd, settings)
    equal = same_distribution(oracle, formula)
    return CommandResult(
        command='compare',
        payload={
            'model': cmd.model.value,
            'oracle': pmf_to_dict(oracle),
            'formula': pmf_to_dict(formula),
            'equal': equal,
        },
        header=('a', 'oracle', 'formula'),
        rows=pmfs_side_by_side(oracle, formula, settings.CSV_SIGNIFICANT_DIGITS),
        passed=equal,
    )


__all__ = ['compare_oracle']
