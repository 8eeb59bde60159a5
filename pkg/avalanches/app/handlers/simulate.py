import logging
from typing import Any

from avalanches.app import stats, towers, urn
from avalanches.app.artifacts import CommandResult
from avalanches.app.distributions import pmf_mean, same_distribution
from avalanches.app.serializers import gof_to_dict, histogram_rows, pmf_to_dict, sim_result_to_dict
from avalanches.di import FromDI
from avalanches.ports.runner import IShardRunner
from corelib.config import Settings
from domain.commands import SimulateCommand
from domain.entities import Pmf, SimResult
from domain.value_objects import SimModel

logger = logging.getLogger(__name__)


def _run_urns(
    cmd: SimulateCommand, settings: Settings, runner: IShardRunner
) -> tuple[SimResult, Any]:
    cfg = cmd.urn_config()
    res = urn.simulate_urns(
        cfg,
        trials=cmd.trials,
        seed=cmd.seed,
        shards=cmd.shards,
        runner=runner,
        chunk_size=settings.SIMULATION_CHUNK_SIZE,
    )
    return res, cfg


def _run_towers(
    cmd: SimulateCommand, settings: Settings, runner: IShardRunner
) -> tuple[SimResult, Any]:
    system = towers.make_tower_system(cmd.tower_specs())
    res = towers.simulate_tower(
        system,
        trials=cmd.trials,
        seed=cmd.seed,
        shards=cmd.shards,
        runner=runner,
        chunk_size=settings.SIMULATION_CHUNK_SIZE,
    )
    return res, system


def _formula(cmd: SimulateCommand, model: Any, settings: Settings) -> Pmf:
    if cmd.model == SimModel.URN:
        return urn.urn_pmf_formula(model)
    return towers.tower_pmf_formula(model, max_coords=settings.GENERAL_PMF_MAX_COORDS)


def _oracle(cmd: SimulateCommand, model: Any, settings: Settings) -> Pmf:
    if cmd.model == SimModel.URN:
        return urn.urn_pmf_bruteforce(model, cap=settings.URN_ENUMERATION_CAP)
    return towers.tower_pmf_bruteforce(model, cap=settings.TOWER_ENUMERATION_CAP)


def simulate(
    cmd: SimulateCommand,
    settings: FromDI[Settings],
    runner: FromDI[IShardRunner],
) -> CommandResult:
    run = _run_urns if cmd.model == SimModel.URN else _run_towers
    res, model = run(cmd, settings, runner)
    payload = sim_result_to_dict(res)
    passed = True

    if cmd.exact_oracle or cmd.compare:
        formula = _formula(cmd, model, settings)
        if cmd.exact_oracle:
            oracle = _oracle(cmd, model, settings)
            equal = same_distribution(oracle, formula)
            payload['exact_oracle'] = {
                'oracle': pmf_to_dict(oracle),
                'formula': pmf_to_dict(formula),
                'equal': equal,
            }
            passed = equal
        if cmd.compare:
            report = stats.chi_square_gof(res, formula, settings.MIN_EXPECTED_COUNT)
            logger.info(
                '%s run: tv=%.3e chi2=%.3f dof=%d p=%.3g',
                res.model,
                report.tv_distance,
                report.chi_square,
                report.dof,
                report.approx_p_value,
            )
            payload['gof'] = gof_to_dict(report)
            if res.trials >= 2:
                mean, halfwidth = stats.mean_ci(res)
                exact = pmf_mean(formula)
                payload['mean_ci'] = {
                    'mean': mean,
                    'halfwidth': halfwidth,
                    'exact': float(exact),
                    'inside': stats.exact_mean_inside(res, exact),
                }

    return CommandResult(
        command='simulate',
        payload=payload,
        header=('a', 'count'),
        rows=histogram_rows(res),
        passed=passed,
    )


__all__ = ['simulate']
