import logging

from avalanches.app import distributions
from avalanches.app.artifacts import CommandResult
from avalanches.app.serializers import pmf_rows, pmf_to_dict
from avalanches.di import FromDI
from corelib.config import Settings
from domain.commands import EmitPmfCommand, TailCommand
from domain.errors import DomainError
from domain.value_objects import PmfModel

logger = logging.getLogger(__name__)

PMF_BUILDERS = {
    PmfModel.AVALANCHE: distributions.avalanche_pmf,
    PmfModel.ABELIAN: distributions.abelian_pmf,
    PmfModel.CONDITIONAL: distributions.conditional_pmf,
    PmfModel.LIMIT: distributions.limit_pmf,
}


def emit_pmf(cmd: EmitPmfCommand, settings: FromDI[Settings]) -> CommandResult:
    pmf = PMF_BUILDERS[cmd.model](cmd.to_domain())
    logger.debug('built %s with %d support points', pmf.label, len(pmf))
    return CommandResult(
        command='pmf',
        payload=pmf_to_dict(pmf),
        header=('a', 'prob'),
        rows=pmf_rows(pmf, settings.CSV_SIGNIFICANT_DIGITS),
    )


def tail_table(cmd: TailCommand) -> CommandResult:
    params = cmd.to_domain()
    if params.alpha == 0.0:
        raise DomainError('alpha=0 gives a point mass at a=0, which has no tail')
    # ratios and the fit stay on the log masses, the far tail underflows in linear space
    logs = distributions.limit_log_probabilities(params.alpha, params.a_max)
    table = [
        (a, float(logs[a] - logs[a + 1]), float(a * (logs[a] - logs[a + 1])))
        for a in range(params.a_max)
    ]

    window = cmd.fit_window
    if window is None and params.a_max >= distributions.DEFAULT_FIT_WINDOW[1]:
        window = distributions.DEFAULT_FIT_WINDOW
    slope = None
    if window is not None:
        slope = distributions.loglog_slope(logs, *window)

    payload = {
        'alpha': params.alpha,
        'a_max': params.a_max,
        'rows': [{'a': a, 'log_ratio': ratio, 'scaled': scaled} for a, ratio, scaled in table],
        'fit_window': list(window) if window is not None else None,
        'slope': slope,
    }
    return CommandResult(
        command='tail',
        payload=payload,
        header=('a', 'log_ratio', 'scaled'),
        rows=[[a, repr(ratio), repr(scaled)] for a, ratio, scaled in table],
    )


__all__ = ['emit_pmf', 'tail_table']
