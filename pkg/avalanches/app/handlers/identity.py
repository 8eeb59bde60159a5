import logging
from typing import Any

from avalanches.app import combinatorics
from avalanches.app.artifacts import CommandResult
from avalanches.app.serializers import census_rows, census_to_dict, exact_to_json
from avalanches.di import FromDI
from corelib.config import Settings
from domain.commands import TreeCensusCommand, VerifyIdentityCommand

logger = logging.getLogger(__name__)


def _identity_row(cmd: VerifyIdentityCommand, n: int) -> dict[str, Any]:
    rhs = combinatorics.identity_rhs(n)
    lhs = (
        combinatorics.forest_identity_lhs(n)
        if cmd.forest
        else combinatorics.identity_lhs(n)
    )
    row: dict[str, Any] = {
        'n': n,
        'lhs': exact_to_json(lhs),
        'rhs': exact_to_json(rhs),
        'equal': lhs == rhs,
    }
    if cmd.forest:
        row['uncorrected'] = exact_to_json(combinatorics.uncorrected_forest_sum(n))
    if cmd.s is not None and cmd.s <= n:
        partial, remainder = combinatorics.induction_step_check(n, cmd.s)
        row['induction'] = {
            's': cmd.s,
            'partial': exact_to_json(partial),
            'remainder': exact_to_json(remainder),
            'equal': partial + remainder == rhs,
        }
    # a sweep skips the rows where k is out of range; a single n reports it
    if cmd.binomial is not None and (cmd.n is not None or cmd.binomial <= n - 1):
        left, right = combinatorics.abel_binomial_check(n, cmd.binomial)
        row['binomial'] = {
            'k': cmd.binomial,
            'lhs': exact_to_json(left),
            'rhs': exact_to_json(right),
            'equal': left == right,
        }
    return row


def _row_passed(row: dict[str, Any]) -> bool:
    nested = [row[key]['equal'] for key in ('induction', 'binomial') if key in row]
    return row['equal'] and all(nested)


def _csv_line(row: dict[str, Any]) -> list[Any]:
    induction = row.get('induction', {})
    binomial = row.get('binomial', {})
    return [
        row['n'],
        row['lhs'],
        row['rhs'],
        str(row['equal']).lower(),
        induction.get('partial', ''),
        induction.get('remainder', ''),
        binomial.get('lhs', ''),
        binomial.get('rhs', ''),
    ]


def verify_identity(cmd: VerifyIdentityCommand) -> CommandResult:
    rows = [_identity_row(cmd, n) for n in cmd.values_of_n()]
    passed = all(_row_passed(row) for row in rows)
    if cmd.n is not None:
        payload = rows[0]
    else:
        payload = {'n_max': cmd.n_max, 'forest': cmd.forest, 'rows': rows, 'passed': passed}
    if not passed:
        logger.warning('identity check failed for %s', [r['n'] for r in rows if not _row_passed(r)])
    return CommandResult(
        command='identity',
        payload=payload,
        header=(
            'n',
            'lhs',
            'rhs',
            'equal',
            'induction_partial',
            'induction_remainder',
            'binomial_lhs',
            'binomial_rhs',
        ),
        rows=[_csv_line(row) for row in rows],
        passed=passed,
    )


def tree_census(cmd: TreeCensusCommand, settings: FromDI[Settings]) -> CommandResult:
    census = combinatorics.tree_census(cmd.n, max_vertices=settings.TREE_CENSUS_MAX_VERTICES)
    cayley = combinatorics.cayley_count(cmd.n + 1)
    matches = (
        combinatorics.census_matches_identity(census)
        and census.total_rooted_trees == combinatorics.identity_rhs(cmd.n)
        and census.distinct_trees == cayley
    )
    return CommandResult(
        command='trees',
        payload={**census_to_dict(census), 'cayley': str(cayley), 'matches': matches},
        header=('parts', 'count'),
        rows=census_rows(census),
        passed=matches,
    )


__all__ = ['verify_identity', 'tree_census']
