# -*- coding: utf-8 -*-
"""
certbounds.cli
--------------

Command-line interface.

Usage:
    certbounds bounds --tau 0.9999 --pi 0.5 --lambda-avail 100
    certbounds table --id 4
    certbounds binormal --auc 0.9 --fpr 1e-3 --fpr 1e-4
    certbounds ceiling --space space.json --pi 0.5 --coverage 0.4 --oracle
    certbounds simulate --config pool.json --reps 1000000
    certbounds moments --case 1 -a 0.2 -b 0.5 --eta 0.2 --epsilon 0.5
    certbounds report --out results

Exit codes are 0 on success, 2 on invalid input and 3 when an internal check
(such as the brute-force oracle) disagrees with the closed-form value.

:copyright: (c) 2026 by the certbounds developers
:license: BSD 3-clause, see LICENSE for more details.
"""

# Imports
# built-in
import contextlib
import json
import logging
from collections import OrderedDict

# 3rd party
import click
import numpy as np
import pandas as pd

# local
from . import binormal, bounds, discrete, moments, reports, storage
from .__version__ import __version__
from .synthesizers import pool

logger = logging.getLogger(__name__)


class InputError(click.ClickException):
    """Invalid input; exits with code 2."""

    exit_code = 2


class CheckFailure(click.ClickException):
    """An internal consistency check failed; exits with code 3."""

    exit_code = 3


@contextlib.contextmanager
def _input_errors():
    # domain and I/O errors become exit code 2
    try:
        yield
    except (ValueError, TypeError, OSError) as err:
        raise InputError(str(err))


def _jsonable(obj):
    if isinstance(obj, dict):
        return OrderedDict((k, _jsonable(v)) for k, v in obj.items())
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        if np.isnan(obj):
            return None
        if np.isinf(obj):
            return "inf" if obj > 0 else "-inf"
        return float(obj)
    return obj


def _echo_json(data):
    click.echo(json.dumps(_jsonable(data), indent=2, ensure_ascii=False))


def _echo_table(table, out=None):
    if out is None:
        click.echo(table.to_csv(index=False, lineterminator='\n'), nl=False)
    else:
        storage.write_csv(table, out)
        click.echo("Wrote %s" % out)


@click.group()
@click.version_option(version=__version__, prog_name="certbounds")
@click.option('--verbose', '-v', is_flag=True, help='Log debug messages.')
def cli(verbose):
    """
    Certification feasibility: Bayes bounds, discrimination ceilings,
    binormal calibration, pool simulation and moment constructions.

    Examples:

        certbounds bounds --tau 0.9999 --pi 0.5 --lambda-avail 100

        certbounds table --id 1

        certbounds report --out results
    """

    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s')


@cli.command('bounds')
@click.option('--tau', type=float, help='Reliability target, in (0, 1).')
@click.option('--pi', type=float, help='Base rate, in (0, 1).')
@click.option('--lambda-avail', 'lambda_avail', type=float,
              help='Discrimination ceiling; "inf" for perfect discrimination.')
@click.option('--coverage', type=float, default=None,
              help='Minimum issuance rate q.')
@click.option('--ppv-obs', 'ppv_obs', type=float, default=None,
              help='Observed positive predictive value.')
@click.option('--scenario', default=None,
              help='Use a bundled scenario instead of the flags above.')
@click.option('--format', 'fmt', type=click.Choice(['json', 'csv']),
              default='json', help='Output format.')
def cmd_bounds(tau, pi, lambda_avail, coverage, ppv_obs, scenario, fmt):
    """Feasibility verdict for a precision claim."""

    with _input_errors():
        if scenario is not None:
            if any(v is not None for v in (tau, pi, lambda_avail)):
                raise ValueError("--scenario cannot be combined with --tau, "
                                 "--pi or --lambda-avail.")
            scenarios = reports.load_scenarios()
            if scenario not in scenarios:
                raise ValueError("Unknown scenario %r; available: %s."
                                 % (scenario, ", ".join(scenarios)))
            sc = scenarios[scenario]
            tau, pi, lambda_avail = sc.tau, sc.pi, sc.lambda_avail
            coverage = sc.coverage_q if coverage is None else coverage
            ppv_obs = sc.ppv_obs if ppv_obs is None else ppv_obs

        verdict = bounds.feasibility(tau=tau, pi=pi, lambda_avail=lambda_avail,
                                     coverage_q=coverage, ppv_obs=ppv_obs)

    record = OrderedDict([('tau', tau), ('pi', pi),
                          ('lambda_avail', lambda_avail),
                          ('coverage_q', coverage), ('ppv_obs', ppv_obs)])
    record.update(verdict.as_dict())

    if fmt == 'json':
        _echo_json(record)
    else:
        _echo_table(pd.DataFrame([_jsonable(record)]))


@cli.command('table')
@click.option('--id', 'table_id', type=click.IntRange(1, 5), required=True,
              help='Table number, 1 to 5.')
@click.option('--out', type=click.Path(dir_okay=False), default=None,
              help='CSV destination; standard output by default.')
def cmd_table(table_id, out):
    """Regenerate a benchmark table as CSV."""

    with _input_errors():
        _echo_table(reports.make_table(table_id), out)


@cli.command('binormal')
@click.option('--auc', type=float, default=None, help='Area under the ROC curve.')
@click.option('--dprime', type=float, default=None, help="Separability d'.")
@click.option('--fpr', type=float, multiple=True, required=True,
              help='False-positive rate; repeat for several.')
def cmd_binormal(auc, dprime, fpr):
    """Binormal discrimination at given false-positive rates."""

    with _input_errors():
        if (auc is None) == (dprime is None):
            raise ValueError("Specify exactly one of --auc and --dprime.")

        if auc is not None:
            model = binormal.BinormalModel.from_auc(auc)
        else:
            model = binormal.BinormalModel(dprime)

        pts = binormal.roc_points(model, list(fpr))

    table = pd.DataFrame(OrderedDict([
        ('auc', model.auc), ('dprime', model.dprime), ('fpr', pts['fpr']),
        ('threshold', pts['threshold']), ('sensitivity', pts['sensitivity']),
        ('discrimination', pts['discrimination'])]))
    _echo_table(table)


@cli.command('ceiling')
@click.option('--space', 'space_path', type=click.Path(dir_okay=False),
              required=True, help='Signal space JSON file.')
@click.option('--pi', type=float, required=True, help='Base rate, in (0, 1).')
@click.option('--coverage', type=float, default=None,
              help='Minimum issuance probability q.')
@click.option('--oracle', is_flag=True,
              help='Cross-check against the brute-force oracle.')
@click.option('--step', type=float, default=0.05, show_default=True,
              help='Grid spacing of the coverage oracle; levels are multiples '
                   'of 1/round(1/step).')
def cmd_ceiling(space_path, pi, coverage, oracle, step):
    """Discrimination ceiling of a discrete signal space."""

    with _input_errors():
        space = storage.load_space(space_path)
        ratios = discrete.likelihood_ratios(space)
        ceiling = discrete.esssup_lambda(space)
        ppv = discrete.max_ppv_exact(space, pi)

        record = OrderedDict([('symbols', space.symbols),
                              ('likelihood_ratios', ratios),
                              ('ceiling', ceiling), ('max_ppv', ppv)])

        if coverage is not None:
            cc = discrete.coverage_constrained_ceiling(space, pi, coverage)
            record['coverage_q'] = coverage
            record['coverage_ceiling'] = cc['ceiling']
            record['witness'] = OrderedDict(zip(space.symbols, cc['rule']))
            record['witness_label'] = 'greedy witness'

        check = None
        if oracle:
            check = discrete.oracle_agrees(space, pi, coverage, step)
            record['oracle'] = check.as_dict()
            if coverage is not None and check['agree']:
                record['witness_label'] = 'attained witness'

    _echo_json(record)

    if check is not None and not check['agree']:
        raise CheckFailure("Oracle disagreement: closed form %r, oracle %r."
                           % (check['value'], check['oracle']))


@cli.command('simulate')
@click.option('--config', 'config_path', type=click.Path(dir_okay=False),
              required=True, help='Pool configuration JSON file.')
@click.option('--seed', type=int, default=None,
              help='Seed; defaults to the configuration seed, else 0.')
@click.option('--reps', type=int, required=True, help='Replications.')
@click.option('--jobs', type=int, default=1, show_default=True,
              help='Parallel workers; results do not depend on it.')
@click.option('--out', type=click.Path(dir_okay=False), default=None,
              help='CSV destination; standard output by default.')
@click.option('--outcomes', type=click.Path(dir_okay=False), default=None,
              help='Also save the raw outcome arrays (joblib format).')
def cmd_simulate(config_path, seed, reps, jobs, out, outcomes):
    """Monte Carlo estimates for a pool configuration."""

    with _input_errors():
        data = storage.loadJSON(config_path)
        config = pool.pool_config(data)
        if seed is None:
            seed = data.get("seed", 0)
        if reps < 1:
            raise ValueError("--reps must be positive, got %d." % reps)

        raw = None
        if outcomes is not None:
            raw = pool.simulate_config(config, reps, seed, jobs)
            storage.serialize(raw, outcomes)

        table = pool.summarize(config, reps, seed, n_jobs=jobs, outcomes=raw)

    _echo_table(table, out)


def _parse_r_list(text):
    if text is None:
        return None

    try:
        return [int(v) for v in text.split(',') if v.strip()]
    except ValueError:
        raise ValueError("--r-list must be comma-separated integers, got %r."
                         % text)


@cli.command('moments')
@click.option('--case', type=click.Choice(['1', '2']), required=True,
              help='1: mean zero; 2: mean in (0, 1).')
@click.option('-a', 'a', type=float, default=None, help='Case 1 location a.')
@click.option('-b', 'b', type=float, default=None, help='Case 1 location b.')
@click.option('--eta', type=float, default=None, help='Case 1 weight eta.')
@click.option('--epsilon', type=float, required=True, help='Moment tolerance.')
@click.option('--base', type=click.Choice(['uniform', 'beta', 'point']),
              default='uniform', show_default=True, help='Case 2 base law.')
@click.option('--alpha', type=float, default=None, help='Beta base shape a.')
@click.option('--beta', type=float, default=None, help='Beta base shape b.')
@click.option('--loc', type=float, default=None, help='Point base location.')
@click.option('-M', '--moments', 'n_moments', type=int, default=None,
              help='Number of matched moments.')
@click.option('--r-list', 'r_list', default=None,
              help='Comma-separated tail orders, e.g. 5,10.')
def cmd_moments(case, a, b, eta, epsilon, base, alpha, beta, loc, n_moments,
                r_list):
    """Moment-matching pair with diverging tail moments."""

    with _input_errors():
        r_values = _parse_r_list(r_list)

        if case == '1':
            pair = moments.construct_case1(a=a, b=b, eta=eta, epsilon=epsilon)
        else:
            if n_moments is None:
                raise ValueError("Case 2 needs -M/--moments.")
            q = moments.make_base(base, alpha=alpha, beta=beta, loc=loc)
            pair = moments.construct_case2(q, n_moments, epsilon)

        report = moments.verify_pair(pair, n_moments=n_moments,
                                     epsilon=epsilon, r_list=r_values)

    d1, d2 = pair
    record = OrderedDict([('case', int(case)), ('params', pair.params),
                          ('d1', d1.to_dict()), ('d2', d2.to_dict())])
    record.update(report.as_dict())

    _echo_json(record)


@cli.command('report')
@click.option('--out', 'out_dir', type=click.Path(file_okay=False),
              required=True, help='Destination folder.')
def cmd_report(out_dir):
    """Write all tables, the figure data and the disclosure."""

    with _input_errors():
        paths = reports.write_report(out_dir)

    for path in paths:
        click.echo(path)


if __name__ == '__main__':
    cli()
