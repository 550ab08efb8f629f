# -*- coding: utf-8 -*-
"""
certbounds.reports
------------------

This module regenerates the benchmark tables, the cross-asset figure data and
the tension-ratio disclosure from the closed forms and the bundled scenario
definitions.

Every table carries full-precision columns next to ``*_display`` columns
rounded the way the published cells are printed:
    * Required discrimination in the base-rate and tension tables: nearest
      100;
    * Required discrimination in the rescue table: nearest integer, nearest
      100 from 5,000 up;
    * Base rates and d': two decimals; binormal discrimination: integer;
    * Tension ratios: displayed required discrimination over the ceiling,
      rounded to integer; cells where this differs from the rounded exact
      ratio are flagged in the ``note`` column;
    * Figure data: three significant figures, achieved discrimination two
      decimals.

:copyright: (c) 2026 by the certbounds developers
:license: BSD 3-clause, see LICENSE for more details.
"""

# Imports
# built-in
import logging
import math
import os
from collections import OrderedDict

# 3rd party
import numpy as np
import pandas as pd

# local
from . import binormal, bounds, storage, utils
from .__version__ import __version__

logger = logging.getLogger(__name__)

# Globals
TAU = 0.9999
TABLE1_PI = (0.90, 0.70, 0.50, 0.30, 0.10)
TABLE2_AUC = (0.85, 0.90, 0.95, 0.99)
TABLE2_FPR = (1e-3, 1e-4)
TABLE3_TAU = (0.99, 0.995, 0.999, 0.9999)
TABLE3_PI = (0.50, 0.30)
TABLE3_LAMBDA = 100.
TABLE4_ROWS = ((0.50, 100.), (0.50, 50.), (0.50, 20.), (0.30, 100.),
               (0.30, 50.), (0.10, 100.))

SCENARIO_FILE = 'scenarios.json'
CONFIG_FILES = ('pool_sensitivity.json', 'binormal_matched.json')
TABLE_FILES = OrderedDict([(1, 'table1.csv'), (2, 'table2.csv'),
                           (3, 'table3.csv'), (4, 'table4.csv'),
                           (5, 'table5.csv')])
FIGURE_FILE = 'figure1.csv'
DISCLOSURE_FILE = 'disclosure.json'


def round_half_up(value, base=1.):
    """Round to the nearest multiple of `base`, halves away from zero."""

    q = abs(value) / base
    return math.copysign(math.floor(q + 0.5) * base, value)


def round_sig(value, digits=3):
    """Round to `digits` significant figures."""

    if value == 0. or not np.isfinite(value):
        return value

    return float("%.*g" % (digits, value))


def format_count(value):
    """Integer cell with thousands separators, e.g. '10,000'."""

    return "{:,}".format(int(round(value)))


def format_fixed(value, decimals=2):
    """Fixed-point cell, e.g. '0.50'."""

    return "%.*f" % (decimals, round_half_up(value, 10. ** -decimals))


def _decimal(value):
    # column-name form of a probability, e.g. 0.001 and 0.5
    return ("%.10f" % value).rstrip('0').rstrip('.')


class Scenario(object):
    """A named (tau, pi, ceiling) calibration with disclosure details.

    Parameters
    ----------
    name : str
        Scenario identifier.
    tau : float
        Reliability target, in (0, 1).
    pi : float
        Base rate, in (0, 1).
    lambda_avail : float
        Discrimination ceiling; positive, possibly ``numpy.inf``.
    coverage_q : float, optional
        Minimum issuance rate.
    ppv_obs : float, optional
        Observed positive predictive value.
    notes : str, optional
        Free text.
    disclosure : dict, optional
        Certified event, horizon, reference class, base-rate bounds and
        optional regime survival figures.

    """

    def __init__(self, name=None, tau=None, pi=None, lambda_avail=None,
                 coverage_q=None, ppv_obs=None, notes="", disclosure=None):

        if name is None:
            raise TypeError("Please specify a scenario name.")

        self.name = str(name)
        self.tau = utils.check_open_unit(tau, "tau")
        self.pi = utils.check_open_unit(pi, "pi")
        self.lambda_avail = utils.check_discrimination(lambda_avail)
        self.coverage_q = coverage_q
        self.ppv_obs = ppv_obs
        self.notes = notes
        self.disclosure = dict(disclosure or {})

    @classmethod
    def from_dict(cls, data):
        """Build a scenario from its JSON form; "inf" is an infinite ceiling."""

        lam = data.get("lambda_avail")
        if isinstance(lam, str) and lam.lower() in ("inf", "infinity"):
            lam = np.inf

        try:
            return cls(name=data["name"], tau=data["tau"], pi=data["pi"],
                       lambda_avail=lam, coverage_q=data.get("coverage_q"),
                       ppv_obs=data.get("ppv_obs"),
                       notes=data.get("notes", ""),
                       disclosure=data.get("disclosure"))
        except KeyError as err:
            raise ValueError("Scenario is missing the %s field." % err)

    def verdict(self):
        """Feasibility verdict; see :func:`certbounds.bounds.feasibility`."""

        return bounds.feasibility(tau=self.tau, pi=self.pi,
                                  lambda_avail=self.lambda_avail,
                                  coverage_q=self.coverage_q,
                                  ppv_obs=self.ppv_obs)

    def __repr__(self):
        return "Scenario(name=%r, tau=%r, pi=%r, lambda_avail=%r)" % (
            self.name, self.tau, self.pi, self.lambda_avail)


def load_scenarios(data=None):
    """Bundled (or given) scenarios by name.

    Parameters
    ----------
    data : dict, optional
        Scenario definitions; defaults to the bundled file.

    Returns
    -------
    scenarios : OrderedDict
        Name to :class:`Scenario`.

    """

    if data is None:
        data = storage.load_data(SCENARIO_FILE)

    out = OrderedDict()
    for item in data["scenarios"]:
        sc = Scenario.from_dict(item)
        out[sc.name] = sc

    return out


def table_1(tau=TAU, pis=TABLE1_PI):
    """Required discrimination across base rates.

    Returns
    -------
    table : pandas.DataFrame
        Columns pi, odds_factor, odds_factor_display, lambda_req,
        lambda_req_display.

    """

    rows = []
    for pi in pis:
        odds = (1. - pi) / pi
        req = bounds.lambda_required(tau=tau, pi=pi)
        rows.append((pi, odds, format_fixed(odds), req,
                     format_count(round_half_up(req, 100.))))

    return pd.DataFrame(rows, columns=['pi', 'odds_factor',
                                       'odds_factor_display', 'lambda_req',
                                       'lambda_req_display'])


def table_2(aucs=TABLE2_AUC, fprs=TABLE2_FPR):
    """Binormal discrimination at stringent false-positive rates.

    Returns
    -------
    table : pandas.DataFrame
        Columns auc, dprime, dprime_display and, per false-positive rate F,
        lambda_fpr_F and lambda_fpr_F_display.

    """

    columns = ['auc', 'dprime', 'dprime_display']
    for f in fprs:
        columns += ['lambda_fpr_%s' % _decimal(f),
                    'lambda_fpr_%s_display' % _decimal(f)]

    rows = []
    for auc in aucs:
        model = binormal.BinormalModel.from_auc(auc)
        row = [auc, model.dprime, format_fixed(model.dprime)]
        for f in fprs:
            lam = binormal.lambda_at_fpr(model, f)['discrimination']
            row += [lam, format_count(round_half_up(lam))]
        rows.append(row)

    return pd.DataFrame(rows, columns=columns)


def table_3(lambda_avail=TABLE3_LAMBDA, taus=TABLE3_TAU, pis=TABLE3_PI):
    """Rescue base rates and required discrimination across targets.

    Returns
    -------
    table : pandas.DataFrame
        Columns tau, min_pi, min_pi_display and, per base rate p,
        lambda_req_pi_p and lambda_req_pi_p_display.

    """

    columns = ['tau', 'min_pi', 'min_pi_display']
    for pi in pis:
        columns += ['lambda_req_pi_%s' % _decimal(pi),
                    'lambda_req_pi_%s_display' % _decimal(pi)]

    rows = []
    for tau in taus:
        rescue = bounds.rescue_min_base_rate(tau=tau, lambda_avail=lambda_avail)
        row = [tau, rescue, format_fixed(rescue)]
        for pi in pis:
            req = bounds.lambda_required(tau=tau, pi=pi)
            base = 100. if req >= 5000. else 1.
            row += [req, format_count(round_half_up(req, base))]
        rows.append(row)

    return pd.DataFrame(rows, columns=columns)


def table_4(tau=TAU, rows=TABLE4_ROWS):
    """Unconstrained tension ratios.

    Returns
    -------
    table : pandas.DataFrame
        Columns pi, lambda_req, lambda_req_display, lambda_avail, psi,
        psi_display, note.

    """

    out = []
    for pi, lam in rows:
        req = bounds.lambda_required(tau=tau, pi=pi)
        psi = bounds.tension_ratio(tau=tau, pi=pi, lambda_avail=lam)
        shown = round_half_up(req, 100.)
        psi_shown = round_half_up(shown / lam)
        note = ""
        if psi_shown != round_half_up(psi):
            note = ("ratio of displayed values; exact %s rounds to %d"
                    % (format_fixed(psi), round_half_up(psi)))
        out.append((pi, req, format_count(shown), lam, psi,
                    format_count(psi_shown), note))

    return pd.DataFrame(out, columns=['pi', 'lambda_req', 'lambda_req_display',
                                      'lambda_avail', 'psi', 'psi_display',
                                      'note'])


def _asset_classes(data):
    if data is None:
        data = storage.load_data(SCENARIO_FILE)

    return data.get("tau", TAU), data["asset_classes"]


def table_5(data=None):
    """Cross-asset determinants: bundled ranges plus computed point values.

    Parameters
    ----------
    data : dict, optional
        Scenario definitions; defaults to the bundled file.

    Returns
    -------
    table : pandas.DataFrame
        Columns asset_class, pi_range, lambda_req_range, lambda_avail_range,
        psi_range, pi, lambda_avail, lambda_req, psi.

    """

    tau, classes = _asset_classes(data)

    rows = []
    for item in classes:
        ranges = item["ranges"]
        req = bounds.lambda_required(tau=tau, pi=item["pi"])
        psi = bounds.tension_ratio(tau=tau, pi=item["pi"],
                                   lambda_avail=item["lambda_avail"])
        rows.append((item["table_label"], ranges["pi"], ranges["lambda_req"],
                     ranges["lambda_avail"], ranges["psi"], item["pi"],
                     float(item["lambda_avail"]), req, psi))

    return pd.DataFrame(rows, columns=['asset_class', 'pi_range',
                                       'lambda_req_range',
                                       'lambda_avail_range', 'psi_range',
                                       'pi', 'lambda_avail', 'lambda_req',
                                       'psi'])


def figure_1(data=None):
    """Data series of the cross-asset discrimination figure.

    Parameters
    ----------
    data : dict, optional
        Scenario definitions; defaults to the bundled file.

    Returns
    -------
    table : pandas.DataFrame
        Columns asset_class, pi, lambda_req, lambda_req_display,
        lambda_avail, lambda_avail_display, lambda_ach, lambda_ach_display;
        achieved discrimination is empty where no failure rate is bundled.

    """

    tau, classes = _asset_classes(data)

    rows = []
    for item in classes:
        pi = item["pi"]
        req = bounds.lambda_required(tau=tau, pi=pi)
        lam = float(item["lambda_avail"])
        ach = np.nan
        ach_shown = np.nan
        if item.get("failure_rate") is not None:
            ach = bounds.achieved_discrimination(item["failure_rate"], pi)
            ach_shown = round_half_up(ach, 0.01)
        rows.append((item["label"], pi, req, round_sig(req), lam,
                     round_sig(lam), ach, ach_shown))

    return pd.DataFrame(rows, columns=['asset_class', 'pi', 'lambda_req',
                                       'lambda_req_display', 'lambda_avail',
                                       'lambda_avail_display', 'lambda_ach',
                                       'lambda_ach_display'])


def _json_number(value):
    if value is None:
        return None
    value = float(value)
    if np.isinf(value):
        return "inf"
    return value


def disclosure(scenario=None):
    """Tension-ratio disclosure record of a scenario.

    Lists the target, certified event and horizon, reference class, base rate
    with its sensitivity bounds, the ceiling and whether it is
    coverage-constrained, and the resulting tension ratio over the base-rate
    bounds.

    Parameters
    ----------
    scenario : Scenario
        Scenario to disclose.

    Returns
    -------
    record : OrderedDict
        JSON-ready disclosure.

    """

    if not isinstance(scenario, Scenario):
        raise TypeError("Please specify a Scenario.")

    v = scenario.verdict()
    info = scenario.disclosure
    low, high = info.get("pi_bounds", (scenario.pi, scenario.pi))
    psi_range = [bounds.tension_ratio(scenario.tau, p, v['lambda_effective'])
                 for p in (high, low)]

    out = OrderedDict()
    out["name"] = scenario.name
    out["tau"] = scenario.tau
    out["certified_event"] = info.get("certified_event")
    out["horizon"] = info.get("horizon")
    out["reference_class"] = info.get("reference_class")
    out["pi"] = OrderedDict([("estimate", scenario.pi), ("low", low),
                             ("high", high)])
    out["lambda_avail"] = OrderedDict([
        ("value", _json_number(v['lambda_effective'])),
        ("kind", "unconstrained" if scenario.coverage_q is None
         else "coverage-constrained"),
        ("coverage_q", scenario.coverage_q)])
    out["lambda_req"] = v['lambda_req']
    out["psi"] = OrderedDict([("estimate", v['tension_psi']),
                              ("low", psi_range[0]), ("high", psi_range[1])])
    out["max_ppv"] = v['max_ppv']
    out["feasible"] = v['feasible']
    out["rescue_pi"] = v['rescue_pi']
    if v['deficit'] is not None:
        out["ppv_obs"] = scenario.ppv_obs
        out["deficit"] = v['deficit']
    if "regime_survival" in info:
        out["regime_survival"] = info["regime_survival"]
    out["notes"] = scenario.notes

    return out


def disclosures(data=None):
    """Disclosure records of every bundled scenario, with metadata.

    Returns
    -------
    report : OrderedDict
        Keys metadata (tool version, seeds of the bundled simulator configs)
        and disclosures.

    """

    seeds = OrderedDict()
    for name in CONFIG_FILES:
        seeds[name] = storage.load_data(name).get("seed")

    meta = OrderedDict([("version", __version__), ("seeds", seeds)])
    records = [disclosure(sc) for sc in load_scenarios(data).values()]

    return OrderedDict([("metadata", meta), ("disclosures", records)])


def make_table(table_id=None):
    """Build a table by number (1 to 5)."""

    builders = {1: table_1, 2: table_2, 3: table_3, 4: table_4, 5: table_5}

    if table_id not in builders:
        raise ValueError("Unknown table %r; use 1 to 5." % (table_id, ))

    return builders[table_id]()


def write_table(table_id=None, path=None):
    """Write a table to a CSV file.

    Parameters
    ----------
    table_id : int
        Table number, 1 to 5.
    path : str
        Destination path.

    """

    if path is None:
        raise TypeError("Please specify an output path.")

    storage.write_csv(make_table(table_id), path)


def write_report(out_dir=None):
    """Write all tables, the figure data and the disclosure to a folder.

    Parameters
    ----------
    out_dir : str
        Destination folder; created if missing.

    Returns
    -------
    paths : list
        Written file paths, in a fixed order.

    Raises
    ------
    OSError
        With the offending path, if a file cannot be written.

    """

    if out_dir is None:
        raise TypeError("Please specify an output folder.")

    out_dir = utils.normpath(out_dir)

    paths = []
    try:
        os.makedirs(out_dir, exist_ok=True)
        for table_id, name in TABLE_FILES.items():
            path = os.path.join(out_dir, name)
            write_table(table_id, path)
            paths.append(path)

        path = os.path.join(out_dir, FIGURE_FILE)
        storage.write_csv(figure_1(), path)
        paths.append(path)

        path = os.path.join(out_dir, DISCLOSURE_FILE)
        storage.dumpJSON(disclosures(), path)
        paths.append(path)
    except OSError as err:
        raise OSError("Cannot write report file %s: %s"
                      % (err.filename or out_dir, err.strerror or err))

    logger.debug("report written to %s", out_dir)

    return paths
