# -*- coding: utf-8 -*-
"""
certbounds.stats
----------------

This module provides interval estimators for the proportions and ratios
measured on simulated outcomes.

:copyright: (c) 2026 by the certbounds developers
:license: BSD 3-clause, see LICENSE for more details.
"""

# Imports
# built-in
import warnings

# 3rd party
import numpy as np
from scipy import stats

# local
from . import utils


def _z(confidence):
    confidence = utils.check_open_unit(confidence, "confidence")

    return float(stats.norm.ppf(0.5 + confidence / 2.))


def wilson_interval(successes=None, trials=None, confidence=0.95):
    """Wilson score interval for a binomial proportion.

    .. math::

        \\frac{\\hat p + z^2/2n \\pm z \\sqrt{\\hat p (1-\\hat p)/n +
        z^2/4n^2}}{1 + z^2/n}

    Parameters
    ----------
    successes : int
        Number of successes.
    trials : int
        Number of trials; positive.
    confidence : float, optional
        Coverage probability of the interval.

    Returns
    -------
    estimate : float
        Sample proportion.
    lower : float
        Lower confidence bound.
    upper : float
        Upper confidence bound.

    """

    # check inputs
    if successes is None:
        raise TypeError("Please specify the number of successes.")

    trials = utils.check_positive_int(int(trials), "trials")
    successes = int(successes)

    if not 0 <= successes <= trials:
        raise ValueError("successes must lie between 0 and trials.")

    z = _z(confidence)
    p = successes / trials
    z2n = z * z / trials

    center = (p + z2n / 2.) / (1. + z2n)
    half = z * np.sqrt(p * (1. - p) / trials + z2n / (4. * trials)) / (1. + z2n)

    lower = max(0., center - half)
    upper = min(1., center + half)

    # exact at the boundaries
    if successes == 0:
        lower = 0.
    if successes == trials:
        upper = 1.

    return utils.ReturnTuple((p, lower, upper), ('estimate', 'lower', 'upper'))


def proportion_ratio_interval(k1=None, n1=None, k0=None, n0=None,
                              confidence=0.95):
    """Conservative interval for a ratio of two proportions.

    Combines the Wilson bounds of each proportion:
    :math:`[p_1^{lo}/p_0^{hi}, p_1^{hi}/p_0^{lo}]`. Each side holds with at
    least the requested confidence when the two samples are independent.

    Parameters
    ----------
    k1, n1 : int
        Numerator successes and trials.
    k0, n0 : int
        Denominator successes and trials.
    confidence : float, optional
        Per-proportion coverage probability.

    Returns
    -------
    estimate : float
        Ratio of sample proportions; ``numpy.inf`` if `k0` is 0 and `k1` is
        positive, NaN if both are 0.
    lower : float
        Lower confidence bound.
    upper : float
        Upper confidence bound; ``numpy.inf`` if `k0` is 0.

    """

    p1, lo1, hi1 = wilson_interval(k1, n1, confidence)
    p0, lo0, hi0 = wilson_interval(k0, n0, confidence)

    with np.errstate(divide='ignore', invalid='ignore'):
        estimate = np.float64(p1) / p0
        lower = np.float64(lo1) / hi0
        upper = np.float64(hi1) / lo0 if lo0 > 0. else np.inf

    return utils.ReturnTuple((float(estimate), float(lower), float(upper)),
                             ('estimate', 'lower', 'upper'))


def risk_ratio_interval(k1=None, n1=None, k0=None, n0=None, confidence=0.95):
    """Katz log interval for a risk ratio, censored at zero counts.

    Parameters
    ----------
    k1, n1 : int
        Numerator events and trials.
    k0, n0 : int
        Denominator events and trials.
    confidence : float, optional
        Coverage probability.

    Returns
    -------
    estimate : float
        Ratio of event proportions.
    lower : float
        Lower confidence bound.
    upper : float
        Upper confidence bound.
    censored : bool
        True when a count is zero; the bounds then come from the Wilson
        bounds of the two proportions and the estimate is a bound itself.

    """

    k1, n1, k0, n0 = int(k1), int(n1), int(k0), int(n0)

    if k1 == 0 or k0 == 0:
        warnings.warn("Zero events in a risk ratio; reporting a censored "
                      "interval.")
        out = proportion_ratio_interval(k1, n1, k0, n0, confidence)
        return utils.ReturnTuple(tuple(out) + (True, ),
                                 tuple(out.keys()) + ('censored', ))

    z = _z(confidence)
    estimate = (k1 / n1) / (k0 / n0)
    se = np.sqrt(1. / k1 - 1. / n1 + 1. / k0 - 1. / n0)
    lower = estimate * np.exp(-z * se)
    upper = estimate * np.exp(z * se)

    args = (float(estimate), float(lower), float(upper), False)
    names = ('estimate', 'lower', 'upper', 'censored')

    return utils.ReturnTuple(args, names)


def mean_interval(values=None, confidence=0.95):
    """Normal-approximation interval for a sample mean.

    Parameters
    ----------
    values : array
        Sample values.
    confidence : float, optional
        Coverage probability.

    Returns
    -------
    estimate : float
        Sample mean.
    lower : float
        Lower confidence bound; NaN for a single value.
    upper : float
        Upper confidence bound; NaN for a single value.

    """

    if values is None:
        raise TypeError("Please specify the sample values.")

    values = np.asarray(values, dtype=float)
    n = len(values)
    if n == 0:
        raise ValueError("The sample is empty.")

    mean = float(values.mean())
    if n < 2:
        return utils.ReturnTuple((mean, np.nan, np.nan),
                                 ('estimate', 'lower', 'upper'))

    half = _z(confidence) * values.std(ddof=1) / np.sqrt(n)

    return utils.ReturnTuple((mean, mean - half, mean + half),
                             ('estimate', 'lower', 'upper'))
