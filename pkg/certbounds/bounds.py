# -*- coding: utf-8 -*-
"""
certbounds.bounds
-----------------

This module provides the closed-form Bayes bounds of certification
feasibility: the discrimination a precision target requires, the precision a
discrimination ceiling allows, their tension ratio, and the retrospective
quantities implied by an observed failure rate.

All quantities are computed in full double precision; rounding to display
conventions happens in :mod:`certbounds.reports`.

:copyright: (c) 2026 by the certbounds developers
:license: BSD 3-clause, see LICENSE for more details.
"""

# Imports
# 3rd party
import numpy as np

# local
from . import utils


def ppv_from_lambda(pi=None, lambda_=None):
    """Positive predictive value of a rule with discrimination ratio Λ.

    .. math::

        PPV = \\frac{\\pi \\Lambda}{\\pi \\Lambda + (1 - \\pi)}

    Parameters
    ----------
    pi : float
        Base rate, in (0, 1).
    lambda_ : float
        Discrimination ratio S/F; positive, possibly ``numpy.inf``.

    Returns
    -------
    ppv : float
        Positive predictive value; exactly 1 for infinite Λ.

    Raises
    ------
    ValueError
        If `pi` lies outside (0, 1) or `lambda_` is not positive.

    """

    pi = utils.check_open_unit(pi, "pi")
    lambda_ = utils.check_discrimination(lambda_, "lambda")

    if np.isinf(lambda_):
        return 1.

    num = pi * lambda_

    return num / (num + (1. - pi))


def ppv_from_rates(sensitivity=None, fpr=None, pi=None):
    """Positive predictive value from sensitivity and false-positive rate.

    Bayes' theorem in its direct form, :math:`S\\pi / (S\\pi + F(1-\\pi))`.

    Parameters
    ----------
    sensitivity : float
        Acceptance probability given success, in [0, 1].
    fpr : float
        Acceptance probability given failure, in [0, 1].
    pi : float
        Base rate, in (0, 1).

    Returns
    -------
    ppv : float
        Positive predictive value.

    Raises
    ------
    ValueError
        If the rule never accepts (S = F = 0).

    """

    sensitivity = utils.check_closed_unit(sensitivity, "sensitivity")
    fpr = utils.check_closed_unit(fpr, "fpr")
    pi = utils.check_open_unit(pi, "pi")

    tp = sensitivity * pi
    denom = tp + fpr * (1. - pi)

    if denom == 0.:
        raise ValueError("The rule never accepts; PPV is undefined.")

    return tp / denom


def lambda_required(tau=None, pi=None):
    """Discrimination required to reach precision `tau` at base rate `pi`.

    .. math::

        \\Lambda_{req} = \\frac{\\tau}{1 - \\tau} \\cdot \\frac{1 - \\pi}{\\pi}

    Parameters
    ----------
    tau : float
        Reliability target, in (0, 1).
    pi : float
        Base rate, in (0, 1).

    Returns
    -------
    lambda_req : float
        Minimum discrimination ratio of any rule with PPV at least `tau`.

    """

    tau = utils.check_open_unit(tau, "tau")
    pi = utils.check_open_unit(pi, "pi")

    return (tau / (1. - tau)) * ((1. - pi) / pi)


def max_ppv(pi=None, lambda_avail=None):
    """Supremum of PPV over all admissible rules under a discrimination ceiling.

    Parameters
    ----------
    pi : float
        Base rate, in (0, 1).
    lambda_avail : float
        Discrimination ceiling; positive, possibly ``numpy.inf``.

    Returns
    -------
    ppv : float
        Largest attainable positive predictive value.

    """

    return ppv_from_lambda(pi=pi, lambda_=lambda_avail)


def tension_ratio(tau=None, pi=None, lambda_avail=None):
    """Ratio of required to available discrimination.

    Parameters
    ----------
    tau : float
        Reliability target, in (0, 1).
    pi : float
        Base rate, in (0, 1).
    lambda_avail : float
        Discrimination ceiling; positive, possibly ``numpy.inf``.

    Returns
    -------
    psi : float
        :math:`\\Lambda_{req} / \\Lambda_{avail}`; 0 when the ceiling is
        infinite.

    Notes
    -----
    * A ratio above 1 means no admissible rule reaches `tau`.

    """

    lambda_req = lambda_required(tau=tau, pi=pi)
    lambda_avail = utils.check_discrimination(lambda_avail)

    if np.isinf(lambda_avail):
        return 0.

    return lambda_req / lambda_avail


def rescue_min_base_rate(tau=None, lambda_avail=None):
    """Minimum base rate at which a finite ceiling suffices for `tau`.

    .. math::

        \\pi_{min} = \\frac{\\tau}{\\tau + (1 - \\tau) \\Lambda_{avail}}

    Parameters
    ----------
    tau : float
        Reliability target, in (0, 1).
    lambda_avail : float
        Finite, positive discrimination ceiling.

    Returns
    -------
    pi_min : float
        Base rate at which :func:`lambda_required` equals `lambda_avail`.

    """

    tau = utils.check_open_unit(tau, "tau")
    lambda_avail = utils.check_discrimination(lambda_avail, allow_inf=False)

    return tau / (tau + (1. - tau) * lambda_avail)


def achieved_discrimination(failure_rate=None, pi=None):
    """Discrimination implied by the failure rate of positively rated items.

    .. math::

        \\Lambda_{ach} = \\frac{1 - f}{f} \\cdot \\frac{1 - \\pi}{\\pi}

    Parameters
    ----------
    failure_rate : float
        Observed failure rate among accepted instruments, in (0, 1).
    pi : float
        Base rate of the reference class, in (0, 1).

    Returns
    -------
    lambda_ach : float
        Retrospective discrimination; below 1 means the rating was negatively
        informative.

    """

    failure_rate = utils.check_open_unit(failure_rate, "failure_rate")
    pi = utils.check_open_unit(pi, "pi")

    return ((1. - failure_rate) / failure_rate) * ((1. - pi) / pi)


def prior_free_deficit(ppv_obs=None, tau=None):
    """Ratio of required to achieved discrimination, free of the base rate.

    .. math::

        \\frac{\\Lambda_{req}}{\\Lambda_{ach}} =
        \\frac{\\tau (1 - PPV_{obs})}{(1 - \\tau) PPV_{obs}}

    Parameters
    ----------
    ppv_obs : float
        Observed positive predictive value, in (0, 1).
    tau : float
        Reliability target, in (0, 1).

    Returns
    -------
    deficit : float
        Factor by which achieved discrimination fell short of the target.

    Notes
    -----
    * The factor (1 - pi)/pi cancels between the two ratios, so the result
      holds for any base rate of the reference class.

    """

    ppv_obs = utils.check_open_unit(ppv_obs, "ppv_obs")
    tau = utils.check_open_unit(tau, "tau")

    return tau * (1. - ppv_obs) / ((1. - tau) * ppv_obs)


def model_free_lambda_cap(fpr=None):
    """Largest discrimination any rule with false-positive rate `fpr` can have.

    Since sensitivity is at most 1, :math:`\\Lambda \\le 1/F`.

    Parameters
    ----------
    fpr : float
        False-positive rate, in (0, 1].

    Returns
    -------
    cap : float
        Upper bound 1/F.

    """

    fpr = utils.check_closed_unit(fpr, "fpr")

    if fpr == 0.:
        raise ValueError("fpr must be positive for a finite cap.")

    return 1. / fpr


def coverage_lambda_cap(pi=None, q=None):
    """Model-free ceiling implied by a minimum issuance rate.

    A rule issuing with probability at least `q` satisfies
    :math:`\\pi S + (1-\\pi) F \\ge q`; with :math:`S \\le 1` this forces
    :math:`F \\ge (q - \\pi)/(1 - \\pi)` whenever :math:`q > \\pi`.

    Parameters
    ----------
    pi : float
        Base rate, in (0, 1).
    q : float
        Minimum issuance rate, in (0, 1).

    Returns
    -------
    cap : float
        :math:`(1 - \\pi)/(q - \\pi)` when `q` exceeds `pi`, else ``numpy.inf``.

    """

    pi = utils.check_open_unit(pi, "pi")
    q = utils.check_open_unit(q, "coverage_q")

    if q <= pi:
        return np.inf

    return (1. - pi) / (q - pi)


def required_sensitivity_fpr(tau=None, pi=None, sensitivity=1.):
    """Largest false-positive rate compatible with `tau` at a given sensitivity.

    Parameters
    ----------
    tau : float
        Reliability target, in (0, 1).
    pi : float
        Base rate, in (0, 1).
    sensitivity : float, optional
        Sensitivity of the operating point, in (0, 1]; defaults to 1.

    Returns
    -------
    fpr_max : float
        :math:`S / \\Lambda_{req}`.

    """

    sensitivity = utils.check_closed_unit(sensitivity, "sensitivity")

    if sensitivity == 0.:
        raise ValueError("sensitivity must be positive.")

    return sensitivity / lambda_required(tau=tau, pi=pi)


def rule_metrics(sensitivity=None, false_positive_rate=None, pi=None):
    """Assemble the metrics of a decision rule.

    Parameters
    ----------
    sensitivity : float
        Acceptance probability given success, in [0, 1].
    false_positive_rate : float
        Acceptance probability given failure, in [0, 1].
    pi : float, optional
        Base rate; if given, the PPV is filled in.

    Returns
    -------
    sensitivity : float
        Sensitivity S.
    false_positive_rate : float
        False-positive rate F.
    discrimination : float
        S/F; ``numpy.inf`` when F = 0 < S.
    ppv : float, None
        Positive predictive value at `pi`, if given.

    Raises
    ------
    ValueError
        If the rule never accepts.

    """

    sensitivity = utils.check_closed_unit(sensitivity, "sensitivity")
    false_positive_rate = utils.check_closed_unit(false_positive_rate,
                                                  "false_positive_rate")

    if sensitivity == 0. and false_positive_rate == 0.:
        raise ValueError("The rule never accepts; discrimination is undefined.")

    if false_positive_rate == 0.:
        discrimination = np.inf
    else:
        discrimination = sensitivity / false_positive_rate

    ppv = None
    if pi is not None:
        ppv = ppv_from_rates(sensitivity, false_positive_rate, pi)

    args = (sensitivity, false_positive_rate, discrimination, ppv)
    names = ('sensitivity', 'false_positive_rate', 'discrimination', 'ppv')

    return utils.ReturnTuple(args, names)


def feasibility(tau=None, pi=None, lambda_avail=None, coverage_q=None,
                ppv_obs=None):
    """Feasibility verdict for a precision claim.

    Parameters
    ----------
    tau : float
        Reliability target, in (0, 1).
    pi : float
        Base rate, in (0, 1).
    lambda_avail : float
        Discrimination ceiling; positive, possibly ``numpy.inf``.
    coverage_q : float, optional
        Minimum issuance rate, in (0, 1). When given, the ceiling is reduced
        to the model-free coverage cap if that is lower.
    ppv_obs : float, optional
        Observed positive predictive value; adds the prior-free deficit.

    Returns
    -------
    lambda_req : float
        Required discrimination.
    max_ppv : float
        Largest attainable PPV under the effective ceiling.
    tension_psi : float
        Tension ratio under the effective ceiling.
    feasible : bool
        True iff `max_ppv` reaches `tau`.
    lambda_effective : float
        Ceiling used for the verdict.
    coverage_cap : float, None
        Model-free coverage cap, if `coverage_q` was given.
    rescue_pi : float, None
        Minimum base rate for feasibility; None for an infinite ceiling.
    deficit : float, None
        Prior-free deficit, if `ppv_obs` was given.

    Notes
    -----
    * Feasibility is decided from `max_ppv`, not from the tension ratio, so
      the zero ratio of an infinite ceiling is not misread.

    """

    tau = utils.check_open_unit(tau, "tau")
    pi = utils.check_open_unit(pi, "pi")
    lambda_avail = utils.check_discrimination(lambda_avail)

    # coverage constraint
    cap = None
    effective = lambda_avail
    if coverage_q is not None:
        cap = coverage_lambda_cap(pi=pi, q=coverage_q)
        effective = min(lambda_avail, cap)

    lambda_req = lambda_required(tau=tau, pi=pi)
    ppv = max_ppv(pi=pi, lambda_avail=effective)
    psi = tension_ratio(tau=tau, pi=pi, lambda_avail=effective)
    feasible = bool(ppv >= tau)

    rescue = None
    if not np.isinf(effective):
        rescue = rescue_min_base_rate(tau=tau, lambda_avail=effective)

    deficit = None
    if ppv_obs is not None:
        deficit = prior_free_deficit(ppv_obs=ppv_obs, tau=tau)

    args = (lambda_req, ppv, psi, feasible, effective, cap, rescue, deficit)
    names = ('lambda_req', 'max_ppv', 'tension_psi', 'feasible',
             'lambda_effective', 'coverage_cap', 'rescue_pi', 'deficit')

    return utils.ReturnTuple(args, names)
