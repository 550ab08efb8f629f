# -*- coding: utf-8 -*-
"""
certbounds.binormal
-------------------

This module provides the equal-variance binormal score model: AUC and d'
conversion, and the discrimination of threshold rules at stringent
false-positive rates.

Under the model the score satisfies :math:`X | E=0 \\sim N(0, 1)` and
:math:`X | E=1 \\sim N(d', 1)`. A threshold rule accepting :math:`X \\ge t`
has sensitivity :math:`\\Phi(d' - t)` and false-positive rate
:math:`\\Phi(-t)`.

:copyright: (c) 2026 by the certbounds developers
:license: BSD 3-clause, see LICENSE for more details.
"""

# Imports
# 3rd party
import numpy as np
from scipy import special

# local
from . import utils

SQRT2 = np.sqrt(2.)


def normal_cdf(z=None):
    """Standard normal cumulative distribution function.

    Uses the Cephes ``ndtr`` routine, accurate to about 1e-16 relative error
    across the real line, including the far tails.

    Parameters
    ----------
    z : float, array
        Evaluation point(s).

    Returns
    -------
    p : float, array
        :math:`\\Phi(z)`.

    """

    if z is None:
        raise TypeError("Please specify an evaluation point.")

    out = special.ndtr(z)

    if np.ndim(out) == 0:
        return float(out)

    return out


def normal_quantile(p=None):
    """Standard normal quantile function.

    Inverts with the Cephes ``ndtri`` routine, then refines with one Newton
    step against :func:`normal_cdf` so that the pair is internally consistent.

    Parameters
    ----------
    p : float, array
        Probability level(s), in (0, 1).

    Returns
    -------
    z : float, array
        :math:`\\Phi^{-1}(p)`.

    Raises
    ------
    ValueError
        If any `p` lies outside (0, 1).

    """

    if p is None:
        raise TypeError("Please specify a probability level.")

    p = np.asarray(p, dtype=float)

    if np.any(~((p > 0.) & (p < 1.))):
        raise ValueError("p must lie in the open interval (0, 1).")

    z = special.ndtri(p)

    # one Newton step
    pdf = np.exp(-0.5 * z * z) / np.sqrt(2. * np.pi)
    z = z - (special.ndtr(z) - p) / pdf

    if z.ndim == 0:
        return float(z)

    return z


def dprime_from_auc(auc=None):
    """Separability d' of the binormal model with a given AUC.

    Parameters
    ----------
    auc : float
        Area under the ROC curve, in [0.5, 1).

    Returns
    -------
    dprime : float
        :math:`\\sqrt{2} \\Phi^{-1}(AUC)`.

    """

    auc = utils.check_real(auc, "auc")

    if not 0.5 <= auc < 1.:
        raise ValueError("auc must lie in [0.5, 1), got %r." % auc)

    if auc == 0.5:
        return 0.

    return SQRT2 * normal_quantile(auc)


def auc_from_dprime(dprime=None):
    """AUC of the binormal model with separability `dprime`.

    Parameters
    ----------
    dprime : float
        Mean separation in score standard deviations; non-negative.

    Returns
    -------
    auc : float
        :math:`\\Phi(d'/\\sqrt{2})`.

    """

    dprime = utils.check_real(dprime, "dprime")

    if dprime < 0.:
        raise ValueError("dprime must be non-negative, got %r." % dprime)

    return normal_cdf(dprime / SQRT2)


class BinormalModel(object):
    """Equal-variance binormal score model.

    Parameters
    ----------
    dprime : float
        Mean separation between the two classes, in score standard
        deviations; non-negative.

    """

    def __init__(self, dprime=None):

        dprime = utils.check_real(dprime, "dprime")

        if dprime < 0.:
            raise ValueError("dprime must be non-negative, got %r." % dprime)

        self.dprime = dprime

    @classmethod
    def from_auc(cls, auc=None):
        """Build the model with a given AUC.

        Parameters
        ----------
        auc : float
            Area under the ROC curve, in [0.5, 1).

        Returns
        -------
        model : BinormalModel
            The model with :math:`d' = \\sqrt{2}\\Phi^{-1}(AUC)`.

        """

        return cls(dprime=dprime_from_auc(auc))

    @property
    def auc(self):
        """Area under the ROC curve."""

        return auc_from_dprime(self.dprime)

    def __repr__(self):
        return "BinormalModel(dprime=%r)" % self.dprime


def lambda_at_threshold(model=None, t=None):
    """Discrimination of the threshold rule :math:`1\\{X \\ge t\\}`.

    .. math::

        \\Lambda(t) = \\frac{\\Phi(d' - t)}{\\Phi(-t)}

    Parameters
    ----------
    model : BinormalModel
        Score model.
    t : float, array
        Threshold(s), in score units.

    Returns
    -------
    lambda_ : float, array
        Discrimination ratio at each threshold.

    Notes
    -----
    * The ratio is evaluated as a difference of ``log_ndtr`` values, which
      stays accurate where both tails underflow.

    """

    if model is None:
        raise TypeError("Please specify a binormal model.")

    if t is None:
        raise TypeError("Please specify a threshold.")

    t = np.asarray(t, dtype=float)

    if not np.all(np.isfinite(t)):
        raise ValueError("Thresholds must be finite.")

    out = np.exp(special.log_ndtr(model.dprime - t) - special.log_ndtr(-t))

    if out.ndim == 0:
        return float(out)

    return out


def lambda_at_fpr(model=None, fpr=None):
    """Threshold operating point with a prescribed false-positive rate.

    Parameters
    ----------
    model : BinormalModel
        Score model.
    fpr : float
        Target false-positive rate, in (0, 1).

    Returns
    -------
    threshold : float
        Threshold :math:`t = -\\Phi^{-1}(F)`.
    sensitivity : float
        :math:`\\Phi(d' - t)`.
    fpr : float
        :math:`\\Phi(-t)`.
    discrimination : float
        Sensitivity over false-positive rate.

    """

    if model is None:
        raise TypeError("Please specify a binormal model.")

    fpr = utils.check_open_unit(fpr, "fpr")

    t = -normal_quantile(fpr)
    sensitivity = normal_cdf(model.dprime - t)
    realized = normal_cdf(-t)
    discrimination = lambda_at_threshold(model, t)

    args = (t, sensitivity, realized, discrimination)
    names = ('threshold', 'sensitivity', 'fpr', 'discrimination')

    return utils.ReturnTuple(args, names)


def roc_points(model=None, fprs=None):
    """Operating points at several false-positive rates.

    Parameters
    ----------
    model : BinormalModel
        Score model.
    fprs : array
        False-positive rates, each in (0, 1).

    Returns
    -------
    threshold : array
        Thresholds.
    sensitivity : array
        Sensitivities.
    fpr : array
        Realized false-positive rates.
    discrimination : array
        Discrimination ratios.

    """

    if fprs is None:
        raise TypeError("Please specify the false-positive rates.")

    points = [lambda_at_fpr(model, f) for f in np.atleast_1d(fprs)]

    args = tuple(np.array([p[i] for p in points]) for i in range(4))
    names = ('threshold', 'sensitivity', 'fpr', 'discrimination')

    return utils.ReturnTuple(args, names)


def sample_scores(model=None, size=None, random_state=None):
    """Draw scores from both classes of a binormal model.

    Parameters
    ----------
    model : BinormalModel
        Score model.
    size : int
        Number of scores per class.
    random_state : None, int, numpy.random.Generator, optional
        Seed for the random number generator.

    Returns
    -------
    scores0 : array
        Scores given failure (E = 0).
    scores1 : array
        Scores given success (E = 1).

    """

    if model is None:
        raise TypeError("Please specify a binormal model.")

    size = utils.check_positive_int(size, "size")
    rng = utils.get_rng(random_state)

    scores0 = rng.standard_normal(size)
    scores1 = model.dprime + rng.standard_normal(size)

    return utils.ReturnTuple((scores0, scores1), ('scores0', 'scores1'))
