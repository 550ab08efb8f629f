# -*- coding: utf-8 -*-
"""
certbounds.moments
------------------

This module provides constructive counterexamples to moment-based
certification: pairs of distributions on [0, 1] whose first M moments match
a target within epsilon, while the ratio of their r-th moments grows without
bound as r increases.

Two constructions are available:
    * Mean zero: a point mass at a small location against a mixture that
      moves a little weight to a larger location;
    * Mean in (0, 1): a shrunken copy of a base distribution against a
      mixture that adds a point mass just beyond the shrunken support.

Moments are computed exactly from moment oracles of the base distributions,
never from samples.

:copyright: (c) 2026 by the certbounds developers
:license: BSD 3-clause, see LICENSE for more details.
"""

# Imports
# built-in
import logging

# 3rd party
import numpy as np
from scipy.special import gammaln, logsumexp

# local
from . import utils

logger = logging.getLogger(__name__)

# Globals
WEIGHT_TOL = 1e-12
LOG_MAX = 709.
DEFAULT_LOG_CAP = 700.
DEFAULT_MOMENTS = 5


class PreconditionError(ValueError):
    """Parameters violate the hypotheses of a construction.

    Parameters
    ----------
    violations : list
        Violated inequalities, in human-readable form.

    """

    def __init__(self, violations):

        self.violations = list(violations)
        super(PreconditionError, self).__init__(
            "; ".join("%s violated" % v for v in self.violations))


class UniformBase(object):
    """Uniform distribution on [0, 1]."""

    name = 'uniform'

    def moment(self, m):
        return 1. / (m + 1.)

    def log_moment(self, m):
        return -np.log(m + 1.)

    def rvs(self, size=None, random_state=None):
        return utils.get_rng(random_state).uniform(0., 1., size)

    def to_dict(self):
        return {"name": self.name}


class BetaBase(object):
    """Beta distribution on [0, 1].

    Parameters
    ----------
    alpha : float
        First shape parameter; positive.
    beta : float
        Second shape parameter; positive.

    """

    name = 'beta'

    def __init__(self, alpha=None, beta=None):

        self.alpha = utils.check_real(alpha, "alpha")
        self.beta = utils.check_real(beta, "beta")

        if self.alpha <= 0. or self.beta <= 0.:
            raise ValueError("Beta shape parameters must be positive.")

    def log_moment(self, m):
        a, b = self.alpha, self.beta
        return gammaln(a + m) + gammaln(a + b) - gammaln(a) - gammaln(a + b + m)

    def moment(self, m):
        return float(np.exp(self.log_moment(m)))

    def rvs(self, size=None, random_state=None):
        return utils.get_rng(random_state).beta(self.alpha, self.beta, size)

    def to_dict(self):
        return {"name": self.name, "alpha": self.alpha, "beta": self.beta}


class PointBase(object):
    """Point mass at `loc` in [0, 1]."""

    name = 'point'

    def __init__(self, loc=None):

        self.loc = utils.check_closed_unit(loc, "loc")

    def moment(self, m):
        return self.loc ** m

    def log_moment(self, m):
        if self.loc == 0.:
            return -np.inf
        return m * np.log(self.loc)

    def rvs(self, size=None, random_state=None):
        return np.full(size, self.loc)

    def to_dict(self):
        return {"name": self.name, "loc": self.loc}


def make_base(name=None, **kwargs):
    """Build a base distribution by name.

    Parameters
    ----------
    name : str
        One of 'uniform', 'beta' (needs `alpha`, `beta`) or 'point' (needs
        `loc`).

    Returns
    -------
    base : object
        Base distribution with a moment oracle and a sampler.

    """

    if name is None:
        raise TypeError("Please specify a base distribution.")

    if name == 'uniform':
        return UniformBase()
    elif name == 'beta':
        return BetaBase(kwargs.get('alpha'), kwargs.get('beta'))
    elif name == 'point':
        return PointBase(kwargs.get('loc'))

    raise ValueError("Unknown base distribution %r." % name)


class PointMixture(object):
    """Mixture of point masses and an optional scaled base distribution.

    Parameters
    ----------
    components : list, optional
        Pairs (location in [0, 1], weight in (0, 1]).
    scaled : tuple, optional
        Triple (scale in (0, 1), base, weight): the law of scale * U with
        U drawn from `base`.

    Raises
    ------
    ValueError
        If locations or weights are out of range or weights do not sum to 1
        within 1e-12.

    """

    def __init__(self, components=None, scaled=None):

        components = list(components or [])
        if not components and scaled is None:
            raise TypeError("Please specify at least one component.")

        self.locs = np.array([utils.check_closed_unit(c[0], "location")
                              for c in components])
        self.weights = np.array([utils.check_closed_unit(c[1], "weight")
                                 for c in components])

        if np.any(self.weights <= 0.):
            raise ValueError("Component weights must be positive.")

        total = self.weights.sum()
        if scaled is not None:
            scale, base, weight = scaled
            scale = utils.check_open_unit(scale, "scale")
            weight = utils.check_closed_unit(weight, "weight")
            if weight <= 0.:
                raise ValueError("The scaled component weight must be "
                                 "positive.")
            self.scaled = (scale, base, weight)
            total += weight
        else:
            self.scaled = None

        if abs(total - 1.) > WEIGHT_TOL:
            raise ValueError("Weights must sum to 1, got %r." % total)

    def moment(self, m):
        out = float(np.dot(self.weights, self.locs ** m))
        if self.scaled is not None:
            scale, base, weight = self.scaled
            out += weight * scale ** m * base.moment(m)
        return out

    def log_moment(self, m):
        terms = []
        for loc, w in zip(self.locs, self.weights):
            if loc > 0.:
                terms.append(np.log(w) + m * np.log(loc))
        if self.scaled is not None:
            scale, base, weight = self.scaled
            terms.append(np.log(weight) + m * np.log(scale)
                         + base.log_moment(m))
        if not terms:
            return -np.inf
        return float(logsumexp(terms))

    def rvs(self, size=None, random_state=None):
        """Draw samples from the mixture."""

        size = utils.check_positive_int(size, "size")
        rng = utils.get_rng(random_state)

        weights = list(self.weights)
        if self.scaled is not None:
            weights.append(self.scaled[2])
        which = rng.choice(len(weights), size=size, p=weights)

        out = np.empty(size)
        for i, loc in enumerate(self.locs):
            out[which == i] = loc
        if self.scaled is not None:
            scale, base, _ = self.scaled
            mask = which == len(self.locs)
            out[mask] = scale * base.rvs(int(mask.sum()), rng)

        return out

    def to_dict(self):
        out = {"components": [[float(l), float(w)] for l, w in
                              zip(self.locs, self.weights)]}
        if self.scaled is not None:
            scale, base, weight = self.scaled
            out["scaled"] = {"scale": scale, "base": base.to_dict(),
                             "weight": weight}
        return out


def moments(dist=None, m=None):
    """Exact m-th moment of a mixture.

    Parameters
    ----------
    dist : PointMixture
        Distribution on [0, 1].
    m : int
        Moment order; positive.

    Returns
    -------
    moment : float
        :math:`E[P^m]`.

    """

    if dist is None:
        raise TypeError("Please specify a distribution.")

    m = utils.check_positive_int(m, "m")

    return dist.moment(m)


def log_moments(dist=None, m=None):
    """Logarithm of the m-th moment, computed in log space.

    Parameters
    ----------
    dist : PointMixture
        Distribution on [0, 1].
    m : int
        Moment order; positive.

    Returns
    -------
    log_moment : float
        :math:`\\log E[P^m]`; ``-numpy.inf`` when all mass sits at 0.

    """

    if dist is None:
        raise TypeError("Please specify a distribution.")

    m = utils.check_positive_int(m, "m")

    return dist.log_moment(m)


class MomentPair(object):
    """Pair of distributions with their construction parameters.

    Unpacks as ``d1, d2 = pair``.

    Parameters
    ----------
    d1 : PointMixture
        Reference distribution.
    d2 : PointMixture
        Perturbed distribution.
    case : int, optional
        Construction used (1 or 2); None for a user-supplied pair.
    params : dict, optional
        Construction parameters.
    target : object, optional
        Distribution whose moments are matched; defaults to `d1`.

    """

    def __init__(self, d1=None, d2=None, case=None, params=None, target=None):

        if d1 is None or d2 is None:
            raise TypeError("Please specify both distributions.")

        self.d1 = d1
        self.d2 = d2
        self.case = case
        self.params = dict(params or {})
        self.target = d1 if target is None else target

    def __iter__(self):
        return iter((self.d1, self.d2))

    def log_lower_bound(self, r):
        """Closed-form log lower bound of the r-th moment ratio, if any."""

        p = self.params
        if self.case == 1:
            eta = p['eta']
            return float(np.logaddexp(np.log1p(-eta),
                                      np.log(eta) + r * np.log(p['b'] / p['a'])))
        elif self.case == 2:
            delta = p['delta']
            return float(np.log(p['eta'])
                         + r * np.log((1. - delta) / (1. - 2. * delta)))

        return None

    def default_r_list(self, n_moments, log_cap=DEFAULT_LOG_CAP):
        """Orders M+1, 2M, 10M and 100M, kept while the bound stays finite."""

        out = []
        for r in sorted({n_moments + 1, 2 * n_moments, 10 * n_moments,
                         100 * n_moments}):
            bound = self.log_lower_bound(r)
            if bound is not None and bound > log_cap:
                break
            out.append(r)

        return out


def construct_case1(a=None, b=None, eta=None, epsilon=None):
    """Pair with vanishing target moments (mean zero).

    Builds :math:`D_1 = \\delta_a` and
    :math:`D_2 = (1-\\eta)\\delta_a + \\eta\\delta_b`. Every moment of both
    is at most epsilon, while
    :math:`E_{D_2}[P^r]/E_{D_1}[P^r] = (1-\\eta) + \\eta (b/a)^r`.

    Parameters
    ----------
    a : float
        Common location, with :math:`0 < a \\le \\epsilon/2`.
    b : float
        Far location, with :math:`a < b < 1`.
    eta : float
        Weight moved to `b`, in :math:`(0, \\epsilon/2)`.
    epsilon : float
        Moment tolerance, in (0, 1).

    Returns
    -------
    pair : MomentPair
        The two distributions.

    Raises
    ------
    PreconditionError
        Listing every violated inequality.

    """

    a = utils.check_real(a, "a")
    b = utils.check_real(b, "b")
    eta = utils.check_real(eta, "eta")
    epsilon = utils.check_real(epsilon, "epsilon")

    checks = [
        (0. < epsilon < 1., "0 < ε < 1"),
        (0. < a, "0 < a"),
        (a < b, "a < b"),
        (b < 1., "b < 1"),
        (a <= epsilon / 2., "a ≤ ε/2"),
        (0. < eta, "0 < η"),
        (eta < epsilon / 2., "η < ε/2"),
    ]
    violations = [text for ok, text in checks if not ok]
    if violations:
        raise PreconditionError(violations)

    d1 = PointMixture([(a, 1.)])
    d2 = PointMixture([(a, 1. - eta), (b, eta)])
    params = dict(a=a, b=b, eta=eta, epsilon=epsilon)

    return MomentPair(d1, d2, case=1, params=params, target=PointBase(0.))


def construct_case2(base=None, n_moments=None, epsilon=None):
    """Pair matching the first M moments of a base law with mean in (0, 1).

    With :math:`\\delta = \\epsilon/(4M)` and :math:`\\eta = \\epsilon/2`,
    builds :math:`D_1` as the law of :math:`(1-2\\delta) U`, U drawn from
    `base`, and :math:`D_2 = (1-\\eta) D_1 + \\eta \\delta_{1-\\delta}`.

    Parameters
    ----------
    base : object
        Base distribution on [0, 1] with a moment oracle.
    n_moments : int
        Number M of matched moments.
    epsilon : float
        Moment tolerance, in (0, 1).

    Returns
    -------
    pair : MomentPair
        The two distributions; the target is `base`.

    Raises
    ------
    PreconditionError
        If epsilon is out of range or the base mean is 0 (handled by
        :func:`construct_case1`) or 1.

    """

    if base is None:
        raise TypeError("Please specify a base distribution.")

    n_moments = utils.check_positive_int(n_moments, "n_moments")
    epsilon = utils.check_real(epsilon, "epsilon")

    if not 0. < epsilon < 1.:
        raise PreconditionError(["0 < ε < 1"])

    mu1 = base.moment(1)
    if mu1 <= 0.:
        raise PreconditionError(["μ₁ > 0 (μ₁ = 0 belongs to Case 1)"])
    if mu1 >= 1.:
        raise PreconditionError(["μ₁ < 1"])

    delta = epsilon / (4. * n_moments)
    eta = epsilon / 2.

    d1 = PointMixture(scaled=(1. - 2. * delta, base, 1.))
    d2 = PointMixture([(1. - delta, eta)],
                      scaled=(1. - 2. * delta, base, 1. - eta))
    params = dict(n_moments=n_moments, epsilon=epsilon, delta=delta, eta=eta,
                  base=base.to_dict())

    return MomentPair(d1, d2, case=2, params=params, target=base)


def random_case1(random_state=None):
    """Construction with parameters drawn to satisfy its hypotheses.

    Epsilon is drawn from (0.05, 0.9), then a, b and eta inside their
    admissible ranges.

    Parameters
    ----------
    random_state : None, int, numpy.random.Generator, optional
        Seed for the random number generator.

    Returns
    -------
    pair : MomentPair
        A valid mean-zero construction.

    """

    logger.debug("random mean-zero construction, random_state=%r",
                 random_state)
    rng = utils.get_rng(random_state)

    epsilon = rng.uniform(0.05, 0.9)
    a = epsilon / 2. * (1. - rng.random())
    while True:
        b = rng.uniform(a, 1.)
        if a < b < 1.:
            break
    while True:
        eta = rng.uniform(0., epsilon / 2.)
        if 0. < eta < epsilon / 2.:
            break

    return construct_case1(a, b, eta, epsilon)


def random_case2(random_state=None, base=None, max_moments=10):
    """Mean-in-(0, 1) construction with random epsilon and M.

    Parameters
    ----------
    random_state : None, int, numpy.random.Generator, optional
        Seed for the random number generator.
    base : object, optional
        Base distribution; uniform by default.
    max_moments : int, optional
        Largest M drawn.

    Returns
    -------
    pair : MomentPair
        A valid construction.

    """

    logger.debug("random mean-in-(0, 1) construction, random_state=%r",
                 random_state)
    rng = utils.get_rng(random_state)

    if base is None:
        base = UniformBase()

    epsilon = rng.uniform(0.05, 0.9)
    n_moments = int(rng.integers(1, max_moments + 1))

    return construct_case2(base, n_moments, epsilon)


def verify_pair(pair=None, n_moments=None, epsilon=None, r_list=None):
    """Check moment matching and tail divergence of a pair.

    Parameters
    ----------
    pair : MomentPair
        Pair to check.
    n_moments : int, optional
        Number M of moments to compare; taken from the construction when
        available, else 5.
    epsilon : float, optional
        Tolerance; taken from the construction when available.
    r_list : list, optional
        Orders of the tail moment ratio; defaults to
        :meth:`MomentPair.default_r_list`; evaluated in increasing order.

    Returns
    -------
    target_moments : list
        Moments 1..M of the target.
    moments_d1 : list
        Moments 1..M of the first distribution.
    moments_d2 : list
        Moments 1..M of the second distribution.
    max_deviation : float
        Largest absolute deviation from the target.
    r_values : list
        Orders at which ratios are evaluated.
    ratios : list
        :math:`E_{D_2}[P^r]/E_{D_1}[P^r]`; None where it exceeds the float
        range.
    log_ratios : list
        Logarithms of the ratios.
    lower_bounds : list
        Closed-form lower bounds; None where unavailable or out of range.
    log_lower_bounds : list
        Logarithms of the lower bounds.
    valid : bool
        No deviation above epsilon and no ratio below its bound.
    divergent : bool
        At least two orders, with strictly increasing ratios.

    """

    if not isinstance(pair, MomentPair):
        raise TypeError("Please specify a MomentPair.")

    if n_moments is None:
        n_moments = pair.params.get('n_moments', DEFAULT_MOMENTS)
    n_moments = utils.check_positive_int(n_moments, "n_moments")

    if epsilon is None:
        epsilon = pair.params.get('epsilon')
    epsilon = utils.check_real(epsilon, "epsilon")

    if r_list is None:
        r_list = pair.default_r_list(n_moments)
    r_list = sorted({utils.check_positive_int(r, "r") for r in r_list})

    d1, d2 = pair
    orders = range(1, n_moments + 1)
    target = [float(pair.target.moment(m)) for m in orders]
    m1 = [d1.moment(m) for m in orders]
    m2 = [d2.moment(m) for m in orders]
    max_dev = float(np.max(np.abs(np.r_[np.subtract(m1, target),
                                        np.subtract(m2, target)])))

    def linear(value):
        if value is None or value > LOG_MAX:
            return None
        return float(np.exp(value))

    log_ratios = [d2.log_moment(r) - d1.log_moment(r) for r in r_list]
    log_bounds = [pair.log_lower_bound(r) for r in r_list]

    below = [lr < lb - 1e-9 * max(1., abs(lb))
             for lr, lb in zip(log_ratios, log_bounds) if lb is not None]

    valid = bool(max_dev <= epsilon * (1. + 1e-12) and not any(below))
    divergent = bool(len(r_list) >= 2
                     and np.all(np.diff(log_ratios) > 0.))

    args = (target, m1, m2, max_dev, list(r_list),
            [linear(v) for v in log_ratios], [float(v) for v in log_ratios],
            [linear(v) for v in log_bounds], log_bounds, valid, divergent)
    names = ('target_moments', 'moments_d1', 'moments_d2', 'max_deviation',
             'r_values', 'ratios', 'log_ratios', 'lower_bounds',
             'log_lower_bounds', 'valid', 'divergent')

    return utils.ReturnTuple(args, names)
