# -*- coding: utf-8 -*-
"""
certbounds.discrete
-------------------

This module provides an exact laboratory on finite signal alphabets: the
likelihood ratio between the success- and failure-conditional laws of a
rating-time signal, its maximum (the discrimination ceiling), evaluation of
randomized decision rules, the coverage-constrained ceiling, pushforwards
through deterministic maps, and brute-force oracles that check all of these
by enumeration.

A rule is an array of acceptance probabilities aligned with the symbols of
its space; deterministic rules have entries in {0, 1}.

:copyright: (c) 2026 by the certbounds developers
:license: BSD 3-clause, see LICENSE for more details.
"""

# Imports
# built-in
import itertools
import logging
from collections import OrderedDict

# 3rd party
import numpy as np

# local
from . import bounds, utils

logger = logging.getLogger(__name__)

# Globals
PMF_TOL = 1e-12
TIE_RTOL = 1e-12
MAX_ENUM_SYMBOLS = 12
MAX_GRID_SYMBOLS = 6


class OverlapError(ValueError):
    """The success law puts mass where the failure law has none.

    Parameters
    ----------
    symbol : str
        First offending symbol.

    """

    def __init__(self, symbol):

        self.symbol = symbol
        super(OverlapError, self).__init__(
            "Overlap condition violated at symbol %r: p0 is zero but p1 is "
            "positive." % symbol)


class InadmissibleRuleError(ValueError):
    """The rule never accepts."""


class DiscreteSignalSpace(object):
    """Finite signal alphabet with its two class-conditional laws.

    Parameters
    ----------
    symbols : list
        Ordered symbol identifiers; converted to str.
    p0 : array
        Probability mass function of the signal given failure (E = 0).
    p1 : array
        Probability mass function of the signal given success (E = 1).

    Raises
    ------
    ValueError
        If lengths disagree, symbols repeat, entries are negative, or a pmf
        does not sum to 1 within 1e-12.

    Notes
    -----
    * The overlap condition (p0 = 0 implies p1 = 0) is checked by
      :meth:`check_overlap`, which every ratio-based operation calls.

    """

    def __init__(self, symbols=None, p0=None, p1=None):

        # check inputs
        if symbols is None:
            raise TypeError("Please specify the signal symbols.")

        if p0 is None or p1 is None:
            raise TypeError("Please specify both conditional pmfs.")

        symbols = [str(s) for s in symbols]
        p0 = np.array(p0, dtype=float)
        p1 = np.array(p1, dtype=float)

        if len(symbols) == 0:
            raise ValueError("A signal space needs at least one symbol.")

        if len(set(symbols)) != len(symbols):
            raise ValueError("Symbols must be unique.")

        for name, pmf in (("p0", p0), ("p1", p1)):
            if pmf.shape != (len(symbols), ):
                raise ValueError("%s must have one entry per symbol." % name)
            if np.any(~np.isfinite(pmf)) or np.any(pmf < 0.):
                raise ValueError("%s entries must be finite and non-negative."
                                 % name)
            if abs(pmf.sum() - 1.) > PMF_TOL:
                raise ValueError("%s must sum to 1, got %r." % (name, pmf.sum()))

        self.symbols = symbols
        self.p0 = p0
        self.p1 = p1

    @classmethod
    def from_dict(cls, data):
        """Build a space from its JSON form.

        Parameters
        ----------
        data : dict
            Mapping with aligned "symbols", "p0" and "p1" lists.

        Returns
        -------
        space : DiscreteSignalSpace
            The signal space.

        """

        try:
            return cls(data["symbols"], data["p0"], data["p1"])
        except KeyError as err:
            raise ValueError("Signal space is missing the %s field." % err)

    @classmethod
    def from_counts(cls, symbols, counts0, counts1):
        """Build a space from class-conditional counts.

        Parameters
        ----------
        symbols : list
            Symbol identifiers.
        counts0 : array
            Counts per symbol among failures.
        counts1 : array
            Counts per symbol among successes.

        Returns
        -------
        space : DiscreteSignalSpace
            Space with empirical pmfs.

        """

        counts0 = np.asarray(counts0, dtype=float)
        counts1 = np.asarray(counts1, dtype=float)

        if counts0.sum() <= 0 or counts1.sum() <= 0:
            raise ValueError("Both classes need at least one observation.")

        return cls(symbols, counts0 / counts0.sum(), counts1 / counts1.sum())

    def to_dict(self):
        """Return the JSON form of the space."""

        return OrderedDict([("symbols", list(self.symbols)),
                            ("p0", self.p0.tolist()),
                            ("p1", self.p1.tolist())])

    @property
    def size(self):
        """Number of symbols."""

        return len(self.symbols)

    @property
    def support(self):
        """Boolean mask of symbols with positive failure-law mass."""

        return self.p0 > 0.

    def check_overlap(self):
        """Check absolute continuity of p1 with respect to p0.

        Raises
        ------
        OverlapError
            At the first symbol with p0 zero and p1 positive.

        """

        bad = (~self.support) & (self.p1 > 0.)
        if np.any(bad):
            raise OverlapError(self.symbols[int(np.argmax(bad))])

    def ratios(self):
        """Likelihood ratio per symbol as an array; NaN off the support."""

        self.check_overlap()

        out = np.full(self.size, np.nan)
        sup = self.support
        out[sup] = self.p1[sup] / self.p0[sup]

        return out

    def __repr__(self):
        return "DiscreteSignalSpace(symbols=%r, p0=%r, p1=%r)" % (
            self.symbols, self.p0.tolist(), self.p1.tolist())


def _check_space(space):
    if space is None:
        raise TypeError("Please specify a signal space.")

    if not isinstance(space, DiscreteSignalSpace):
        raise TypeError("space must be a DiscreteSignalSpace.")


def _check_rule(space, rule):
    if rule is None:
        raise TypeError("Please specify a decision rule.")

    rule = np.asarray(rule, dtype=float)

    if rule.shape != (space.size, ):
        raise ValueError("The rule must have one acceptance probability per "
                         "symbol.")

    if np.any(~np.isfinite(rule)) or np.any(rule < 0.) or np.any(rule > 1.):
        raise ValueError("Acceptance probabilities must lie in [0, 1].")

    return rule


def likelihood_ratios(space=None):
    """Likelihood ratio :math:`L(x) = p_1(x)/p_0(x)` on the support of p0.

    Parameters
    ----------
    space : DiscreteSignalSpace
        Signal space.

    Returns
    -------
    ratios : OrderedDict
        Symbol to likelihood ratio, in symbol order; symbols with p0 = 0 (and
        hence p1 = 0) are excluded.

    Raises
    ------
    OverlapError
        If the overlap condition fails.

    """

    _check_space(space)

    lr = space.ratios()

    return OrderedDict((s, float(v)) for s, v in zip(space.symbols, lr)
                       if not np.isnan(v))


def esssup_lambda(space=None):
    """Discrimination ceiling of a signal space.

    Parameters
    ----------
    space : DiscreteSignalSpace
        Signal space.

    Returns
    -------
    ceiling : float
        Maximum of the likelihood ratio over the support of p0.

    """

    _check_space(space)

    return float(np.nanmax(space.ratios()))


def evaluate_rule(space=None, rule=None, pi=None):
    """Metrics of a randomized decision rule.

    Parameters
    ----------
    space : DiscreteSignalSpace
        Signal space.
    rule : array
        Acceptance probability per symbol, in [0, 1].
    pi : float
        Base rate, in (0, 1).

    Returns
    -------
    sensitivity : float
        :math:`S = \\sum_x p_1(x) \\alpha(x)`.
    fpr : float
        :math:`F = \\sum_x p_0(x) \\alpha(x)`.
    discrimination : float, None
        S/F when F > 0, else None.
    ppv : float
        Positive predictive value.
    issuance : float
        Unconditional issuance probability :math:`\\pi S + (1 - \\pi) F`.

    Raises
    ------
    InadmissibleRuleError
        If the rule never accepts.

    """

    _check_space(space)
    rule = _check_rule(space, rule)
    pi = utils.check_open_unit(pi, "pi")

    sensitivity = float(np.dot(space.p1, rule))
    fpr = float(np.dot(space.p0, rule))
    issuance = pi * sensitivity + (1. - pi) * fpr

    if issuance <= 0.:
        raise InadmissibleRuleError("The rule never accepts.")

    discrimination = sensitivity / fpr if fpr > 0. else None
    ppv = bounds.ppv_from_rates(min(sensitivity, 1.), min(fpr, 1.), pi)

    args = (sensitivity, fpr, discrimination, ppv, issuance)
    names = ('sensitivity', 'fpr', 'discrimination', 'ppv', 'issuance')

    return utils.ReturnTuple(args, names)


def near_optimal_rule(space=None, epsilon=None):
    """Deterministic rule within `epsilon` of the discrimination ceiling.

    Accepts exactly the symbols with :math:`L(x) \\ge \\sup L - \\epsilon`.

    Parameters
    ----------
    space : DiscreteSignalSpace
        Signal space.
    epsilon : float
        Positive slack.

    Returns
    -------
    rule : array
        0/1 acceptance vector.

    """

    _check_space(space)
    epsilon = utils.check_real(epsilon, "epsilon")

    if epsilon <= 0.:
        raise ValueError("epsilon must be positive, got %r." % epsilon)

    lr = space.ratios()
    top = np.nanmax(lr)

    with np.errstate(invalid='ignore'):
        rule = (lr >= top - epsilon).astype(float)

    return rule


def max_ppv_exact(space=None, pi=None):
    """Supremum of PPV over admissible rules on a signal space.

    Parameters
    ----------
    space : DiscreteSignalSpace
        Signal space.
    pi : float
        Base rate, in (0, 1).

    Returns
    -------
    ppv : float
        :func:`certbounds.bounds.max_ppv` at the space's ceiling.

    """

    return bounds.max_ppv(pi=pi, lambda_avail=esssup_lambda(space))


def _tie_groups(lr, support):
    # symbol indices grouped by equal likelihood ratio, descending
    idx = np.flatnonzero(support)
    order = idx[np.argsort(-lr[idx], kind='mergesort')]

    groups = []
    for i in order:
        if groups and np.isclose(lr[i], lr[groups[-1][0]], rtol=TIE_RTOL,
                                 atol=0.):
            groups[-1].append(i)
        else:
            groups.append([i])

    return groups


def coverage_constrained_ceiling(space=None, pi=None, q=None):
    """Largest discrimination among rules issuing with probability >= `q`.

    Symbols are sorted by descending likelihood ratio (ties merged) and
    accepted in that order until the issuance probability reaches `q`, the
    marginal group being accepted fractionally.

    Parameters
    ----------
    space : DiscreteSignalSpace
        Signal space.
    pi : float
        Base rate, in (0, 1).
    q : float
        Minimum issuance probability, in (0, 1].

    Returns
    -------
    ceiling : float
        Coverage-constrained discrimination ceiling.
    rule : array
        Witness rule attaining it.
    marginal : int, None
        Index of the fractionally accepted symbol group's first symbol, if
        any.

    Notes
    -----
    * For a fixed issuance the problem is a fractional knapsack whose value
      density :math:`L/(\\pi L + 1 - \\pi)` increases with L, so filling by
      descending L is optimal; the brute-force grid oracle confirms it.

    """

    _check_space(space)
    pi = utils.check_open_unit(pi, "pi")
    q = utils.check_real(q, "q")

    if not 0. < q <= 1.:
        raise ValueError("q must lie in (0, 1], got %r." % q)

    lr = space.ratios()
    mass = pi * space.p1 + (1. - pi) * space.p0
    rule = np.zeros(space.size)
    marginal = None

    filled = 0.
    for group in _tie_groups(lr, space.support):
        gmass = mass[group].sum()
        if filled + gmass < q:
            rule[group] = 1.
            filled += gmass
            continue
        frac = min(1., (q - filled) / gmass)
        if frac > 1. - 1e-12:
            frac = 1.
        rule[group] = frac
        if frac < 1.:
            marginal = int(group[0])
        break

    ev = evaluate_rule(space, rule, pi)

    args = (ev['discrimination'], rule, marginal)
    names = ('ceiling', 'rule', 'marginal')

    return utils.ReturnTuple(args, names)


def pushforward(space=None, mapping=None):
    """Law of a deterministic transformation of the signal.

    Parameters
    ----------
    space : DiscreteSignalSpace
        Signal space of X.
    mapping : dict, callable
        Total map from symbols of X to symbols of Y = g(X).

    Returns
    -------
    image : DiscreteSignalSpace
        Space of Y, with symbols in order of first appearance;
        :math:`p_i'(y) = \\sum_{g(x) = y} p_i(x)`.

    Notes
    -----
    * The likelihood ratio of Y equals the p0-weighted average of the
      likelihood ratio of X over each fibre, so the ceiling cannot grow.

    """

    _check_space(space)

    if mapping is None:
        raise TypeError("Please specify the mapping.")

    if callable(mapping):
        fcn = mapping
    else:
        missing = [s for s in space.symbols if s not in mapping]
        if missing:
            raise ValueError("The mapping is not total; missing %r."
                             % missing)
        fcn = mapping.__getitem__

    image = OrderedDict()
    for i, s in enumerate(space.symbols):
        y = str(fcn(s))
        acc = image.setdefault(y, [0., 0.])
        acc[0] += space.p0[i]
        acc[1] += space.p1[i]

    symbols = list(image.keys())
    p0 = np.array([v[0] for v in image.values()])
    p1 = np.array([v[1] for v in image.values()])

    return DiscreteSignalSpace(symbols, p0, p1)


def enumerate_rules(space=None):
    """All deterministic rules on a signal space.

    Parameters
    ----------
    space : DiscreteSignalSpace
        Signal space with at most 12 symbols.

    Returns
    -------
    rules : array
        :math:`2^n \\times n` matrix of 0/1 acceptance vectors, including the
        empty rule in row 0.

    """

    _check_space(space)

    if space.size > MAX_ENUM_SYMBOLS:
        raise ValueError("Exhaustive enumeration is limited to %d symbols."
                         % MAX_ENUM_SYMBOLS)

    n = space.size
    codes = np.arange(2 ** n)[:, None]

    return ((codes >> np.arange(n)) & 1).astype(float)


def _grid_levels(step):
    # acceptance levels searched by the grid oracle, spacing 1/round(1/step)
    return np.linspace(0., 1., max(1, int(round(1. / step))) + 1)


def _grid_max(space, pi, q, step):
    # blockwise maximum of S/F over an acceptance grid, subject to issuance >= q
    n = space.size
    levels = _grid_levels(step)
    inner = min(n, 3)
    outer = n - inner

    mesh = np.array(list(itertools.product(levels, repeat=inner)))
    s_in = mesh @ space.p1[outer:]
    f_in = mesh @ space.p0[outer:]

    best = -np.inf
    best_rule = None
    for head in itertools.product(levels, repeat=outer):
        head = np.asarray(head, dtype=float)
        s = s_in + np.dot(head, space.p1[:outer])
        f = f_in + np.dot(head, space.p0[:outer])
        issuance = pi * s + (1. - pi) * f
        ok = (issuance >= q - 1e-12) & (f > 0.)
        if not np.any(ok):
            continue
        lam = np.where(ok, s / np.where(f > 0., f, 1.), -np.inf)
        k = int(np.argmax(lam))
        if lam[k] > best:
            best = float(lam[k])
            best_rule = np.concatenate([head, mesh[k]])

    return best, best_rule


def brute_force_oracle(space=None, pi=None, q=None, step=0.05):
    """Exhaustive maximum of discrimination and PPV.

    Without `q`, enumerates all :math:`2^n` deterministic rules (n <= 12).
    With `q`, searches an acceptance grid on every symbol (n <= 6), keeping
    rules that issue with probability at least `q`. The grid levels are the
    multiples of 1/round(1/step) in [0, 1].

    Parameters
    ----------
    space : DiscreteSignalSpace
        Signal space.
    pi : float
        Base rate, in (0, 1).
    q : float, optional
        Minimum issuance probability.
    step : float, optional
        Grid spacing for the constrained search.

    Returns
    -------
    max_lambda : float
        Largest discrimination found.
    max_ppv : float
        Largest PPV found.
    rule : array
        A maximizing rule.

    """

    _check_space(space)
    pi = utils.check_open_unit(pi, "pi")
    space.check_overlap()

    if q is None:
        rules = enumerate_rules(space)
        s = rules @ space.p1
        f = rules @ space.p0
        ok = f > 0.
        if not np.any(ok):
            raise InadmissibleRuleError("No rule has a positive false-positive "
                                        "rate.")
        lam = np.where(ok, s / np.where(ok, f, 1.), -np.inf)
        k = int(np.argmax(lam))
        max_lambda = float(lam[k])
        rule = rules[k]
    else:
        q = utils.check_real(q, "q")
        step = utils.check_real(step, "step")
        if not 0. < q <= 1.:
            raise ValueError("q must lie in (0, 1], got %r." % q)
        if not 0. < step <= 1.:
            raise ValueError("step must lie in (0, 1], got %r." % step)
        if space.size > MAX_GRID_SYMBOLS:
            raise ValueError("The grid oracle is limited to %d symbols."
                             % MAX_GRID_SYMBOLS)
        logger.debug("grid oracle: %d symbols, step %g", space.size, step)
        max_lambda, rule = _grid_max(space, pi, q, step)

    # PPV of the maximizing rule; PPV is increasing in discrimination
    s = float(np.dot(space.p1, rule))
    f = float(np.dot(space.p0, rule))
    ppv = s * pi / (s * pi + f * (1. - pi))

    args = (max_lambda, ppv, rule)
    names = ('max_lambda', 'max_ppv', 'rule')

    return utils.ReturnTuple(args, names)


def rounded_witness_lambda(space=None, pi=None, q=None, step=0.05):
    """Discrimination of the greedy witness rounded up to the oracle grid.

    Parameters
    ----------
    space : DiscreteSignalSpace
        Signal space.
    pi : float
        Base rate, in (0, 1).
    q : float
        Minimum issuance probability.
    step : float, optional
        Grid spacing.

    Returns
    -------
    lambda_ : float
        Discrimination of a feasible grid rule; the grid optimum lies between
        this value and the greedy ceiling.

    """

    step = utils.check_real(step, "step")
    if not 0. < step <= 1.:
        raise ValueError("step must lie in (0, 1], got %r." % step)

    rule = coverage_constrained_ceiling(space, pi, q)['rule']

    # smallest grid level at or above each acceptance probability
    levels = _grid_levels(step)
    idx = np.searchsorted(levels, rule - 1e-9, side='left')
    rounded = levels[np.minimum(idx, len(levels) - 1)]

    return evaluate_rule(space, rounded, pi)['discrimination']


def oracle_agrees(space=None, pi=None, q=None, step=0.05, rtol=1e-9):
    """Check the greedy coverage ceiling against the grid oracle.

    Parameters
    ----------
    space : DiscreteSignalSpace
        Signal space.
    pi : float
        Base rate, in (0, 1).
    q : float, optional
        Minimum issuance probability; without it the unconstrained ceiling is
        checked against exhaustive enumeration.
    step : float, optional
        Grid spacing.
    rtol : float, optional
        Relative tolerance.

    Returns
    -------
    agree : bool
        Whether the oracle confirms the closed-form value.
    value : float
        Closed-form (greedy) value.
    oracle : float
        Oracle value.

    """

    if q is None:
        value = esssup_lambda(space)
        oracle = brute_force_oracle(space, pi)['max_lambda']
        agree = bool(np.isclose(value, oracle, rtol=rtol, atol=0.))
    else:
        value = coverage_constrained_ceiling(space, pi, q)['ceiling']
        oracle = brute_force_oracle(space, pi, q, step)['max_lambda']
        low = rounded_witness_lambda(space, pi, q, step)
        agree = bool(low * (1. - rtol) <= oracle <= value * (1. + rtol))

    args = (agree, value, oracle)
    names = ('agree', 'value', 'oracle')

    return utils.ReturnTuple(args, names)


def random_space(n_symbols=None, random_state=None):
    """Draw a signal space with Dirichlet(1, ..., 1) pmfs.

    Draws violating the overlap condition at tolerance 1e-12 are rejected.

    Parameters
    ----------
    n_symbols : int
        Alphabet size.
    random_state : None, int, numpy.random.Generator, optional
        Seed for the random number generator.

    Returns
    -------
    space : DiscreteSignalSpace
        Random signal space with symbols "x1", "x2", ...

    """

    n_symbols = utils.check_positive_int(n_symbols, "n_symbols")
    rng = utils.get_rng(random_state)
    symbols = ["x%d" % (i + 1) for i in range(n_symbols)]

    while True:
        p0 = rng.dirichlet(np.ones(n_symbols))
        p1 = rng.dirichlet(np.ones(n_symbols))
        # renormalize against round-off
        p0 = p0 / p0.sum()
        p1 = p1 / p1.sum()
        if np.all((p0 > PMF_TOL) | (p1 <= PMF_TOL)):
            return DiscreteSignalSpace(symbols, p0, p1)
