# -*- coding: utf-8 -*-
"""
certbounds.synthesizers.pool
----------------------------

This module provides a seeded Monte Carlo simulator of correlated loan pools
with tranching, under the one-factor Gaussian copula: loan j defaults when
:math:`\\sqrt{\\rho} Z + \\sqrt{1-\\rho}\\,\\varepsilon_j \\le \\Phi^{-1}(pd)`.

Given the systematic factor Z, defaults are independent with probability
:math:`p(Z) = \\Phi((\\Phi^{-1}(pd) - \\sqrt{\\rho} Z)/\\sqrt{1-\\rho})`, so the
default count of a replication is drawn as Binomial(n_loans, p(Z)), which has
the same law as drawing every idiosyncratic factor.

Replications are generated in fixed-size blocks, each with its own Philox
(counter-based) generator keyed by (seed, block index). Outputs therefore do
not depend on how many workers run the blocks.

The certified event is E = 1 when the tranche takes no principal loss. A
downgrade-based event has no analogue in a structural simulator.

:copyright: (c) 2026 by the certbounds developers
:license: BSD 3-clause, see LICENSE for more details.
"""

# Imports
# built-in
import logging
import math

# 3rd party
import numpy as np
import pandas as pd
from joblib import Parallel, delayed
from scipy import integrate, stats

# local
from .. import discrete, storage, utils
from .. import stats as cstats

logger = logging.getLogger(__name__)

# Globals
BLOCK_SIZE = 16384
SCORE_CAP = 37.
SIGNAL_KINDS = ('structural', 'binormal', 'none')
WEIGHT_TOL = 1e-12


class DegenerateSampleError(ValueError):
    """A simulated sample cannot support the requested estimate."""


class PoolSpec(object):
    """Homogeneous loan pool under the one-factor Gaussian copula.

    Parameters
    ----------
    n_loans : int
        Number of loans; positive.
    pd : float
        Per-loan default probability over the horizon, in [0, 1].
    rho : float
        Asset correlation, in [0, 1).
    lgd : float, optional
        Loss given default, in [0, 1]; defaults to 1.

    """

    def __init__(self, n_loans=None, pd=None, rho=None, lgd=1.):

        self.n_loans = utils.check_positive_int(n_loans, "n_loans")
        self.pd = utils.check_closed_unit(pd, "pd")
        self.rho = utils.check_closed_unit(rho, "rho")
        self.lgd = utils.check_closed_unit(lgd, "lgd")

        if self.rho >= 1.:
            raise ValueError("rho must be below 1, got %r." % self.rho)

    def replace(self, **kwargs):
        """Return a copy with some fields replaced."""

        fields = dict(n_loans=self.n_loans, pd=self.pd, rho=self.rho,
                      lgd=self.lgd)
        fields.update(kwargs)

        return PoolSpec(**fields)

    def to_dict(self):
        return dict(n_loans=self.n_loans, pd=self.pd, rho=self.rho,
                    lgd=self.lgd)

    def __eq__(self, other):
        return isinstance(other, PoolSpec) and self.to_dict() == other.to_dict()

    def __repr__(self):
        return "PoolSpec(n_loans=%r, pd=%r, rho=%r, lgd=%r)" % (
            self.n_loans, self.pd, self.rho, self.lgd)


class RegimeMixture(object):
    """Mixture of pool regimes, e.g. benign and stress conditions.

    Parameters
    ----------
    regimes : list
        Pairs (PoolSpec, weight); weights must sum to 1 within 1e-12.

    """

    def __init__(self, regimes=None):

        if not regimes:
            raise TypeError("Please specify at least one regime.")

        specs = []
        weights = []
        for spec, weight in regimes:
            if not isinstance(spec, PoolSpec):
                raise TypeError("Regimes must be PoolSpec instances.")
            specs.append(spec)
            weights.append(utils.check_closed_unit(weight, "weight"))

        weights = np.array(weights)
        if abs(weights.sum() - 1.) > WEIGHT_TOL:
            raise ValueError("Regime weights must sum to 1, got %r."
                             % weights.sum())

        self.specs = specs
        self.weights = weights

    @classmethod
    def single(cls, spec):
        return cls([(spec, 1.)])

    def __len__(self):
        return len(self.specs)

    def __repr__(self):
        return "RegimeMixture(%r)" % list(zip(self.specs, self.weights.tolist()))


class TrancheSpec(object):
    """Tranche boundaries as fractions of pool notional.

    Parameters
    ----------
    attachment : float
        Pool loss at which the tranche starts absorbing losses.
    detachment : float
        Pool loss at which the tranche is wiped out.

    """

    def __init__(self, attachment=None, detachment=None):

        self.attachment = utils.check_closed_unit(attachment, "attachment")
        self.detachment = utils.check_closed_unit(detachment, "detachment")

        if not self.attachment < self.detachment:
            raise ValueError("attachment must be below detachment.")

    def loss(self, pool_loss):
        """Tranche loss fraction for given pool loss fractions."""

        width = self.detachment - self.attachment

        return np.clip((np.asarray(pool_loss) - self.attachment) / width,
                       0., 1.)

    def __repr__(self):
        return "TrancheSpec(attachment=%r, detachment=%r)" % (
            self.attachment, self.detachment)


def _as_mixture(spec):
    if spec is None:
        raise TypeError("Please specify a pool spec or regime mixture.")

    if isinstance(spec, RegimeMixture):
        return spec

    if isinstance(spec, PoolSpec):
        return RegimeMixture.single(spec)

    raise TypeError("spec must be a PoolSpec or RegimeMixture.")


def conditional_default_probability(spec=None, z=None):
    """Default probability of each loan given the systematic factor.

    Parameters
    ----------
    spec : PoolSpec
        Pool specification.
    z : float, array
        Systematic factor value(s).

    Returns
    -------
    p : float, array
        :math:`\\Phi((\\Phi^{-1}(pd) - \\sqrt{\\rho} z)/\\sqrt{1-\\rho})`.

    """

    z = np.asarray(z, dtype=float)

    if spec.pd <= 0.:
        return np.zeros_like(z)

    if spec.pd >= 1.:
        return np.ones_like(z)

    c = stats.norm.ppf(spec.pd)

    return stats.norm.cdf((c - np.sqrt(spec.rho) * z) / np.sqrt(1. - spec.rho))


def survival_count(spec=None, tranche=None):
    """Largest default count leaving the tranche untouched.

    Parameters
    ----------
    spec : PoolSpec
        Pool specification.
    tranche : TrancheSpec
        Tranche boundaries.

    Returns
    -------
    k : int
        Largest d with tranche loss zero at d defaults.

    """

    losses = np.arange(spec.n_loans + 1) * spec.lgd / spec.n_loans
    safe = np.flatnonzero(tranche.loss(losses) == 0.)

    return int(safe[-1])


def _safety_score(k, n, p):
    # Phi^{-1} of the conditional survival probability, accurate in both tails
    cdf = stats.binom.cdf(k, n, p)
    sf = stats.binom.sf(k, n, p)
    with np.errstate(divide='ignore'):
        score = np.where(cdf < 0.5, stats.norm.ppf(cdf), stats.norm.isf(sf))

    return np.clip(score, -SCORE_CAP, SCORE_CAP)


def _simulate_block(specs, weights, tranche, noise_sd, kind, dprime, seed,
                    block, size):
    rng = np.random.Generator(np.random.Philox(
        np.random.SeedSequence([seed, block])))

    regime = rng.choice(len(specs), size=size, p=weights)
    z = rng.standard_normal(size)
    noise = rng.standard_normal(size)

    n = np.empty(size, dtype=np.int64)
    lgd = np.empty(size)
    k = np.empty(size, dtype=np.int64)
    p = np.empty(size)
    for r, spec in enumerate(specs):
        mask = regime == r
        n[mask] = spec.n_loans
        lgd[mask] = spec.lgd
        k[mask] = survival_count(spec, tranche)
        p[mask] = conditional_default_probability(spec, z[mask])

    defaults = rng.binomial(n, p)
    pool_loss = defaults * lgd / n
    tranche_loss = tranche.loss(pool_loss)
    event = (tranche_loss == 0.).astype(np.int8)

    if kind == 'structural':
        signal = _safety_score(k, n, p) + noise_sd * noise
    elif kind == 'binormal':
        signal = dprime * event + noise
    else:
        signal = np.full(size, np.nan)

    return dict(pool_loss=pool_loss, tranche_loss=tranche_loss, event=event,
                signal=signal, regime=regime, defaults=defaults, factor=z)


OUTCOME_FIELDS = ('pool_loss', 'tranche_loss', 'event', 'signal', 'regime',
                  'defaults', 'factor')


def _check_sim_args(tranche, signal_noise_sd, n_reps, seed, signal, dprime):
    if not isinstance(tranche, TrancheSpec):
        raise TypeError("Please specify a TrancheSpec.")

    noise = utils.check_real(signal_noise_sd, "signal_noise_sd")
    if noise < 0.:
        raise ValueError("signal_noise_sd must be non-negative.")

    n_reps = utils.check_positive_int(n_reps, "n_reps")
    if seed is None:
        raise TypeError("Please specify a seed.")
    seed = int(seed)
    if seed < 0:
        raise ValueError("seed must be non-negative.")

    if signal not in SIGNAL_KINDS:
        raise ValueError("Unknown signal kind %r; use one of %s."
                         % (signal, ", ".join(SIGNAL_KINDS)))

    if signal == 'binormal':
        dprime = utils.check_real(dprime, "dprime")
        if dprime < 0.:
            raise ValueError("dprime must be non-negative.")

    return noise, n_reps, seed, dprime


def iter_outcomes(spec=None, tranche=None, signal_noise_sd=0., n_reps=None,
                  seed=None, signal='structural', dprime=None, n_jobs=1):
    """Stream simulated outcomes block by block.

    Parameters are those of :func:`simulate`.

    Yields
    ------
    block : ReturnTuple
        Outcome arrays of one block, in replication order.

    """

    mixture = _as_mixture(spec)
    noise, n_reps, seed, dprime = _check_sim_args(
        tranche, signal_noise_sd, n_reps, seed, signal, dprime)

    n_blocks = int(math.ceil(n_reps / float(BLOCK_SIZE)))
    sizes = [min(BLOCK_SIZE, n_reps - b * BLOCK_SIZE) for b in range(n_blocks)]
    logger.debug("simulating %d reps in %d blocks (seed %d, n_jobs %d)",
                 n_reps, n_blocks, seed, n_jobs)

    tasks = (delayed(_simulate_block)(mixture.specs, mixture.weights, tranche,
                                      noise, signal, dprime, seed, b, size)
             for b, size in enumerate(sizes))

    for out in Parallel(n_jobs=n_jobs)(tasks):
        yield utils.ReturnTuple([out[f] for f in OUTCOME_FIELDS],
                                OUTCOME_FIELDS)


def simulate(spec=None, tranche=None, signal_noise_sd=0., n_reps=None,
             seed=None, signal='structural', dprime=None, n_jobs=1):
    """Simulate correlated pool losses, tranche losses and rating signals.

    Parameters
    ----------
    spec : PoolSpec, RegimeMixture
        Pool specification or mixture of regimes.
    tranche : TrancheSpec
        Tranche whose zero-loss event is certified.
    signal_noise_sd : float, optional
        Standard deviation of the estimation noise added to the structural
        signal.
    n_reps : int
        Number of replications.
    seed : int
        Non-negative seed; outputs are a deterministic function of it.
    signal : str, optional
        'structural' (default): :math:`\\Phi^{-1}` of the model-implied
        survival probability given the regime and systematic factor, plus
        Gaussian noise; 'binormal': :math:`d' E + N(0, 1)`; 'none': NaN.
    dprime : float, optional
        Separation of the binormal signal.
    n_jobs : int, optional
        Number of joblib workers.

    Returns
    -------
    pool_loss : array
        Pool loss fraction per replication.
    tranche_loss : array
        Tranche loss fraction per replication.
    event : array
        1 where the tranche took no loss.
    signal : array
        Rating-time signal X.
    regime : array
        Regime index drawn.
    defaults : array
        Default count.
    factor : array
        Systematic factor Z.

    """

    blocks = list(iter_outcomes(spec, tranche, signal_noise_sd, n_reps, seed,
                                signal, dprime, n_jobs))

    args = [np.concatenate([b[f] for b in blocks]) for f in OUTCOME_FIELDS]

    return utils.ReturnTuple(args, OUTCOME_FIELDS)


def tranche_loss_probability(spec=None, tranche=None):
    """Exact probability that the tranche takes a loss.

    Integrates the conditional binomial tail over the systematic factor.

    Parameters
    ----------
    spec : PoolSpec, RegimeMixture
        Pool specification or mixture of regimes.
    tranche : TrancheSpec
        Tranche boundaries.

    Returns
    -------
    p_loss : float
        :math:`P(\\text{tranche loss} > 0)`.

    """

    mixture = _as_mixture(spec)

    total = 0.
    for s, w in zip(mixture.specs, mixture.weights):
        k = survival_count(s, tranche)

        def integrand(z, s=s, k=k):
            p = conditional_default_probability(s, z)
            return stats.binom.sf(k, s.n_loans, p) * stats.norm.pdf(z)

        val, _ = integrate.quad(integrand, -12., 12., epsabs=1e-15,
                                epsrel=1e-10, limit=400)
        total += w * val

    return float(total)


def threshold_for_fpr(outcomes=None, fpr=None):
    """Empirical threshold with a target false-positive rate.

    Parameters
    ----------
    outcomes : ReturnTuple
        Output of :func:`simulate`.
    fpr : float
        Target false-positive rate, in (0, 1).

    Returns
    -------
    threshold : float
        Upper `fpr` quantile of the signal among failures.

    """

    fpr = utils.check_open_unit(fpr, "fpr")
    x0 = outcomes['signal'][outcomes['event'] == 0]

    if len(x0) == 0:
        raise DegenerateSampleError("No failures were simulated.")

    return float(np.quantile(x0, 1. - fpr))


def estimate_metrics(outcomes=None, threshold=None, confidence=0.95):
    """Empirical metrics of the rule accepting :math:`X \\ge t`.

    Parameters
    ----------
    outcomes : ReturnTuple
        Output of :func:`simulate`.
    threshold : float
        Acceptance threshold on the signal; ``-numpy.inf`` accepts all.
    confidence : float, optional
        Coverage of the Wilson intervals.

    Returns
    -------
    sensitivity, sensitivity_ci : float, tuple
        Empirical S and its Wilson interval.
    false_positive_rate, false_positive_rate_ci : float, tuple
        Empirical F and its Wilson interval.
    discrimination, discrimination_ci : float, tuple
        S/F and the interval formed from the Wilson bounds.
    ppv, ppv_ci : float, tuple
        Empirical PPV among accepted replications (NaN if none).
    base_rate : float
        Empirical :math:`\\hat\\pi`.
    counts : dict
        n, n1, n0, tp, fp.

    Raises
    ------
    DegenerateSampleError
        If the sample lacks successes or failures.

    """

    if outcomes is None:
        raise TypeError("Please specify simulated outcomes.")

    if threshold is None:
        raise TypeError("Please specify a threshold.")

    event = np.asarray(outcomes['event']).astype(bool)
    accept = np.asarray(outcomes['signal']) >= threshold

    n = len(event)
    n1 = int(event.sum())
    n0 = n - n1
    if n1 == 0 or n0 == 0:
        raise DegenerateSampleError("Need at least one success and one "
                                    "failure; got %d and %d." % (n1, n0))

    tp = int(np.sum(accept & event))
    fp = int(np.sum(accept & ~event))

    s, s_lo, s_hi = cstats.wilson_interval(tp, n1, confidence)
    f, f_lo, f_hi = cstats.wilson_interval(fp, n0, confidence)
    lam, lam_lo, lam_hi = cstats.proportion_ratio_interval(tp, n1, fp, n0,
                                                           confidence)

    if tp + fp > 0:
        ppv, ppv_lo, ppv_hi = cstats.wilson_interval(tp, tp + fp, confidence)
    else:
        ppv, ppv_lo, ppv_hi = np.nan, np.nan, np.nan

    counts = dict(n=n, n1=n1, n0=n0, tp=tp, fp=fp)

    args = (s, (s_lo, s_hi), f, (f_lo, f_hi), lam, (lam_lo, lam_hi),
            ppv, (ppv_lo, ppv_hi), n1 / float(n), counts)
    names = ('sensitivity', 'sensitivity_ci', 'false_positive_rate',
             'false_positive_rate_ci', 'discrimination', 'discrimination_ci',
             'ppv', 'ppv_ci', 'base_rate', 'counts')

    return utils.ReturnTuple(args, names)


def correlation_sensitivity(spec_low=None, spec_high=None, tranche=None,
                            n_reps=None, seed=None, confidence=0.95,
                            n_jobs=1):
    """Ratio of tranche-loss probabilities between two correlation levels.

    Both pools are simulated from the same seed (common random numbers).

    Parameters
    ----------
    spec_low : PoolSpec
        Pool at the lower correlation.
    spec_high : PoolSpec
        Same pool at the higher correlation.
    tranche : TrancheSpec
        Tranche boundaries.
    n_reps : int
        Replications per pool.
    seed : int
        Non-negative seed.
    confidence : float, optional
        Coverage of the ratio interval.
    n_jobs : int, optional
        Number of joblib workers.

    Returns
    -------
    ratio : float
        :math:`P_{loss}(\\rho_{high}) / P_{loss}(\\rho_{low})`.
    lower : float
        Lower confidence bound.
    upper : float
        Upper confidence bound.
    censored : bool
        True when either pool produced no tranche loss.
    p_low : float
        Loss probability at the lower correlation.
    p_high : float
        Loss probability at the higher correlation.

    """

    for name, spec in (("spec_low", spec_low), ("spec_high", spec_high)):
        if not isinstance(spec, PoolSpec):
            raise TypeError("%s must be a PoolSpec." % name)

    if spec_low.replace(rho=spec_high.rho) != spec_high:
        raise ValueError("The two specs may differ only in rho.")

    counts = []
    for spec in (spec_low, spec_high):
        out = simulate(spec, tranche, 0., n_reps, seed, signal='none',
                       n_jobs=n_jobs)
        counts.append(int(np.sum(out['tranche_loss'] > 0.)))

    k_low, k_high = counts
    n_reps = int(n_reps)
    ratio = cstats.risk_ratio_interval(k_high, n_reps, k_low, n_reps,
                                       confidence)

    args = (ratio['estimate'], ratio['lower'], ratio['upper'],
            ratio['censored'], k_low / float(n_reps), k_high / float(n_reps))
    names = ('ratio', 'lower', 'upper', 'censored', 'p_low', 'p_high')

    return utils.ReturnTuple(args, names)


def bin_signal(signal=None, n_bins=None, edges=None):
    """Assign signal values to quantile bins.

    Parameters
    ----------
    signal : array
        Signal values.
    n_bins : int, optional
        Number of equal-frequency bins; ignored if `edges` is given.
    edges : array, optional
        Interior bin edges.

    Returns
    -------
    bins : array
        Bin index per value, from 0.
    edges : array
        Interior bin edges used.

    """

    signal = np.asarray(signal, dtype=float)

    if edges is None:
        n_bins = utils.check_positive_int(n_bins, "n_bins")
        levels = np.linspace(0., 1., n_bins + 1)[1:-1]
        edges = np.quantile(signal, levels)

    edges = np.asarray(edges, dtype=float)
    bins = np.searchsorted(edges, signal, side='right')

    return utils.ReturnTuple((bins, edges), ('bins', 'edges'))


def empirical_space(bins=None, event=None, n_bins=None):
    """Discrete signal space of binned signals for a given event.

    Parameters
    ----------
    bins : array
        Bin index per replication.
    event : array
        Certified event per replication.
    n_bins : int
        Number of bins.

    Returns
    -------
    space : DiscreteSignalSpace
        Empirical class-conditional pmfs over bins "b1", "b2", ...

    Raises
    ------
    DegenerateSampleError
        If a bin is empty, a class is absent, or a bin holds successes but
        no failures.

    """

    bins = np.asarray(bins)
    event = np.asarray(event).astype(bool)

    total = np.bincount(bins, minlength=n_bins)
    empty = np.flatnonzero(total == 0)
    if len(empty) > 0:
        raise DegenerateSampleError("Empty signal bin(s): %s."
                                    % (empty + 1).tolist())

    counts1 = np.bincount(bins[event], minlength=n_bins)
    counts0 = np.bincount(bins[~event], minlength=n_bins)
    symbols = ["b%d" % (i + 1) for i in range(n_bins)]

    try:
        space = discrete.DiscreteSignalSpace.from_counts(symbols, counts0,
                                                         counts1)
        space.check_overlap()
    except discrete.OverlapError as err:
        raise DegenerateSampleError("Bin %s has successes but no failures."
                                    % err.symbol)
    except ValueError as err:
        raise DegenerateSampleError(str(err))

    return space


def tranche_event_ceiling_experiment(spec=None, tranche_shallow=None,
                                     tranche_deep=None, signal_noise_sd=0.,
                                     n_reps=None, seed=None, n_bins=None,
                                     n_jobs=1):
    """Discrimination ceilings of one signal under two tranche events.

    The signal is simulated once (structural, relative to the shallow
    tranche), discretized into quantile bins, and paired with the zero-loss
    events of both tranches. Only the certified event changes between the two
    spaces; the information is the same.

    Parameters
    ----------
    spec : PoolSpec, RegimeMixture
        Pool specification.
    tranche_shallow : TrancheSpec
        Tranche with the lower attachment.
    tranche_deep : TrancheSpec
        Tranche with the same or higher attachment.
    signal_noise_sd : float, optional
        Noise of the structural signal.
    n_reps : int
        Number of replications.
    seed : int
        Non-negative seed.
    n_bins : int
        Number of quantile bins of the signal.
    n_jobs : int, optional
        Number of joblib workers.

    Returns
    -------
    ceiling_shallow : float
        Ceiling for the shallow-tranche event.
    ceiling_deep : float
        Ceiling for the deep-tranche event.
    space_shallow : DiscreteSignalSpace
        Binned space for the shallow-tranche event.
    space_deep : DiscreteSignalSpace
        Binned space for the deep-tranche event.
    edges : array
        Interior quantile edges of the signal.

    """

    if not isinstance(tranche_shallow, TrancheSpec) or \
            not isinstance(tranche_deep, TrancheSpec):
        raise TypeError("Please specify both tranches.")

    if tranche_deep.attachment < tranche_shallow.attachment:
        raise ValueError("The deep tranche must attach at or above the "
                         "shallow one.")

    n_bins = utils.check_positive_int(n_bins, "n_bins")

    out = simulate(spec, tranche_shallow, signal_noise_sd, n_reps, seed,
                   n_jobs=n_jobs)
    bins, edges = bin_signal(out['signal'], n_bins)

    event_deep = tranche_deep.loss(out['pool_loss']) == 0.
    space_shallow = empirical_space(bins, out['event'], n_bins)
    space_deep = empirical_space(bins, event_deep, n_bins)

    args = (discrete.esssup_lambda(space_shallow),
            discrete.esssup_lambda(space_deep),
            space_shallow, space_deep, edges)
    names = ('ceiling_shallow', 'ceiling_deep', 'space_shallow', 'space_deep',
             'edges')

    return utils.ReturnTuple(args, names)


def pool_config(data=None):
    """Parse a pool configuration mapping.

    Expected keys: "regimes" (list of objects with n_loans, pd, rho, lgd,
    weight), "tranche" (attachment, detachment), "signal_noise_sd"; optional
    "signal" ({"kind": ..., "dprime": ...}), "threshold" (number, or
    {"fpr": ...} for an empirical threshold), "sensitivity"
    ({"rho_low": ..., "rho_high": ...}) and "deep_tranche" (attachment,
    detachment, optional n_bins) for the tranche-event ceiling experiment.

    Parameters
    ----------
    data : dict
        Parsed JSON configuration.

    Returns
    -------
    mixture : RegimeMixture
        Pool regimes.
    tranche : TrancheSpec
        Certified tranche.
    signal_noise_sd : float
        Structural signal noise.
    signal : str
        Signal kind.
    dprime : float, None
        Binormal separation.
    threshold : float, dict, None
        Rule threshold setting.
    sensitivity : dict, None
        Correlation pair for the sensitivity ratio.
    deep_tranche : TrancheSpec, None
        Second tranche for the ceiling experiment.
    n_bins : int
        Signal bins of the ceiling experiment.

    """

    if not isinstance(data, dict):
        raise TypeError("Please specify the configuration as a mapping.")

    try:
        regimes = [(PoolSpec(r["n_loans"], r["pd"], r["rho"],
                             r.get("lgd", 1.)), r.get("weight", 1.))
                   for r in data["regimes"]]
        tranche = TrancheSpec(data["tranche"]["attachment"],
                              data["tranche"]["detachment"])
    except KeyError as err:
        raise ValueError("Pool configuration is missing the %s field." % err)

    noise = utils.check_real(data.get("signal_noise_sd", 0.),
                             "signal_noise_sd")
    if noise < 0.:
        raise ValueError("signal_noise_sd must be non-negative.")

    signal = data.get("signal", {}).get("kind", "structural")
    dprime = data.get("signal", {}).get("dprime")
    if signal not in SIGNAL_KINDS:
        raise ValueError("Unknown signal kind %r." % signal)

    threshold = data.get("threshold")
    if isinstance(threshold, dict):
        utils.check_open_unit(threshold.get("fpr"), "threshold.fpr")
    elif threshold is not None:
        utils.check_real(threshold, "threshold")

    sensitivity = data.get("sensitivity")
    if sensitivity is not None:
        if len(regimes) != 1:
            raise ValueError("The sensitivity block needs a single regime.")
        for key in ("rho_low", "rho_high"):
            utils.check_closed_unit(sensitivity.get(key), key)

    deep = data.get("deep_tranche")
    n_bins = 4
    if deep is not None:
        try:
            deep_tranche = TrancheSpec(deep["attachment"], deep["detachment"])
        except KeyError as err:
            raise ValueError("deep_tranche is missing the %s field." % err)
        n_bins = utils.check_positive_int(deep.get("n_bins", 4), "n_bins")
    else:
        deep_tranche = None

    args = (RegimeMixture(regimes), tranche, noise, signal, dprime, threshold,
            sensitivity, deep_tranche, n_bins)
    names = ('mixture', 'tranche', 'signal_noise_sd', 'signal', 'dprime',
             'threshold', 'sensitivity', 'deep_tranche', 'n_bins')

    return utils.ReturnTuple(args, names)


def load_pool_config(path=None):
    """Load and parse a pool configuration JSON file.

    Parameters
    ----------
    path : str
        Source path.

    Returns
    -------
    config : ReturnTuple
        See :func:`pool_config`.

    """

    if path is None:
        raise TypeError("Please specify a configuration path.")

    return pool_config(storage.loadJSON(path))


def simulate_config(config=None, n_reps=None, seed=None, n_jobs=1):
    """Simulate the pool described by a parsed configuration."""

    if config is None:
        raise TypeError("Please specify a pool configuration.")

    return simulate(config['mixture'], config['tranche'],
                    config['signal_noise_sd'], n_reps, seed,
                    signal=config['signal'], dprime=config['dprime'],
                    n_jobs=n_jobs)


def summarize(config=None, n_reps=None, seed=None, confidence=0.95, n_jobs=1,
              outcomes=None):
    """Run a parsed pool configuration and tabulate its estimates.

    Parameters
    ----------
    config : ReturnTuple
        Output of :func:`pool_config`.
    n_reps : int
        Number of replications.
    seed : int
        Non-negative seed.
    confidence : float, optional
        Coverage of the intervals.
    n_jobs : int, optional
        Number of joblib workers.
    outcomes : ReturnTuple, optional
        Outcomes already simulated from `config` with `n_reps` and `seed`.

    Returns
    -------
    table : pandas.DataFrame
        Columns name, estimate, ci_low, ci_high, n_reps, seed.

    """

    if config is None:
        raise TypeError("Please specify a pool configuration.")

    n_reps = utils.check_positive_int(n_reps, "n_reps")

    out = outcomes
    if out is None:
        out = simulate_config(config, n_reps, seed, n_jobs)
    elif len(out['event']) != n_reps:
        raise ValueError("outcomes hold %d replications, expected %d."
                         % (len(out['event']), n_reps))

    rows = []

    def add(name, estimate, low=np.nan, high=np.nan):
        rows.append((name, float(estimate), float(low), float(high)))

    n1 = int(np.sum(out['event']))
    add('base_rate', *cstats.wilson_interval(n1, n_reps, confidence))
    add('tranche_loss_probability',
        *cstats.wilson_interval(n_reps - n1, n_reps, confidence))
    add('exact_tranche_loss_probability',
        tranche_loss_probability(config['mixture'], config['tranche']))

    add('mean_pool_loss', *cstats.mean_interval(out['pool_loss'], confidence))

    threshold = config['threshold']
    if threshold is not None:
        if isinstance(threshold, dict):
            threshold = threshold_for_fpr(out, threshold['fpr'])
        add('threshold', threshold)
        m = estimate_metrics(out, threshold, confidence)
        add('sensitivity', m['sensitivity'], *m['sensitivity_ci'])
        add('false_positive_rate', m['false_positive_rate'],
            *m['false_positive_rate_ci'])
        add('discrimination', m['discrimination'], *m['discrimination_ci'])
        add('ppv', m['ppv'], *m['ppv_ci'])

    sens = config['sensitivity']
    if sens is not None:
        base = config['mixture'].specs[0]
        res = correlation_sensitivity(base.replace(rho=sens['rho_low']),
                                      base.replace(rho=sens['rho_high']),
                                      config['tranche'], n_reps, seed,
                                      confidence, n_jobs)
        add('p_loss_rho_low', res['p_low'])
        add('p_loss_rho_high', res['p_high'])
        add('correlation_ratio', res['ratio'], res['lower'], res['upper'])

    deep = config['deep_tranche']
    if deep is not None:
        exp = tranche_event_ceiling_experiment(
            config['mixture'], config['tranche'], deep,
            config['signal_noise_sd'], n_reps, seed, config['n_bins'], n_jobs)
        add('ceiling_shallow', exp['ceiling_shallow'])
        add('ceiling_deep', exp['ceiling_deep'])

    table = pd.DataFrame(rows, columns=['name', 'estimate', 'ci_low',
                                        'ci_high'])
    table['n_reps'] = n_reps
    table['seed'] = int(seed)

    return table
