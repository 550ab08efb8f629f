# -*- coding: utf-8 -*-
"""
tests.test_pool
---------------

Correlated pool simulator and its estimators.

:copyright: (c) 2026 by the certbounds developers
:license: BSD 3-clause, see LICENSE for more details.
"""

# Imports
# 3rd party
import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

# local
from certbounds import binormal, bounds, discrete, storage
from certbounds.synthesizers import pool


@pytest.fixture
def senior():
    return pool.TrancheSpec(0.15, 1.)


def _config(name):
    return pool.pool_config(storage.load_data(name))


class TestSpecs:

    def test_pool_spec(self):
        spec = pool.PoolSpec(100, 0.02, 0.1)
        assert spec.lgd == 1.
        assert spec.replace(rho=0.3).rho == 0.3
        assert spec.replace(rho=0.1) == spec

        with pytest.raises(ValueError):
            pool.PoolSpec(100, 0.02, 1.)
        with pytest.raises(ValueError):
            pool.PoolSpec(0, 0.02, 0.1)
        with pytest.raises(ValueError):
            pool.PoolSpec(100, 1.2, 0.1)

    def test_mixture_weights(self):
        a = pool.PoolSpec(100, 0.01, 0.)
        with pytest.raises(ValueError):
            pool.RegimeMixture([(a, 0.5), (a, 0.4)])
        assert len(pool.RegimeMixture([(a, 0.5), (a, 0.5)])) == 2

    def test_tranche(self, senior):
        assert_allclose(senior.loss([0., 0.15, 0.575, 1.]), [0., 0., 0.5, 1.])
        with pytest.raises(ValueError):
            pool.TrancheSpec(0.3, 0.3)

    def test_survival_count(self, senior):
        spec = pool.PoolSpec(100, 0.02, 0.1)
        assert pool.survival_count(spec, senior) == 15
        assert pool.survival_count(spec, pool.TrancheSpec(0., 1.)) == 0
        assert pool.survival_count(spec.replace(lgd=0.5), senior) == 30


class TestSimulate:

    def test_zero_correlation_mean(self):
        out = pool.simulate(pool.PoolSpec(10000, 0.02, 0.), pool.TrancheSpec(0.5, 1.),
                            n_reps=1, seed=1)
        se = np.sqrt(0.02 * 0.98 / 10000)
        assert abs(out['pool_loss'][0] - 0.02) <= 4. * se

    def test_comonotone_limit(self):
        n = 100000
        out = pool.simulate(pool.PoolSpec(100, 0.02, 0.999),
                            pool.TrancheSpec(0.5, 1.), n_reps=n, seed=2,
                            signal='none')
        frac = np.mean(out['pool_loss'] > 0.5)
        assert abs(frac - 0.02) <= 4. * np.sqrt(0.02 * 0.98 / n)

    def test_outcome_consistency(self, senior):
        out = pool.simulate(pool.PoolSpec(100, 0.05, 0.2, lgd=0.6), senior,
                            0.3, n_reps=5000, seed=3)
        assert set(out.keys()) == set(pool.OUTCOME_FIELDS)
        assert_allclose(out['pool_loss'], out['defaults'] * 0.6 / 100)
        assert_allclose(out['tranche_loss'], senior.loss(out['pool_loss']))
        assert_array_equal(out['event'], out['tranche_loss'] == 0.)
        assert np.all(np.isfinite(out['signal']))

    def test_deterministic(self, senior):
        spec = pool.PoolSpec(100, 0.05, 0.2)
        n = 2 * pool.BLOCK_SIZE + 123
        a = pool.simulate(spec, senior, 0.5, n_reps=n, seed=4)
        b = pool.simulate(spec, senior, 0.5, n_reps=n, seed=4)
        c = pool.simulate(spec, senior, 0.5, n_reps=n, seed=4, n_jobs=2)
        for f in pool.OUTCOME_FIELDS:
            assert_array_equal(a[f], b[f])
            assert_array_equal(a[f], c[f])
        assert len(a['event']) == n

        d = pool.simulate(spec, senior, 0.5, n_reps=n, seed=5)
        assert not np.array_equal(a['factor'], d['factor'])

    def test_stream_matches_simulate(self, senior):
        spec = pool.PoolSpec(50, 0.05, 0.2)
        n = pool.BLOCK_SIZE + 10
        blocks = list(pool.iter_outcomes(spec, senior, n_reps=n, seed=6))
        assert [len(b['event']) for b in blocks] == [pool.BLOCK_SIZE, 10]
        whole = pool.simulate(spec, senior, n_reps=n, seed=6)
        assert_array_equal(np.concatenate([b['defaults'] for b in blocks]),
                           whole['defaults'])

    def test_regime_mixing(self):
        mix = pool.RegimeMixture([(pool.PoolSpec(100, 0.01, 0.), 0.3),
                                  (pool.PoolSpec(100, 0.05, 0.), 0.7)])
        out = pool.simulate(mix, pool.TrancheSpec(0.5, 1.), n_reps=100000,
                            seed=7, signal='none')
        freq = out['defaults'] / 100.
        se = freq.std(ddof=1) / np.sqrt(len(freq))
        assert abs(freq.mean() - (0.3 * 0.01 + 0.7 * 0.05)) <= 4. * se
        assert abs(np.mean(out['regime'] == 0) - 0.3) < 0.01

    def test_exact_loss_probability(self):
        spec = pool.PoolSpec(100, 0.05, 0.2)
        tranche = pool.TrancheSpec(0.1, 1.)
        n = 100000
        exact = pool.tranche_loss_probability(spec, tranche)
        out = pool.simulate(spec, tranche, n_reps=n, seed=8, signal='none')
        est = np.mean(out['tranche_loss'] > 0.)
        assert 0. < exact < 1.
        assert abs(est - exact) <= 4. * np.sqrt(exact * (1. - exact) / n)

    def test_invalid(self, senior):
        spec = pool.PoolSpec(100, 0.05, 0.2)
        with pytest.raises(ValueError):
            pool.simulate(spec, senior, n_reps=0, seed=1)
        with pytest.raises(ValueError):
            pool.simulate(spec, senior, -1., n_reps=10, seed=1)
        with pytest.raises(ValueError):
            pool.simulate(spec, senior, n_reps=10, seed=1, signal='oracle')
        with pytest.raises(TypeError):
            pool.simulate(spec, senior, n_reps=10)
        with pytest.raises(TypeError):
            pool.simulate(spec, None, n_reps=10, seed=1)


class TestMetrics:

    @pytest.fixture
    def outcomes(self, senior):
        return pool.simulate(pool.PoolSpec(100, 0.05, 0.2), senior, 0.5,
                             n_reps=50000, seed=9)

    def test_accept_all(self, outcomes):
        m = pool.estimate_metrics(outcomes, -np.inf)
        assert m['sensitivity'] == 1.
        assert m['false_positive_rate'] == 1.
        assert m['counts']['tp'] + m['counts']['fp'] == 50000

    def test_count_identity(self, outcomes):
        t = pool.threshold_for_fpr(outcomes, 0.1)
        m = pool.estimate_metrics(outcomes, t)
        pi = m['base_rate']
        s, f = m['sensitivity'], m['false_positive_rate']
        assert_allclose(m['ppv'] * (s * pi + f * (1. - pi)), s * pi,
                        rtol=1e-12)
        assert_allclose(m['ppv'], bounds.ppv_from_lambda(pi, m['discrimination']),
                        rtol=1e-12)

    def test_intervals(self, outcomes):
        m = pool.estimate_metrics(outcomes, pool.threshold_for_fpr(outcomes, 0.2))
        for key in ('sensitivity', 'false_positive_rate', 'discrimination',
                    'ppv'):
            lo, hi = m[key + '_ci']
            assert lo <= m[key] <= hi
        assert m['false_positive_rate'] == pytest.approx(0.2, abs=0.01)

    def test_degenerate(self, senior):
        out = pool.simulate(pool.PoolSpec(100, 0., 0.2), senior, n_reps=100,
                            seed=1)
        assert np.all(out['event'] == 1)
        with pytest.raises(pool.DegenerateSampleError):
            pool.estimate_metrics(out, 0.)
        with pytest.raises(pool.DegenerateSampleError):
            pool.threshold_for_fpr(out, 0.1)

    @pytest.mark.slow
    def test_binormal_matched(self):
        config = _config("binormal_matched.json")
        seed = storage.load_data("binormal_matched.json")["seed"]
        out = pool.simulate_config(config, 1000000, seed)

        t = pool.threshold_for_fpr(out, config['threshold']['fpr'])
        m = pool.estimate_metrics(out, t, confidence=0.95)

        pi = m['base_rate']
        s, f = m['sensitivity'], m['false_positive_rate']
        assert_allclose(m['ppv'] * (s * pi + f * (1. - pi)), s * pi,
                        rtol=1e-12)
        assert_allclose(m['ppv'], bounds.ppv_from_lambda(pi, m['discrimination']),
                        rtol=1e-12)

        model = binormal.BinormalModel(config['dprime'])
        predicted = binormal.lambda_at_fpr(model, 1e-3)['discrimination']
        assert predicted == pytest.approx(101., abs=1.)
        lo, hi = m['discrimination_ci']
        assert lo <= predicted <= hi


class TestCorrelation:

    @pytest.mark.slow
    def test_frozen_config(self):
        data = storage.load_data("pool_sensitivity.json")
        config = pool.pool_config(data)
        base = config['mixture'].specs[0]
        sens = config['sensitivity']
        res = pool.correlation_sensitivity(base.replace(rho=sens["rho_low"]),
                                           base.replace(rho=sens["rho_high"]),
                                           config["tranche"], 1000000,
                                           data["seed"])
        assert res['lower'] >= 10.
        assert res['p_high'] > res['p_low']

    def test_equal_rho(self):
        spec = pool.PoolSpec(100, 0.05, 0.2)
        res = pool.correlation_sensitivity(spec, spec, pool.TrancheSpec(0.1, 1.),
                                           20000, 10)
        assert res['ratio'] == 1.
        assert res['lower'] <= 1. <= res['upper']
        assert not res['censored']

    def test_equity(self):
        spec = pool.PoolSpec(100, 0.02, 0.05)
        res = pool.correlation_sensitivity(spec, spec.replace(rho=0.45),
                                           pool.TrancheSpec(0., 1.), 20000, 11)
        assert 0.1 < res['ratio'] < 2.

    def test_specs_must_match(self, senior):
        with pytest.raises(ValueError):
            pool.correlation_sensitivity(pool.PoolSpec(100, 0.02, 0.05),
                                         pool.PoolSpec(50, 0.02, 0.45),
                                         senior, 100, 1)


class TestCeilingExperiment:

    @pytest.fixture
    def spec(self):
        return pool.PoolSpec(50, 0.2, 0.1)

    def test_identical_tranches(self, spec):
        tr = pool.TrancheSpec(0.15, 1.)
        exp = pool.tranche_event_ceiling_experiment(spec, tr, tr, 1.,
                                                    n_reps=50000, seed=12,
                                                    n_bins=4)
        assert exp['ceiling_shallow'] == exp['ceiling_deep']
        assert_allclose(exp['space_shallow'].p0, exp['space_deep'].p0)
        assert exp['ceiling_shallow'] > 1.

    def test_single_bin(self, spec):
        exp = pool.tranche_event_ceiling_experiment(
            spec, pool.TrancheSpec(0.15, 1.), pool.TrancheSpec(0.25, 1.), 1.,
            n_reps=20000, seed=13, n_bins=1)
        assert exp['ceiling_shallow'] == pytest.approx(1.)
        assert exp['ceiling_deep'] == pytest.approx(1.)

    def test_event_changes_ceiling(self, spec):
        exp = pool.tranche_event_ceiling_experiment(
            spec, pool.TrancheSpec(0.15, 1.), pool.TrancheSpec(0.25, 1.), 1.,
            n_reps=100000, seed=14, n_bins=4)
        assert exp['ceiling_shallow'] != exp['ceiling_deep']
        assert len(exp['edges']) == 3

    def test_order_checked(self, spec):
        with pytest.raises(ValueError):
            pool.tranche_event_ceiling_experiment(
                spec, pool.TrancheSpec(0.25, 1.), pool.TrancheSpec(0.15, 1.),
                1., n_reps=100, seed=1, n_bins=2)

    def test_coarser_binning(self, spec):
        out = pool.simulate(spec, pool.TrancheSpec(0.15, 1.), 1.,
                            n_reps=100000, seed=15)
        coarse = pool.bin_signal(out['signal'], 4)
        fine = pool.bin_signal(out['signal'], 8)
        assert_allclose(coarse['edges'], fine['edges'][1::2])

        c = pool.empirical_space(coarse['bins'], out['event'], 4)
        f = pool.empirical_space(fine['bins'], out['event'], 8)
        assert discrete.esssup_lambda(c) <= \
            discrete.esssup_lambda(f) * (1. + 1e-12)

    def test_empty_bin(self):
        with pytest.raises(pool.DegenerateSampleError):
            pool.empirical_space(np.array([0, 0, 2]), np.array([0, 1, 0]), 3)


class TestConfig:

    def test_bundled(self):
        config = _config("pool_sensitivity.json")
        assert len(config['mixture']) == 1
        assert config['tranche'].attachment == 0.15
        assert config['sensitivity']['rho_high'] == 0.45
        assert config['threshold'] is None

        config = _config("binormal_matched.json")
        assert config['signal'] == 'binormal'
        assert config['threshold'] == {"fpr": 0.001}

    def test_missing_field(self):
        with pytest.raises(ValueError):
            pool.pool_config({"regimes": [{"n_loans": 10, "pd": 0.1}],
                              "tranche": {"attachment": 0., "detachment": 1.}})

    def test_bad_signal(self):
        data = storage.load_data("pool_sensitivity.json")
        data["signal"] = {"kind": "oracle"}
        with pytest.raises(ValueError):
            pool.pool_config(data)

    def test_load(self, tmp_path):
        path = str(tmp_path / "pool.json")
        storage.dumpJSON(storage.load_data("binormal_matched.json"), path)
        config = pool.load_pool_config(path)
        assert config['dprime'] == pytest.approx(1.8124, abs=1e-4)

    def test_summarize(self):
        config = _config("binormal_matched.json")
        table = pool.summarize(config, 20000, 1)
        assert list(table.columns) == ['name', 'estimate', 'ci_low', 'ci_high',
                                       'n_reps', 'seed']
        names = list(table['name'])
        assert names[:4] == ['base_rate', 'tranche_loss_probability',
                             'exact_tranche_loss_probability', 'mean_pool_loss']
        assert 'discrimination' in names
        assert np.all(table['seed'] == 1)

        rows = table.set_index('name')['estimate']
        assert rows['base_rate'] + rows['tranche_loss_probability'] == \
            pytest.approx(1.)
        assert rows['tranche_loss_probability'] == pytest.approx(
            rows['exact_tranche_loss_probability'], abs=0.02)

    def test_summarize_reuses_outcomes(self):
        config = _config("binormal_matched.json")
        out = pool.simulate_config(config, 5000, 2)
        a = pool.summarize(config, 5000, 2)
        b = pool.summarize(config, 5000, 2, outcomes=out)
        assert a.equals(b)

        with pytest.raises(ValueError):
            pool.summarize(config, 4000, 2, outcomes=out)

    def test_summarize_deep_tranche(self):
        data = storage.load_data("pool_sensitivity.json")
        del data["sensitivity"]
        data["regimes"][0].update(n_loans=50, pd=0.2, rho=0.1)
        data["signal_noise_sd"] = 1.
        data["deep_tranche"] = {"attachment": 0.25, "detachment": 1.,
                                "n_bins": 4}
        table = pool.summarize(pool.pool_config(data), 50000, 3)
        names = list(table['name'])
        assert 'ceiling_shallow' in names and 'ceiling_deep' in names
