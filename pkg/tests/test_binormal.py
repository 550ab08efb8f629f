# -*- coding: utf-8 -*-
"""
tests.test_binormal
-------------------

Equal-variance binormal model.

:copyright: (c) 2026 by the certbounds developers
:license: BSD 3-clause, see LICENSE for more details.
"""

# Imports
# 3rd party
import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy import stats

# local
from certbounds import binormal, bounds


class TestNormal:

    def test_cdf(self):
        assert binormal.normal_cdf(0.) == 0.5
        assert binormal.normal_cdf(-3.0902) == pytest.approx(1e-3, rel=1e-3)
        assert binormal.normal_cdf(1.28155) == pytest.approx(0.9, abs=1e-5)

    def test_cdf_matches_scipy(self):
        z = np.linspace(-8., 8., 1001)
        assert_allclose(binormal.normal_cdf(z), stats.norm.cdf(z),
                        rtol=1e-13, atol=1e-14)

    def test_quantile(self):
        assert binormal.normal_quantile(0.5) == pytest.approx(0., abs=1e-15)
        assert binormal.normal_quantile(0.9) == pytest.approx(1.281552, abs=1e-6)
        assert binormal.normal_quantile(1e-4) == pytest.approx(-3.719016,
                                                               abs=1e-6)

    def test_quantile_consistency(self):
        p = np.concatenate([np.logspace(-10, -1, 50), np.linspace(0.1, 0.9, 50)])
        z = binormal.normal_quantile(p)
        assert_allclose(binormal.normal_cdf(z), p, rtol=1e-12)
        assert_allclose(binormal.normal_quantile(1. - p[p > 1e-6]),
                        -z[p > 1e-6], rtol=1e-10, atol=1e-12)

    @pytest.mark.parametrize("p", [0., 1., -0.5])
    def test_quantile_domain(self, p):
        with pytest.raises(ValueError):
            binormal.normal_quantile(p)


class TestAUC:

    def test_dprime(self):
        assert binormal.dprime_from_auc(0.85) == pytest.approx(1.4657, abs=1e-4)
        assert binormal.dprime_from_auc(0.99) == pytest.approx(3.2897, abs=1e-3)
        assert binormal.dprime_from_auc(0.5) == 0.

    def test_auc(self):
        assert binormal.auc_from_dprime(0.) == 0.5
        assert binormal.auc_from_dprime(1.8124) == pytest.approx(0.9, abs=1e-4)
        assert binormal.auc_from_dprime(2.3263) == pytest.approx(0.95, abs=1e-4)

    def test_round_trip(self):
        for d in np.linspace(0., 5., 101):
            auc = binormal.auc_from_dprime(d)
            if auc >= 1.:
                continue
            assert binormal.dprime_from_auc(auc) == pytest.approx(d, abs=1e-10)

    @pytest.mark.parametrize("auc", [0.4, 1., 1.2])
    def test_auc_domain(self, auc):
        with pytest.raises(ValueError):
            binormal.dprime_from_auc(auc)

    def test_negative_dprime(self):
        with pytest.raises(ValueError):
            binormal.auc_from_dprime(-1.)
        with pytest.raises(ValueError):
            binormal.BinormalModel(-0.1)

    def test_model(self):
        model = binormal.BinormalModel.from_auc(0.9)
        assert model.dprime == pytest.approx(1.8124, abs=1e-4)
        assert model.auc == pytest.approx(0.9, abs=1e-12)


class TestThreshold:

    @pytest.mark.parametrize("auc, fpr, expected", [
        (0.90, 1e-3, 101.),
        (0.99, 1e-3, 579.),
        (0.99, 1e-4, 3339.),
    ])
    def test_table_values(self, auc, fpr, expected):
        model = binormal.BinormalModel.from_auc(auc)
        out = binormal.lambda_at_fpr(model, fpr)
        assert abs(out['discrimination'] - expected) <= 1.
        assert out['fpr'] == pytest.approx(fpr, rel=1e-10)
        assert out['threshold'] == pytest.approx(-binormal.normal_quantile(fpr))

    def test_uninformative(self):
        model = binormal.BinormalModel(0.)
        for f in (0.5, 1e-3, 1e-6):
            assert binormal.lambda_at_fpr(model, f).discrimination == \
                pytest.approx(1.)
        assert binormal.lambda_at_threshold(model, 1.5) == pytest.approx(1.)

    def test_threshold_values(self):
        assert binormal.lambda_at_threshold(
            binormal.BinormalModel(1.8124), 3.0902) == pytest.approx(100.6,
                                                                     abs=0.2)
        assert binormal.lambda_at_threshold(
            binormal.BinormalModel(3.2897), 3.0902) == pytest.approx(579.,
                                                                     abs=1.)

    def test_monotone_in_threshold(self):
        model = binormal.BinormalModel(1.5)
        t = np.linspace(-5., 10., 1000)
        lam = binormal.lambda_at_threshold(model, t)
        assert np.all(np.diff(lam) > 0)

    def test_below_model_free_cap(self):
        for auc in (0.7, 0.85, 0.9, 0.95, 0.99):
            model = binormal.BinormalModel.from_auc(auc)
            for f in (0.1, 1e-3, 1e-4):
                lam = binormal.lambda_at_fpr(model, f).discrimination
                assert lam < bounds.model_free_lambda_cap(f)

    def test_nonfinite_threshold(self):
        with pytest.raises(ValueError):
            binormal.lambda_at_threshold(binormal.BinormalModel(1.), np.inf)

    def test_roc_points(self):
        model = binormal.BinormalModel.from_auc(0.9)
        pts = binormal.roc_points(model, [1e-3, 1e-4])
        assert pts['discrimination'].shape == (2, )
        assert pts['discrimination'][1] > pts['discrimination'][0]

    def test_monte_carlo_concordance(self):
        model = binormal.BinormalModel.from_auc(0.9)
        n = 1000000
        out = binormal.lambda_at_fpr(model, 0.01)
        s0, s1 = binormal.sample_scores(model, n, random_state=2024)

        for scores, p in ((s0, out['fpr']), (s1, out['sensitivity'])):
            est = np.mean(scores >= out['threshold'])
            se = np.sqrt(p * (1. - p) / n)
            assert abs(est - p) <= 4. * se
