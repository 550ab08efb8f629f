# -*- coding: utf-8 -*-
"""
tests.test_reports
------------------

Benchmark tables, figure data and disclosures.

:copyright: (c) 2026 by the certbounds developers
:license: BSD 3-clause, see LICENSE for more details.
"""

# Imports
# built-in
import json
import os

# 3rd party
import numpy as np
import pytest
from numpy.testing import assert_allclose

# local
from certbounds import reports, storage


class TestRounding:

    def test_half_up(self):
        assert reports.round_half_up(23331., 100.) == 23300.
        assert reports.round_half_up(4250., 100.) == 4300.
        assert reports.round_half_up(0.5) == 1.
        assert reports.round_half_up(-2.5) == -3.

    def test_significant(self):
        assert reports.round_sig(14998.5) == 15000.
        assert reports.round_sig(101.0101) == 101.
        assert reports.round_sig(0.) == 0.

    def test_formatting(self):
        assert reports.format_count(10000.) == "10,000"
        assert reports.format_count(99.) == "99"
        assert reports.format_fixed(0.4975) == "0.50"
        assert reports.format_fixed(3.2897) == "3.29"


class TestTables:

    def test_table_1(self):
        t = reports.table_1()
        assert_allclose(t['lambda_req'], [1111., 4285.286, 9999., 23331.,
                                          89991.], rtol=1e-4)
        assert list(t['lambda_req_display']) == ["1,100", "4,300", "10,000",
                                                 "23,300", "90,000"]
        assert list(t['odds_factor_display']) == ["0.11", "0.43", "1.00",
                                                  "2.33", "9.00"]

    def test_table_2(self):
        t = reports.table_2()
        assert list(t['dprime_display']) == ["1.47", "1.81", "2.33", "3.29"]
        assert_allclose(t['lambda_fpr_0.001'], [52., 101., 222., 579.], atol=1.)
        assert_allclose(t['lambda_fpr_0.0001'], [121., 283., 818., 3339.],
                        atol=1.)
        assert t['lambda_fpr_0.001_display'][0] == "52"

    def test_table_2_monotone(self):
        t = reports.table_2()
        assert np.all(np.diff(t['lambda_fpr_0.001']) > 0)
        assert np.all(t['lambda_fpr_0.0001'] > t['lambda_fpr_0.001'])

    def test_table_3(self):
        t = reports.table_3()
        assert list(t['min_pi_display']) == ["0.50", "0.67", "0.91", "0.99"]
        assert list(t['lambda_req_pi_0.5_display']) == ["99", "199", "999",
                                                        "10,000"]
        assert list(t['lambda_req_pi_0.3_display']) == ["231", "464", "2,331",
                                                        "23,300"]
        assert_allclose(t['min_pi'][3], 0.9999 / 1.0099, rtol=1e-12)

    def test_table_4(self):
        t = reports.table_4()
        assert list(t['psi_display']) == ["100", "200", "500", "233", "466",
                                          "900"]
        assert_allclose(t['psi'][4], 23331. / 50., rtol=1e-4)

    def test_table_4_note(self):
        t = reports.table_4()
        flagged = [i for i, n in enumerate(t['note']) if n]
        assert flagged == [4]
        assert "467" in t['note'][4]

    def test_table_5(self):
        t = reports.table_5()
        assert len(t) == 3
        assert t['psi_range'][1] == "~100–470"
        assert t['psi'][0] < 1.
        assert t['psi'][1] == pytest.approx(99.99)

    def test_unknown_table(self):
        with pytest.raises(ValueError):
            reports.make_table(6)


class TestFigure:

    def test_values(self):
        f = reports.figure_1()
        assert list(f['lambda_req_display']) == [101., 10000., 15000.]
        assert list(f['lambda_avail_display']) == [300., 100., 80.]
        assert f['lambda_ach_display'][1] == pytest.approx(0.11)
        assert np.isnan(f['lambda_ach'][0])
        assert np.isnan(f['lambda_ach'][2])


class TestScenarios:

    def test_load(self):
        sc = reports.load_scenarios()
        assert "cdo_four_nines" in sc
        assert not sc["cdo_four_nines"].verdict()['feasible']
        assert sc["corporate_aaa"].verdict()['feasible']

    def test_infinite_ceiling(self):
        data = {"scenarios": [{"name": "perfect", "tau": 0.9999, "pi": 0.5,
                               "lambda_avail": "inf"}]}
        sc = reports.load_scenarios(data)["perfect"]
        assert np.isinf(sc.lambda_avail)
        v = sc.verdict()
        assert v['feasible']
        assert v['tension_psi'] == 0.
        assert v['rescue_pi'] is None

    def test_missing_field(self):
        with pytest.raises(ValueError):
            reports.Scenario.from_dict({"name": "x", "tau": 0.9})

    def test_bad_value(self):
        with pytest.raises(ValueError):
            reports.Scenario("x", tau=1., pi=0.5, lambda_avail=100.)


class TestDisclosure:

    def test_record(self):
        sc = reports.load_scenarios()["cdo_four_nines"]
        rec = reports.disclosure(sc)
        assert rec["certified_event"] == "no downgrade below AAA"
        assert rec["lambda_avail"]["kind"] == "unconstrained"
        assert rec["psi"]["estimate"] == pytest.approx(99.99)
        assert rec["psi"]["low"] == pytest.approx(99.99)
        assert rec["psi"]["high"] == pytest.approx(233.31)
        assert rec["feasible"] is False

    def test_deficit(self):
        rec = reports.disclosure(reports.load_scenarios()["cdo_retrospective"])
        assert rec["deficit"] == pytest.approx(0.9999 * 0.9 / (0.0001 * 0.1),
                                               rel=1e-9)

    def test_regimes(self):
        rec = reports.disclosure(
            reports.load_scenarios()["clo_stress_disclosure"])
        assert len(rec["regime_survival"]) == 4

    def test_type(self):
        with pytest.raises(TypeError):
            reports.disclosure("cdo_four_nines")

    def test_metadata(self):
        rep = reports.disclosures()
        assert rep["metadata"]["seeds"]["pool_sensitivity.json"] == 20080915
        assert len(rep["disclosures"]) == len(reports.load_scenarios())


class TestWriteReport:

    def test_files(self, tmp_path):
        paths = reports.write_report(str(tmp_path / "out"))
        names = [os.path.basename(p) for p in paths]
        assert names == ["table1.csv", "table2.csv", "table3.csv",
                         "table4.csv", "table5.csv", "figure1.csv",
                         "disclosure.json"]
        assert all(os.path.isfile(p) for p in paths)

        table = storage.load_csv(paths[0])
        assert list(table['lambda_req_display']) == ["1,100", "4,300",
                                                     "10,000", "23,300",
                                                     "90,000"]
        with open(paths[-1], encoding='utf-8') as fid:
            data = json.load(fid)
        assert "disclosures" in data

    def test_reproducible(self, tmp_path):
        first = reports.write_report(str(tmp_path / "a"))
        second = reports.write_report(str(tmp_path / "b"))
        for p, q in zip(first, second):
            with open(p, 'rb') as f1, open(q, 'rb') as f2:
                assert f1.read() == f2.read()

    def test_unwritable(self, tmp_path):
        blocker = tmp_path / "file"
        blocker.write_text("x")
        with pytest.raises(OSError) as exc:
            reports.write_report(str(blocker / "out"))
        assert "file" in str(exc.value)

    def test_missing_folder(self):
        with pytest.raises(TypeError):
            reports.write_report()
