import json
from fractions import Fraction

import pandas as pd
import pytest

from qzeta.algebra.powerseries import QSeries, XSeries
from qzeta.algebra.products import q_shuffle
from qzeta.commons.reports.report import Report
from qzeta.commons.reports.report_check import Report_Check
from qzeta.commons.reports.report_expand import Report_Expand
from qzeta.commons.reports.report_factory import Report_Factory
from qzeta.commons.reports.report_numeric import Report_Numeric
from qzeta.commons.reports.report_series import Report_Series
from qzeta.evaluator.numeric import NumericResult
from qzeta.identities.checks import CheckReport
from qzeta.identities.suites import SuiteRun


@pytest.fixture
def run():
    reports = [CheckReport("good", {"a": 1}, True, notes=["agrees"]),
               CheckReport("bad", {"a": 2}, False, witness={"degree": 4, "lhs": "1", "rhs": "0"},
                           notes=["differs"])]
    return SuiteRun("euler", {"order": 6}, reports)


class TestReport(object):

    def test_df_to_md(self):
        table = Report(None).df_to_md(pd.DataFrame({"x": ["1", "22"]}, index=[1, 2]))
        lines = table.split("\n")
        assert len(lines) == 4
        assert lines[1].startswith("|---|")
        assert len({len(line) for line in lines}) == 1

    def test_empty_table(self):
        assert Report(None).df_to_md(pd.DataFrame()) == "(empty)"

    def test_unknown_output_type_falls_back_to_text(self):
        assert Report(None, "html").output_type == "text"


class TestFactory(object):

    @pytest.mark.parametrize("obj, cls", [
        (q_shuffle((1,), (1,)), Report_Expand),
        (QSeries([0, 1], 3), Report_Series),
        (XSeries([1, 1], 3), Report_Series),
        (NumericResult(Fraction(1, 2), 0.0, True, 10), Report_Numeric),
    ])
    def test_dispatch(self, obj, cls):
        assert isinstance(Report_Factory(obj), cls)

    def test_dispatch_run(self, run):
        assert isinstance(Report_Factory(run, "json"), Report_Check)


class TestRendering(object):

    def test_expand(self):
        text = Report_Factory(q_shuffle((1,), (1,))).create_report()
        assert text.startswith("# 2 words over Q")
        assert "2 p y p y - p y y" in text

    def test_expand_json(self):
        doc = json.loads(Report_Factory(q_shuffle((1,), (1,)), "json").create_report())
        assert doc["ring"] == "Q"
        assert {"word": [1, 0], "coeff": "-1"} in doc["terms"]

    def test_series_json(self):
        doc = json.loads(Report_Factory(QSeries([0, 1, Fraction(1, 2)], 2), "json").create_report())
        assert doc == {"var": "q", "order": 2, "coeffs": ["0", "1", "1/2"]}

    def test_series_text(self):
        text = Report_Factory(XSeries([1, 1], 1)).create_report()
        assert text.startswith("# series in x")

    def test_numeric_json(self):
        doc = json.loads(Report_Factory(NumericResult(Fraction(1, 2), 0.25, True, 10), "json").create_report())
        assert doc == {"value": "1/2", "tail": 0.25, "exact": True, "term_cap": 10}

    def test_check_text(self, run):
        text = Report_Factory(run).create_report()
        assert text.startswith("# qzeta - euler")
        assert "2 checks, 1 passed, 1 failed" in text
        assert "FAIL" in text and "degree=4" in text
        # failing checks lead the notes
        assert text.index("differs") < text.index("agrees")

    def test_check_json(self, run):
        doc = json.loads(Report_Factory(run, "json").create_report())
        assert doc["suite"] == "euler" and doc["pass"] is False
        assert [r["name"] for r in doc["reports"]] == ["good", "bad"]
