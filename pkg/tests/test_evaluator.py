from fractions import Fraction

import pytest

from qzeta.algebra.coeffs import H
from qzeta.algebra.powerseries import QSeries, XSeries
from qzeta.algebra.words import LinComb, enumerate_words
from qzeta.commons.exception import QZetaError, ErrorCodes
from qzeta.evaluator.config import EvalConfig, Model, Pathway, parse_q0
from qzeta.evaluator.series import eval_lincomb, nested_sum, qinverse_series, word_series, z_series, zbar_series


@pytest.fixture
def cfg():
    return EvalConfig(order=6)


class TestConfig(object):

    def test_defaults(self):
        cfg = EvalConfig()
        assert (cfg.order, cfg.term_cap, cfg.tolerance) == (20, 200, 0.05)
        assert cfg.pathway is Pathway.DIRECT_SUM and cfg.model is Model.MODIFIED and cfg.q0 is None

    def test_from_dict(self):
        cfg = EvalConfig.from_dict({"order": 8, "pathway": "both", "tol": 0.1, "q0": "1/3", "format": "json"})
        assert cfg.order == 8 and cfg.pathway is Pathway.BOTH
        assert cfg.tolerance == 0.1
        assert cfg.q0 == Fraction(1, 3) and cfg.exact

    def test_replace(self, cfg):
        other = cfg.replace(pathway="jackson", order=3)
        assert other.pathway is Pathway.JACKSON and other.order == 3
        assert cfg.order == 6

    @pytest.mark.parametrize("text, expected", [("1/2", Fraction(1, 2)), ("-3", Fraction(-3)), ("0.25", 0.25)])
    def test_parse_q0(self, text, expected):
        assert parse_q0(text) == expected
        assert type(parse_q0(text)) is type(expected)

    def test_parse_q0_garbage(self):
        with pytest.raises(QZetaError) as error:
            parse_q0("half")
        assert error.value.error_code is ErrorCodes.ERR_PARSE

    @pytest.mark.parametrize("changes", [{"order": -1}, {"term_cap": 0}, {"tolerance": 0}, {"pathway": "both ways"}])
    def test_invalid(self, changes):
        with pytest.raises(QZetaError) as error:
            EvalConfig(**changes)
        assert error.value.error_code is ErrorCodes.ERR_INVALID_ARGUMENT

    @pytest.mark.parametrize("model, q0", [("modified", "2"), ("schlesinger", "1/2")])
    def test_model_domain(self, model, q0):
        with pytest.raises(QZetaError) as error:
            EvalConfig(model=model, q0=q0)
        assert error.value.error_code is ErrorCodes.ERR_DOMAIN


class TestSeries(object):

    @pytest.mark.parametrize("w, expected", [
        ((), [1, 0, 0, 0, 0, 0, 0]),
        ((0,), [0, 1, 1, 1, 1, 1, 1]),
        ((1,), [0, 1, 2, 2, 3, 2, 4]),
        ((2,), [0, 1, 3, 4, 7, 6, 12]),
        ((-1,), [0, 1, 0, 1, 0, 1, 0]),
        ((1, 1), [0, 0, 1, 3]),
    ])
    def test_known_values(self, cfg, w, expected):
        assert zbar_series(w, cfg) == QSeries(expected)

    def test_pathways_agree(self, cfg):
        both = cfg.replace(pathway="both")
        for w in enumerate_words(2, -2, 2):
            assert zbar_series(w, both) == zbar_series(w, cfg.replace(pathway="jackson"))

    def test_nonmodified(self, cfg):
        assert z_series((2,), cfg.replace(order=3)) == QSeries([0, 1, 1, -1])
        assert word_series((2,), cfg.replace(order=3, model="nonmodified")) == QSeries([0, 1, 1, -1])

    def test_schlesinger_has_no_q_series(self, cfg):
        with pytest.raises(QZetaError) as error:
            word_series((2,), cfg.replace(model="schlesinger"))
        assert error.value.error_code is ErrorCodes.ERR_DOMAIN

    def test_laurent_coefficients(self, cfg):
        # h q / (1 - q) at h = 1 - q
        assert eval_lincomb(LinComb.single((0,), H, graded=True), cfg) == QSeries([0, 1], cfg.order)

    def test_rational_coefficients(self, cfg):
        l = LinComb([((1,), 2), ((0,), -1)])
        assert eval_lincomb(l, cfg) == QSeries([0, 1, 3, 3, 5, 3, 7])

    def test_nested_sum(self):
        # sum over m1 > m2 of m1 m2 for m in 1..3
        assert nested_sum([[1, 2, 3], [1, 2, 3]], 0) == 2 + 3 + 6


class TestQInverse(object):

    def test_nonmodified_two(self):
        value = qinverse_series((2,), 4)
        assert isinstance(value, XSeries)
        assert value.coeffs[:3] == (1, 1, -1)

    def test_schlesinger_one(self):
        assert qinverse_series((1,), 4, schlesinger=True).coeffs[:3] == (1, 1, 0)

    def test_divergent(self):
        with pytest.raises(QZetaError) as error:
            qinverse_series((1,), 4)
        assert error.value.error_code is ErrorCodes.ERR_DOMAIN

    def test_schlesinger_negative_index(self):
        with pytest.raises(QZetaError):
            qinverse_series((1, -1), 4, schlesinger=True)
