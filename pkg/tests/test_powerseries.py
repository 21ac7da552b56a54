from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qzeta.algebra.powerseries import (QSeries, XSeries, ps_arith, ps_delta, ps_eval_at, ps_expand_factor,
                                       ps_pow_one_minus_q)
from qzeta.commons.exception import QZetaError, ErrorCodes

coefficients = st.lists(st.integers(min_value=-5, max_value=5), min_size=1, max_size=8)


class TestQSeries(object):

    @pytest.fixture
    def geometric(self):
        return QSeries([1] * 9, 8)

    def test_truncation_is_the_smaller_order(self):
        a, b = QSeries([1, 1, 1], 2), QSeries([1, 2, 3, 4], 3)
        assert ps_arith(a, b, "add").order == 2
        assert ps_arith(a, b, "mul").coeffs == (1, 3, 6)

    def test_inverse(self, geometric):
        assert geometric.inverse() == QSeries([1, -1], 8)

    def test_not_invertible(self):
        with pytest.raises(QZetaError) as error:
            QSeries([0, 1], 3).inverse()
        assert error.value.error_code is ErrorCodes.ERR_NOT_INVERTIBLE

    def test_delta(self, geometric):
        assert ps_delta(geometric).coeffs == tuple(range(9))

    def test_shift(self):
        assert QSeries([1, 2, 3], 3).shift(2).coeffs == (0, 0, 1, 2)

    def test_beyond_order(self):
        with pytest.raises(QZetaError):
            QSeries([1], 2)[3]

    def test_json(self):
        doc = QSeries([0, Fraction(1, 2), -3], 2).to_json()
        assert doc == {"var": "q", "order": 2, "coeffs": ["0", "1/2", "-3"]}
        assert QSeries.from_json(doc) == QSeries([0, Fraction(1, 2), -3], 2)

    def test_xseries_json(self):
        doc = XSeries([1, 1], 1).to_json()
        assert doc["var"] == "x"
        with pytest.raises(QZetaError):
            QSeries.from_json(doc)

    @settings(max_examples=40, deadline=None)
    @given(coefficients, coefficients)
    def test_product_commutes(self, a, b):
        a, b = QSeries(a, 7), QSeries(b, 7)
        assert a * b == b * a

    @settings(max_examples=40, deadline=None)
    @given(coefficients, coefficients)
    def test_delta_is_a_derivation(self, a, b):
        a, b = QSeries(a, 7), QSeries(b, 7)
        assert (a * b).delta() == a.delta() * b + a * b.delta()


class TestFactors(object):

    def test_expand_factor(self):
        assert ps_expand_factor(2, 1, 6).coeffs == (1, 0, 1, 0, 1, 0, 1)
        assert ps_expand_factor(1, 2, 4).coeffs == (1, 2, 3, 4, 5)
        assert ps_expand_factor(3, -2, 6).coeffs == (1, 0, 0, -2, 0, 0, 1)

    def test_expand_factor_inverse(self):
        assert ps_expand_factor(2, 3, 10) * ps_expand_factor(2, -3, 10) == QSeries.one(10)

    def test_bad_m(self):
        with pytest.raises(QZetaError) as error:
            ps_expand_factor(0, 1, 5)
        assert error.value.error_code is ErrorCodes.ERR_INVALID_ARGUMENT

    def test_negative_order(self):
        with pytest.raises(QZetaError):
            ps_expand_factor(1, 1, -1)

    def test_pow_one_minus_q(self):
        assert ps_pow_one_minus_q(2, 3).coeffs == (1, -2, 1, 0)
        assert ps_pow_one_minus_q(-1, 3).coeffs == (1, 1, 1, 1)

    def test_eval(self):
        assert ps_eval_at(QSeries([1, 2, 3], 2), Fraction(1, 2)) == Fraction(11, 4)
        assert ps_eval_at(QSeries([1, 2, 3], 2), 0.5) == pytest.approx(2.75)
