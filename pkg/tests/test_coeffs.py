from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qzeta.algebra.coeffs import (H, LaurentPoly, format_rational, laurent_arith, laurent_substitute,
                                  parse_rational, rat_arith)
from qzeta.algebra.powerseries import QSeries, ps_pow_one_minus_q
from qzeta.commons.exception import QZetaError, ErrorCodes

rationals = st.fractions(max_denominator=50).filter(lambda r: abs(r) < 1000)


class TestRational(object):

    def test_arith(self):
        assert rat_arith(Fraction(1, 2), Fraction(1, 3), "add") == Fraction(5, 6)
        assert rat_arith(Fraction(1, 2), Fraction(1, 3), "sub") == Fraction(1, 6)
        assert rat_arith("2/3", "3/4", "mul") == Fraction(1, 2)
        assert rat_arith(1, 4, "div") == Fraction(1, 4)

    def test_division_by_zero(self):
        with pytest.raises(QZetaError) as error:
            rat_arith(Fraction(3), Fraction(0), "div")
        assert error.value.error_code is ErrorCodes.ERR_DIVISION_BY_ZERO

    def test_unknown_operation(self):
        with pytest.raises(QZetaError) as error:
            rat_arith(1, 2, "pow")
        assert error.value.error_code is ErrorCodes.ERR_INVALID_ARGUMENT

    def test_format(self):
        assert format_rational(Fraction(6, -4)) == "-3/2"
        assert format_rational(Fraction(4, 2)) == "2"

    def test_parse_error(self):
        with pytest.raises(QZetaError) as error:
            parse_rational("1/0")
        assert error.value.error_code is ErrorCodes.ERR_PARSE

    @settings(max_examples=50, deadline=None)
    @given(rationals)
    def test_format_parse(self, r):
        assert parse_rational(format_rational(r)) == r


class TestLaurentPoly(object):

    @pytest.fixture
    def p(self):
        return LaurentPoly({-1: 2, 0: 1, 2: Fraction(1, 2)})

    def test_zero_terms_dropped(self):
        assert LaurentPoly({0: 1, 1: 0}).exponents() == (0,)
        assert (H - H).is_zero()

    def test_mul(self, p):
        product = laurent_arith(p, H, "mul")
        assert product == LaurentPoly({0: 2, 1: 1, 3: Fraction(1, 2)})

    def test_add_scalar(self, p):
        assert laurent_arith(p, LaurentPoly.constant(-1), "add") == LaurentPoly({-1: 2, 2: Fraction(1, 2)})
        assert p + 1 == 1 + p

    def test_at_one(self, p):
        assert p.at_one() == Fraction(7, 2)
        assert p.value_at(Fraction(1, 2)) == Fraction(4) + 1 + Fraction(1, 8)

    def test_text(self, p):
        assert str(p) == "2*h^-1 + 1 + 1/2*h^2"
        assert LaurentPoly.from_text(str(p)) == p

    @pytest.mark.parametrize("terms, text", [
        ({0: 1, 1: -1}, "1 - h"),
        ({1: -2}, "-2*h"),
        ({-2: -1, 0: Fraction(-1, 3), 3: 1}, "-h^-2 - 1/3 + h^3"),
    ])
    def test_negative_terms(self, terms, text):
        assert str(LaurentPoly(terms)) == text
        assert LaurentPoly.from_text(text) == LaurentPoly(terms)

    def test_signed_coefficients_are_read(self):
        assert LaurentPoly.from_text("1 + -1*h") == LaurentPoly({0: 1, 1: -1})
        with pytest.raises(QZetaError):
            LaurentPoly.from_text("1 - 2h")

    def test_hashable(self, p):
        assert len({p, LaurentPoly({-1: 2, 0: 1, 2: Fraction(1, 2)})}) == 1


class TestSubstitute(object):

    @pytest.fixture
    def one_minus_q(self):
        return QSeries([1, -1], 10)

    def test_inverse_power(self, one_minus_q):
        series = laurent_substitute(LaurentPoly.h_power(-2), one_minus_q, 10)
        assert series == ps_pow_one_minus_q(-2, 10)
        assert series.coeffs[:4] == (1, 2, 3, 4)

    def test_mixed(self, one_minus_q):
        p = LaurentPoly({-1: 1, 1: 1})
        assert laurent_substitute(p, one_minus_q, 10) == ps_pow_one_minus_q(-1, 10) + ps_pow_one_minus_q(1, 10)

    def test_not_invertible(self):
        with pytest.raises(QZetaError) as error:
            laurent_substitute(LaurentPoly.h_power(-1), QSeries([0, 1], 5), 5)
        assert error.value.error_code is ErrorCodes.ERR_NOT_INVERTIBLE

    def test_constant(self, one_minus_q):
        assert laurent_substitute(Fraction(3), one_minus_q, 4) == QSeries([3], 4)
