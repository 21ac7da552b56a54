import math
from fractions import Fraction

import mpmath
import pytest

from qzeta.algebra.powerseries import ps_eval_at
from qzeta.algebra.words import LinComb
from qzeta.commons.exception import QZetaError, ErrorCodes
from qzeta.evaluator.config import EvalConfig
from qzeta.evaluator.numeric import convergence_bound, numeric_eval, numeric_lincomb, zeta_numeric
from qzeta.evaluator.series import zbar_series

ERDOS_BORWEIN = 1.6066951524152917


@pytest.fixture
def half():
    return EvalConfig(q0=Fraction(1, 2), term_cap=10)


class TestNumericEval(object):

    def test_exact_geometric(self, half):
        result = numeric_eval((0,), half)
        assert result.exact
        assert result.value == Fraction(1023, 1024)
        assert result.tail == pytest.approx(2.0 ** -10)

    def test_matches_truncated_series(self, half):
        series = zbar_series((0,), half.replace(order=10))
        assert numeric_eval((0,), half).value == ps_eval_at(series, Fraction(1, 2))

    def test_float_matches_exact(self, half):
        exact = numeric_eval((2, 1), half.replace(term_cap=40))
        approx = numeric_eval((2, 1), half.replace(q0=0.5, term_cap=40))
        assert not approx.exact
        assert approx.value == pytest.approx(float(exact.value), rel=1e-12)

    @pytest.mark.parametrize("w", [(2,), (1, -1), (-2, 1)])
    def test_tail_bound_holds(self, w):
        cfg = EvalConfig(q0=0.5, term_cap=12)
        short, long = numeric_eval(w, cfg), numeric_eval(w, cfg.replace(term_cap=200))
        assert abs(long.value - short.value) <= short.tail

    def test_needs_a_point(self):
        with pytest.raises(QZetaError) as error:
            numeric_eval((2,), EvalConfig())
        assert error.value.error_code is ErrorCodes.ERR_INVALID_ARGUMENT

    def test_schlesinger(self):
        cfg = EvalConfig(model="schlesinger", q0=2.0, term_cap=60)
        assert numeric_eval((1,), cfg).value == pytest.approx(ERDOS_BORWEIN, abs=1e-12)
        exact = numeric_eval((1,), cfg.replace(q0=Fraction(2), term_cap=30))
        assert float(exact.value) == pytest.approx(ERDOS_BORWEIN, abs=1e-8)

    @pytest.mark.parametrize("w, violated", [((0,), "n_1 >= 1"), ((1, -1), "n_2 >= 0"), ((2, 1, -3), "n_3 >= 0")])
    def test_schlesinger_domain(self, w, violated):
        with pytest.raises(QZetaError) as error:
            numeric_eval(w, EvalConfig(model="schlesinger", q0=2.0))
        assert error.value.error_code is ErrorCodes.ERR_DOMAIN
        assert violated in error.value.message
        assert "n_1 >= 1, n_j >= 0 (widened from n_1 >= 2, n_j >= 1)" in error.value.message

    def test_widened_schlesinger_domain_evaluates(self):
        cfg = EvalConfig(model="schlesinger", q0=Fraction(2), term_cap=20)
        assert numeric_eval((1, 0), cfg).value > 0

    def test_nonmodified_outside_the_disc(self):
        cfg = EvalConfig(model="nonmodified", q0=2.0, term_cap=60)
        assert math.isfinite(numeric_eval((2,), cfg).value)
        with pytest.raises(QZetaError) as error:
            numeric_eval((1,), cfg)
        assert error.value.error_code is ErrorCodes.ERR_DOMAIN

    def test_lincomb_prefactor(self, half):
        result = numeric_lincomb(LinComb([((0,), 2)]), half, prefactor_power=1)
        assert result.value == Fraction(1023, 1024)

    def test_convergence_bound(self):
        assert convergence_bound((0,), 0.5) == pytest.approx(1.0)
        assert convergence_bound((2, -1), 0.5) == pytest.approx(0.25 * 2.0 ** 4)


class TestZetaNumeric(object):

    def test_depth_one(self):
        assert zeta_numeric((2,), term_cap=1000).value == pytest.approx(math.pi ** 2 / 6, rel=1e-12)

    def test_enclosure(self):
        # Euler: zeta(2, 1) = zeta(3)
        result = zeta_numeric((2, 1), term_cap=1000)
        assert abs(result.value - float(mpmath.zeta(3))) <= result.tail + 1e-12
        assert result.tail < 0.01

    def test_divergent(self):
        with pytest.raises(QZetaError) as error:
            zeta_numeric((1, 2))
        assert error.value.error_code is ErrorCodes.ERR_DIVERGENT_WORD
