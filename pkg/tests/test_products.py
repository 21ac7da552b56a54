import pytest
from hypothesis import given, settings, strategies as st

from qzeta.algebra.coeffs import H, LaurentPoly
from qzeta.algebra.products import (ProductKind, apply_H, apply_T, apply_T_inverse, lincomb_product, product,
                                    q_quasi_shuffle, q_shuffle, quasi_shuffle, shuffle, shuffle_mass)
from qzeta.algebra.words import LinComb, weight
from qzeta.commons.exception import QZetaError
from qzeta.identities.euler import mod_q_shuffle
from qzeta.identities.word_laws import verify_word_laws

small_words = st.lists(st.integers(min_value=-2, max_value=2), min_size=1, max_size=2).map(tuple)


class TestClassical(object):

    def test_shuffle(self):
        result = shuffle((0, 1), (1,))
        assert result == LinComb([((0, 1, 1), 2), ((1, 0, 1), 1)])
        assert sum(result.terms.values()) == shuffle_mass((0, 1), (1,))

    def test_quasi_shuffle(self):
        assert quasi_shuffle((2,), (3,)) == LinComb([((2, 3), 1), ((3, 2), 1), ((5,), 1)])


class TestQShuffle(object):

    def test_py_py(self):
        assert q_shuffle((1,), (1,)) == LinComb([((1, 1), 2), ((1, 0), -1)])

    def test_y_y(self):
        assert q_shuffle((0,), (0,)) == LinComb.single((0, 0))

    def test_graded_py_py(self):
        result = q_shuffle((1,), (1,), graded=True)
        assert result.coeff((1, 0)) == -H
        assert result.coeff((1, 1)) == LaurentPoly.constant(2)

    def test_empty_word_is_unit(self):
        assert q_shuffle((), (2, -1)) == LinComb.single((2, -1))

    @settings(max_examples=30, deadline=None)
    @given(small_words, small_words)
    def test_commutes(self, u, v):
        assert q_shuffle(u, v) == q_shuffle(v, u)

    @settings(max_examples=15, deadline=None)
    @given(small_words, small_words, small_words)
    def test_associates(self, u, v, w):
        lhs = lincomb_product(q_shuffle(u, v), LinComb.single(w), ProductKind.Q_SHUFFLE)
        rhs = lincomb_product(LinComb.single(u), q_shuffle(v, w), ProductKind.Q_SHUFFLE)
        assert lhs == rhs

    @settings(max_examples=30, deadline=None)
    @given(small_words, small_words)
    def test_graded_is_homogeneous(self, u, v):
        for w, c in q_shuffle(u, v, graded=True).items():
            assert all(e + weight(w) == weight(u) + weight(v) for e in c.exponents())


class TestQQuasiShuffle(object):

    @pytest.mark.parametrize("a, b", [(1, 1), (2, 3), (-1, 2), (0, -2)])
    def test_single_letters(self, a, b):
        assert q_quasi_shuffle((a,), (b,)) == mod_q_shuffle(a, b)

    @settings(max_examples=30, deadline=None)
    @given(small_words, small_words)
    def test_t_compatibility(self, u, v):
        lhs = apply_T(q_quasi_shuffle(u, v, graded=True), h_graded=True)
        rhs = lincomb_product(apply_T(LinComb.single(u), h_graded=True), apply_T(LinComb.single(v), h_graded=True),
                              ProductKind.QUASI_SHUFFLE)
        assert lhs == rhs

    def test_t_inverse(self):
        l = LinComb.single((3, 1))
        round_trip = apply_T(apply_T_inverse(l, h_graded=True, depth_cap=4), h_graded=True)
        assert round_trip - l.graded_copy() == LinComb.single((-2, 1), -LaurentPoly.h_power(5), graded=True)


class TestOperators(object):

    def test_apply_H(self):
        l = LinComb([((2, -1), 1), ((0,), 3)])
        forward = apply_H(l)
        assert forward.coeff((2, -1)) == H
        assert apply_H(forward, "inverse").at_one() == l

    def test_apply_H_direction(self):
        with pytest.raises(QZetaError):
            apply_H(LinComb.single((1,)), "sideways")

    def test_product_dispatch(self):
        assert product((1,), (1,), "qshuffle") == q_shuffle((1,), (1,))
        assert product((2,), (3,), ProductKind.QUASI_SHUFFLE) == quasi_shuffle((2,), (3,))

    def test_unknown_product(self):
        with pytest.raises(QZetaError):
            ProductKind.from_name("tensor")


class TestWordLaws(object):

    @pytest.fixture
    def sample(self):
        return [(1,), (0,), (-1,), (2, -1), (1, 0)]

    @pytest.mark.parametrize("kind", list(ProductKind.__members__.values())[2:])
    def test_q_products(self, sample, kind):
        report = verify_word_laws(kind, sample)
        assert report.passed, report.to_dict()

    def test_shuffle_x(self):
        report = verify_word_laws(ProductKind.SHUFFLE_X, [(0,), (1,), (0, 1), (1, 1)])
        assert report.passed

    def test_sampled_triples_note(self, sample):
        report = verify_word_laws(ProductKind.Q_SHUFFLE, sample, seed=3, max_triples=20)
        assert report.passed
        assert any("seeded triples" in note for note in report.notes)
