from fractions import Fraction

import mpmath
import numpy as np
import pytest

from qzeta.algebra.words import LinComb, Y, enumerate_words
from qzeta.commons.exception import QZetaError, ErrorCodes
from qzeta.evaluator.config import EvalConfig
from qzeta.identities.checks import CheckReport
from qzeta.identities.derivations import step_recursion, telescoped
from qzeta.identities.elimination import (EliminationKind, GammaExpansion, ShapeEvaluator, both_zero,
                                          build_elimination_expansion, left_zero, right_zero)
from qzeta.identities.euler import EulerCoefficients, binomial, classical_euler, multinomial
from qzeta.identities.numeric_checks import (limit_term_cap, schlesinger_product, verify_convergence_bound,
                                             verify_limit, verify_limit_agreement, verify_schlesinger)
from qzeta.identities.operator_laws import random_element, verify_operator_laws
from qzeta.identities.relations import (verify_classical_euler, verify_derivation, verify_euler, verify_named,
                                        verify_regularization)
from qzeta.identities.suites import SUITES, SuiteContext, SuiteRun, build_jobs, run_suite
from qzeta.identities.word_laws import verify_homomorphism, verify_pathways, verify_zero_words


@pytest.fixture
def cfg():
    return EvalConfig(order=8)


class TestCheckReport(object):

    def test_combine_keeps_first_failure(self):
        good = CheckReport("a", {}, True, notes=["fine"])
        bad = CheckReport("b", {}, False, witness={"degree": 3, "lhs": "1", "rhs": "2"})
        report = CheckReport.combine("both", {"x": 1}, [good, bad])
        assert not report.passed
        assert report.witness == {"degree": 3, "lhs": "1", "rhs": "2", "check": "b"}
        assert "a: fine" in report.notes


class TestElimination(object):

    def test_bare_branches(self):
        assert build_elimination_expansion(0, 0, "DD") == GammaExpansion("DD", {both_zero(0): 1})
        assert build_elimination_expansion(2, 0, "PP") == GammaExpansion("PP", {right_zero(2, 0): 1})

    def test_leibniz_step(self):
        expansion = build_elimination_expansion(1, 1, EliminationKind.DD)
        assert expansion.coeff(left_zero(1, 0)) == 1
        assert expansion.coeff(right_zero(1, 0)) == 1
        assert expansion.coeff(both_zero(1)) == -1
        assert len(expansion) == 3

    def test_first_difference(self):
        one = GammaExpansion("DP", {left_zero(1, 0): 1})
        two = GammaExpansion("DP", {left_zero(1, 0): 2})
        assert one.first_difference(one) is None
        assert one.first_difference(two) == (left_zero(1, 0), 1, 2)

    @pytest.mark.parametrize("kind", list(EliminationKind))
    @pytest.mark.parametrize("a, b", [(1, 2), (2, 2), (3, 1)])
    def test_expansion_matches_direct_product(self, kind, a, b):
        rng = np.random.default_rng(7)
        f, g = random_element(rng, 7), random_element(rng, 7)
        evaluator = ShapeEvaluator(kind, f, g)
        assert build_elimination_expansion(a, b, kind).evaluate(f, g, evaluator) == evaluator.direct(a, b)

    def test_invalid(self):
        with pytest.raises(QZetaError):
            build_elimination_expansion(-1, 2, "DD")
        with pytest.raises(QZetaError):
            EliminationKind.from_name("QQ")


class TestOperatorLaws(object):

    def test_seeded_elements(self):
        first = random_element(np.random.default_rng(3), 5)
        assert first == random_element(np.random.default_rng(3), 5)
        assert first.in_algebra()

    def test_laws(self):
        report = verify_operator_laws(2, 3, EvalConfig(order=8), seed=1, samples=2)
        assert report.passed, report.to_dict()
        assert any("dd_slim(2,3)" in note for note in report.notes)

    def test_without_closed_forms(self):
        report = verify_operator_laws(1, 1, EvalConfig(order=6), samples=1)
        assert report.passed
        assert any("closed forms need" in note for note in report.notes)


class TestEuler(object):

    def test_combinatorics(self):
        assert binomial(4, 2) == 6 and binomial(2, 3) == 0 and binomial(-1, 0) == 0
        assert multinomial(4, (1, 1, 2)) == 12
        assert multinomial(4, (1, 1, 1)) == 0

    def test_coefficients_domain(self):
        with pytest.raises(QZetaError) as error:
            EulerCoefficients(1, 2)
        assert error.value.error_code is ErrorCodes.ERR_PRECONDITION

    @pytest.mark.parametrize("a, b", [(1, 1), (2, 3), (-1, 2), (0, 0)])
    def test_quasi(self, cfg, a, b):
        assert verify_euler(a, b, "quasi", cfg).passed

    @pytest.mark.parametrize("case", ["pos_pos", "neg_neg", "neg_pos"])
    def test_q_shuffle_oracle(self, cfg, case):
        report = verify_euler(2, 3, case, cfg)
        assert report.passed, report.to_dict()
        assert any(case in note for note in report.notes)

    def test_case_precondition(self, cfg):
        with pytest.raises(QZetaError) as error:
            verify_euler(3, 2, "neg_neg", cfg)
        assert error.value.error_code is ErrorCodes.ERR_PRECONDITION

    def test_unknown_case(self, cfg):
        with pytest.raises(QZetaError) as error:
            verify_euler(2, 2, "pos_neg", cfg)
        assert error.value.error_code is ErrorCodes.ERR_INVALID_ARGUMENT

    def test_classical(self):
        assert classical_euler(2, 2) == LinComb([((2, 2), 2), ((3, 1), 4)], kind=Y)
        assert verify_classical_euler(2, 2).passed


class TestDerivations(object):

    @pytest.mark.parametrize("which, args", [
        ("single", (2,)), ("single", (0,)), ("single", (-1,)),
        ("telescoped", (3,)), ("telescoped", (-2,)),
        ("recursion", (2,)), ("recursion", (-1,)),
        ("general", (1, -1)), ("general", (2, 0)),
        ("kappa", (1, 1)), ("kappa", (2, -1)),
        ("from_products", (3,)), ("section55", (3,)),
        ("general", (3, 1, 1)), ("general", (3, -2, 0)), ("general", (2, 3, 1)), ("general", (-1, 2, -2)),
    ])
    def test_identity(self, cfg, which, args):
        report = verify_derivation(args, cfg, which)
        assert report.passed, report.to_dict()

    def test_old_name_of_from_products(self, cfg):
        report = verify_derivation((4,), cfg, "section55")
        assert report.passed
        assert report.params["which"] == "from_products"

    def test_preconditions(self):
        with pytest.raises(QZetaError) as error:
            telescoped(1)
        assert error.value.error_code is ErrorCodes.ERR_PRECONDITION
        with pytest.raises(QZetaError):
            step_recursion(0)

    def test_unknown(self, cfg):
        with pytest.raises(QZetaError) as error:
            verify_derivation((2,), cfg, "double")
        assert error.value.error_code is ErrorCodes.ERR_INVALID_ARGUMENT


class TestRelations(object):

    def test_named(self, cfg):
        report = verify_named(cfg)
        assert report.passed, report.to_dict()

    @pytest.mark.parametrize("v", [(2,), (2, 1)])
    def test_regularization(self, cfg, v):
        report = verify_regularization(v, cfg)
        assert report.passed, report.to_dict()

    def test_regularization_needs_convergent_word(self, cfg):
        with pytest.raises(QZetaError) as error:
            verify_regularization((1, 2), cfg)
        assert error.value.error_code is ErrorCodes.ERR_PRECONDITION

    def test_homomorphism(self, cfg):
        for kind in ("qshuffle", "qquasi", "qshuffle-graded", "qquasi-graded"):
            assert verify_homomorphism(kind, (1,), (2, -1), cfg).passed
        assert verify_homomorphism("quasi", (2,), (3,), cfg).passed

    def test_pathways_and_zero_words(self, cfg):
        assert verify_pathways(enumerate_words(2, -3, 3), cfg).passed
        assert verify_zero_words(3, cfg).passed


class TestNumericChecks(object):

    def test_schlesinger(self):
        report = verify_schlesinger((2,), Fraction(2), EvalConfig(term_cap=30))
        assert report.passed, report.to_dict()

    def test_schlesinger_product(self):
        report = schlesinger_product((1,), (2, 0), Fraction(3), EvalConfig(term_cap=15))
        assert report.passed

    def test_schlesinger_domain(self):
        with pytest.raises(QZetaError) as error:
            verify_schlesinger((2,), Fraction(1, 2), EvalConfig())
        assert error.value.error_code is ErrorCodes.ERR_DOMAIN

    def test_limit(self):
        report = verify_limit((2,), (0.9, 0.99, 0.999), float(mpmath.zeta(2)), 0.05, EvalConfig())
        assert report.passed, report.to_dict()
        assert len(report.notes) == 3

    def test_limit_agreement(self):
        assert verify_limit_agreement((2, 1), (3,), 0.999, 0.05, EvalConfig()).passed

    def test_limit_arguments(self):
        with pytest.raises(QZetaError) as error:
            verify_limit((2,), (0.5, 1.5), 1.0, 0.05, EvalConfig())
        assert error.value.error_code is ErrorCodes.ERR_DOMAIN
        with pytest.raises(QZetaError) as error:
            verify_limit(LinComb.single((2,)), (0.5,), 1.0, 0.05, EvalConfig())
        assert error.value.error_code is ErrorCodes.ERR_INVALID_ARGUMENT
        with pytest.raises(QZetaError) as error:
            verify_limit((1,), (0.5,), 1.0, 0.05, EvalConfig())
        assert error.value.error_code is ErrorCodes.ERR_PRECONDITION

    def test_limit_term_cap(self):
        assert limit_term_cap(0.5, floor=200) == 200
        assert limit_term_cap(0.99) > 5000

    def test_convergence_bound(self):
        words = enumerate_words(2, -2, 2)
        assert verify_convergence_bound(words, (Fraction(1, 2),), EvalConfig(term_cap=100)).passed


class TestSuites(object):

    @pytest.fixture
    def ctx(self):
        return SuiteContext(EvalConfig(order=6), max_depth=1, low=-1, high=1, samples=1)

    def test_desk_words(self, ctx):
        assert ctx.words == [(1,), (0,), (-1,)]
        assert ctx.convergent_words == [(2,)]

    def test_word_set_floors(self, ctx):
        assert ctx.pathway_words == enumerate_words(2, -3, 3)
        assert ctx.derivation_words == enumerate_words(3, -2, 3)
        wide = SuiteContext(EvalConfig(order=6), max_depth=3, low=-4, high=1)
        assert wide.pathway_words == enumerate_words(3, -4, 3)

    def test_general_derivations_reach_depth_three(self, ctx):
        labels = [label for label, _ in build_jobs("derivation", ctx) if label.startswith("derivation general")]
        assert len(labels) == len(enumerate_words(3, -2, 3))
        assert "derivation general (-2, 3, 0)" in labels

    def test_operator_laws_draw_twenty_samples(self):
        ctx = SuiteContext(EvalConfig(order=4))
        assert ctx.samples == 20
        label, job = build_jobs("operator-laws", ctx)[0]
        report = job()
        assert report.passed, report.to_dict()
        assert report.params["samples"] == 20

    def test_unknown_suite(self, ctx):
        with pytest.raises(QZetaError) as error:
            build_jobs("everything", ctx)
        assert error.value.error_code is ErrorCodes.ERR_INVALID_ARGUMENT

    def test_every_suite_declares_checks(self, ctx):
        for name in SUITES:
            assert build_jobs(name, ctx)
        assert len(build_jobs("all", ctx)) == sum(len(build_jobs(name, ctx)) for name in SUITES)

    def test_word_laws_run(self, ctx):
        run = SuiteRun("word-laws", {"max_depth": 1}, run_suite("word-laws", ctx))
        assert run.passed
        assert run.to_dict()["pass"] is True
        assert len(run.to_dict()["reports"]) == 6

    def test_failing_check_is_reported(self, ctx, monkeypatch):
        def broken():
            raise QZetaError(ErrorCodes.ERR_DOMAIN, "out of range")

        monkeypatch.setitem(SUITES, "broken", lambda context: [("broken check", broken)])
        reports = run_suite("broken", ctx)
        assert len(reports) == 1 and not reports[0].passed
        assert reports[0].notes == ["ERR_DOMAIN: out of range"]
