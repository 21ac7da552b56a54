"""Verification suites, each a named list of checks over a desk word set.

A suite builder receives a :class:`SuiteContext` and returns ``(label, job)``
pairs, a job being a callable returning one :class:`CheckReport`. The runner
keeps the declaration order; randomness only comes from the context seed.
"""
from fractions import Fraction

import mpmath
from tqdm import tqdm

from qzeta import LOGGER
from qzeta.algebra.products import ProductKind
from qzeta.algebra.words import LinComb, enumerate_words, enumerate_x_words, s_map
from qzeta.commons.exception import QZetaError, ErrorCodes
from qzeta.identities.checks import CheckReport
from qzeta.identities.numeric_checks import (schlesinger_product, verify_convergence_bound, verify_limit,
                                             verify_limit_agreement, verify_schlesinger)
from qzeta.identities.operator_laws import SAMPLES as OPERATOR_SAMPLES, verify_operator_laws
from qzeta.identities.relations import (verify_classical_euler, verify_derivation, verify_euler, verify_named,
                                        verify_regularization)
from qzeta.identities.word_laws import verify_homomorphism, verify_pathways, verify_word_laws, verify_zero_words

OPERATOR_ORDER = 12
# (depth, low, high) floors of the word sets some checks always cover
PATHWAY_WORDS = (2, -3, 3)
GENERAL_DERIVATION_WORDS = (3, -2, 3)
SCHLESINGER_TERM_CAP = 80
SCHLESINGER_PRODUCT_CAP = 40
LIMIT_GRID = (0.9, 0.99, 0.999)
X_WORD_LENGTH = 4
BOUND_POINTS = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))
SCHLESINGER_POINTS = (Fraction(2), Fraction(3))
SCHLESINGER_WORDS = ((2,), (3,), (2, 1))


class SuiteRun(object):
    """
    Reports of one suite run, in declaration order.

    Attributes
    ----------
    name : str
    params : dict
        echo of the run settings
    reports : list of CheckReport
    """

    def __init__(self, name, params, reports):
        self.name = name
        self.params = params
        self.reports = list(reports)

    @property
    def passed(self):
        return all(report.passed for report in self.reports)

    def to_dict(self):
        return {"suite": self.name, "params": self.params, "pass": self.passed,
                "reports": [report.to_dict() for report in self.reports]}


class SuiteContext(object):
    """
    Shared inputs of the suites.

    Attributes
    ----------
    cfg : EvalConfig
    max_depth : int
    low, high : int
        exponent range of the desk word set
    seed : int
    samples : int
        random operator pairs per (a, b)
    """

    def __init__(self, cfg, max_depth=2, low=-2, high=2, seed=0, samples=OPERATOR_SAMPLES):
        self.cfg = cfg
        self.max_depth = max_depth
        self.low = low
        self.high = high
        self.seed = seed
        self.samples = samples

    @property
    def words(self):
        """ the desk set: every word of depth 1..max_depth with exponents in [low, high] """
        return enumerate_words(self.max_depth, self.low, self.high)

    def covering(self, depth, low, high):
        """ the desk set widened to at least depth and [low, high] """
        return enumerate_words(max(self.max_depth, depth), min(self.low, low), max(self.high, high))

    @property
    def pathway_words(self):
        return self.covering(*PATHWAY_WORDS)

    @property
    def derivation_words(self):
        return self.covering(*GENERAL_DERIVATION_WORDS)

    @property
    def positive_words(self):
        return enumerate_words(self.max_depth, 1, max(2, self.high))

    @property
    def convergent_words(self):
        return [w for w in self.positive_words if w[0] >= 2]


def word_laws_suite(ctx):
    jobs = []
    for kind in (ProductKind.Q_SHUFFLE, ProductKind.Q_QUASI_SHUFFLE, ProductKind.Q_SHUFFLE_GRADED,
                 ProductKind.Q_QUASI_SHUFFLE_GRADED):
        jobs.append((f"word laws {kind.value}", lambda kind=kind: verify_word_laws(kind, ctx.words, ctx.seed)))
    jobs.append(("word laws shuffle_X",
                 lambda: verify_word_laws(ProductKind.SHUFFLE_X, enumerate_x_words(X_WORD_LENGTH), ctx.seed)))
    jobs.append(("word laws quasi_shuffle",
                 lambda: verify_word_laws(ProductKind.QUASI_SHUFFLE, ctx.positive_words, ctx.seed)))
    return jobs


def homomorphism_suite(ctx):
    words = ctx.words
    jobs = [("pathways", lambda: verify_pathways(ctx.pathway_words, ctx.cfg))]
    jobs += [(f"zero words {k}", lambda k=k: verify_zero_words(k, ctx.cfg)) for k in range(1, 4)]
    for kind in (ProductKind.Q_SHUFFLE, ProductKind.Q_QUASI_SHUFFLE, ProductKind.Q_SHUFFLE_GRADED,
                 ProductKind.Q_QUASI_SHUFFLE_GRADED):
        for i, u in enumerate(words):
            for v in words[i:]:
                jobs.append((f"homomorphism {kind.value} {u} {v}",
                             lambda kind=kind, u=u, v=v: verify_homomorphism(kind, u, v, ctx.cfg)))
    convergent = [(2,), (3,), (2, 1)]
    for kind in (ProductKind.QUASI_SHUFFLE, ProductKind.SHUFFLE_X):
        for i, u in enumerate(convergent):
            for v in convergent[i:]:
                uu, vv = (s_map(u), s_map(v)) if kind is ProductKind.SHUFFLE_X else (u, v)
                jobs.append((f"homomorphism {kind.value} {u} {v}",
                             lambda kind=kind, uu=uu, vv=vv: verify_homomorphism(kind, uu, vv, ctx.cfg)))
    return jobs


def operator_laws_suite(ctx):
    cfg = ctx.cfg.replace(order=min(ctx.cfg.order, OPERATOR_ORDER))
    return [(f"operator laws ({a},{b})", lambda a=a, b=b: verify_operator_laws(a, b, cfg, ctx.seed, ctx.samples))
            for b in range(2, 5) for a in range(2, b + 1)]


def euler_suite(ctx):
    jobs = [("named identities", lambda: verify_named(ctx.cfg))]
    jobs += [(f"euler quasi ({a},{b})", lambda a=a, b=b: verify_euler(a, b, "quasi", ctx.cfg))
             for b in range(2, 6) for a in range(2, b + 1)]
    for case in ("pos_pos", "neg_neg", "neg_pos"):
        jobs += [(f"euler {case} ({a},{b})", lambda a=a, b=b, case=case: verify_euler(a, b, case, ctx.cfg))
                 for b in range(2, 5) for a in range(2, b + 1)]
    jobs += [(f"classical euler ({a},{b})", lambda a=a, b=b: verify_classical_euler(a, b))
             for b in range(2, 5) for a in range(2, b + 1)]
    return jobs


def derivation_suite(ctx):
    cfg = ctx.cfg

    def job(which, args):
        return f"derivation {which} {args}", lambda: verify_derivation(args, cfg, which)

    jobs = [job("single", (a,)) for a in range(-2, 3)]
    jobs += [job("telescoped", (a,)) for a in (2, 3, 4, 5, 0, -1, -2, -3)]
    jobs += [job("recursion", (a,)) for a in (1, 2, 3, -1, -2)]
    jobs += [job("general", w) for w in ctx.derivation_words]
    jobs += [job("kappa", kappa) for kappa in ((1,), (1, 1), (2, -1), (-2, 1))]
    jobs += [job("from_products", (b,)) for b in (3, 4, 5)]
    return jobs


def regularization_suite(ctx):
    return [(f"regularization {v}", lambda v=v: verify_regularization(v, ctx.cfg))
            for v in ((2,), (3,), (2, 1), (3, 1))]


def schlesinger_suite(ctx):
    cfg = ctx.cfg.replace(term_cap=min(ctx.cfg.term_cap, SCHLESINGER_TERM_CAP))
    jobs = [(f"schlesinger {w} q0={q0}", lambda w=w, q0=q0: verify_schlesinger(w, q0, cfg))
            for q0 in SCHLESINGER_POINTS for w in SCHLESINGER_WORDS]
    product_cfg = cfg.replace(term_cap=min(cfg.term_cap, SCHLESINGER_PRODUCT_CAP))
    words = SCHLESINGER_WORDS
    jobs += [(f"schlesinger product {u} {v}",
              lambda u=u, v=v: schlesinger_product(u, v, SCHLESINGER_POINTS[0], product_cfg))
             for i, u in enumerate(words) for v in words[i:]]
    return jobs


def limits_suite(ctx):
    cfg, tol = ctx.cfg, ctx.cfg.tolerance
    zeta2, zeta3 = float(mpmath.zeta(2)), float(mpmath.zeta(3))
    split = LinComb([((1, 0), 1), ((1,), 1)])
    return [
        ("limit z(2)", lambda: verify_limit((2,), LIMIT_GRID, zeta2, tol, cfg)),
        ("limit z(3)", lambda: verify_limit((3,), LIMIT_GRID, zeta3, tol, cfg)),
        ("limit z(1,0) + z(1)", lambda: verify_limit(split, LIMIT_GRID, zeta2, tol, cfg, prefactor_power=2)),
        ("limit agreement z(2,1) z(3)", lambda: verify_limit_agreement((2, 1), (3,), LIMIT_GRID[-1], tol, cfg)),
        ("convergence bound", lambda: verify_convergence_bound(ctx.words, BOUND_POINTS, cfg)),
    ]


SUITES = {
    "word-laws": word_laws_suite,
    "homomorphism": homomorphism_suite,
    "operator-laws": operator_laws_suite,
    "euler": euler_suite,
    "derivation": derivation_suite,
    "regularization": regularization_suite,
    "schlesinger": schlesinger_suite,
    "limits": limits_suite,
}
SUITE_NAMES = tuple(SUITES) + ("all",)


def build_jobs(name, ctx):
    if name == "all":
        return [job for builder in SUITES.values() for job in builder(ctx)]
    if name not in SUITES:
        raise QZetaError(ErrorCodes.ERR_INVALID_ARGUMENT, f"unknown suite {name!r}, expected one of {SUITE_NAMES}")
    return SUITES[name](ctx)


def run_suite(name, ctx):
    """
    Run every check of a suite in declaration order

    A check raising a QZetaError becomes a failed report carrying the message,
    the remaining checks still run.

    Parameters
    ----------
    name : str
     one of SUITE_NAMES
    ctx : SuiteContext

    Returns
    -------
    list of CheckReport
    """
    jobs = build_jobs(name, ctx)
    LOGGER.info(f"suite {name}: {len(jobs)} checks")
    reports = []
    for label, job in tqdm(jobs, desc=f"verify {name}", leave=False):
        try:
            reports.append(job())
        except QZetaError as error:
            LOGGER.error(f"{label}: {error.message}")
            reports.append(CheckReport(label, {}, False, notes=[f"{error.error_code.name}: {error.message}"]))
    failed = sum(1 for report in reports if not report.passed)
    LOGGER.info(f"suite {name}: {len(reports) - failed} passed, {failed} failed")
    return reports
