"""Operator laws of the (t, q) calculus on random elements of t.Q[[t, q]]."""
import numpy as np

from qzeta import LOGGER
from qzeta.algebra.coeffs import format_rational
from qzeta.algebra.jackson import TQSeries, apply_Dq, apply_Eq, apply_J, apply_Pq
from qzeta.commons.guard import positive_guard
from qzeta.identities.checks import CheckReport
from qzeta.identities.elimination import (CLOSED_FORMS, EliminationKind, ShapeEvaluator, build_elimination_expansion,
                                          gamma_triple)

SAMPLES = 20
COEFF_RANGE = 3


def random_element(rng, order):
    """ dense element of t.Q[[t, q]] with integer coefficients in [-3, 3] """
    terms = {}
    for i in range(1, order + 1):
        for j in range(order - i + 1):
            terms[(i, j)] = int(rng.integers(-COEFF_RANGE, COEFF_RANGE + 1))
    return TQSeries(terms, order)


def _tq_witness(lhs, rhs):
    difference = lhs - rhs
    if difference.is_zero():
        return None
    i, j = min(difference.terms, key=lambda k: (k[0] + k[1], k))
    return {"degree": i + j, "monomial": f"t^{i} q^{j}",
            "lhs": format_rational(lhs.terms.get((i, j), 0)), "rhs": format_rational(rhs.terms.get((i, j), 0))}


class _LawTracker(object):
    """ first failure of each law over the samples """

    def __init__(self, names):
        self.names = list(names)
        self.witness = {name: None for name in names}

    def record(self, name, lhs, rhs, sample):
        if self.witness[name] is None:
            witness = _tq_witness(lhs, rhs)
            if witness is not None:
                self.witness[name] = dict(witness, sample=sample)

    def reports(self, params):
        return [CheckReport(name, params, self.witness[name] is None, witness=self.witness[name])
                for name in self.names]


def _basic_laws(f, g, tracker, sample):
    pf, pg = apply_Pq(f), apply_Pq(g)
    df, dg = apply_Dq(f), apply_Dq(g)
    fg = f * g
    tracker.record("rota_baxter", pf * pg, apply_Pq(f * pg) + apply_Pq(pf * g) - apply_Pq(fg), sample)
    tracker.record("leibniz", apply_Dq(fg), df * g + f * dg - df * dg, sample)
    tracker.record("mixed", df * pg, apply_Dq(f * pg) + df * g - fg, sample)
    q = TQSeries.monomial(1, 0, 1, f.order)
    tracker.record("jackson", apply_J(f) * apply_J(g),
                   apply_J(f * apply_J(g)) + q * apply_J(apply_J(apply_Eq(f)) * g), sample)


def verify_operator_laws(a, b, cfg, seed=0, samples=SAMPLES):
    """
    Operator identities on seeded random f, g at the bivariate order cfg.order

    * the Rota-Baxter, Leibniz, mixed and Jackson laws
    * the DD, DP and PP elimination expansions against the direct products
    * for 1 < a <= b the printed closed forms against the elimination
      expansions; a disagreement is an erratum candidate note and does not fail
      the report

    Parameters
    ----------
    a, b : int
     a, b >= 1
    cfg : EvalConfig
    seed : int
    samples : int

    Returns
    -------
    CheckReport
    """
    positive_guard(a, "a")
    positive_guard(b, "b")
    params = {"a": a, "b": b, "order": cfg.order, "seed": seed, "samples": samples}
    expansions = {kind: build_elimination_expansion(a, b, kind) for kind in EliminationKind}
    closed = {}
    if 1 < a <= b:
        closed = {name: form(a, b) for name, form in CLOSED_FORMS.items()}
    names = ["rota_baxter", "leibniz", "mixed", "jackson"] + [f"elimination_{kind.value}" for kind in EliminationKind]
    tracker = _LawTracker(names)
    closed_agrees = {name: True for name in closed}
    rng = np.random.default_rng(seed)
    for sample in range(samples):
        f, g = random_element(rng, cfg.order), random_element(rng, cfg.order)
        _basic_laws(f, g, tracker, sample)
        for kind, expansion in expansions.items():
            evaluator = ShapeEvaluator(kind, f, g)
            value = expansion.evaluate(f, g, evaluator)
            tracker.record(f"elimination_{kind.value}", evaluator.direct(a, b), value, sample)
            for name, form in closed.items():
                if form.kind is kind and closed_agrees[name]:
                    closed_agrees[name] = form.evaluate(f, g, evaluator) == value
    notes = []
    if not closed:
        notes.append("closed forms need 1 < a <= b, only the laws and the expansions were checked")
    for name, agrees in closed_agrees.items():
        form = closed[name]
        if agrees:
            notes.append(f"{name}({a},{b}) agrees with the elimination expansion")
            continue
        shape, printed, eliminated = form.first_difference(expansions[form.kind])
        message = (f"erratum candidate {name}({a},{b}): G{gamma_triple(shape)} printed {format_rational(printed)},"
                   f" elimination {format_rational(eliminated)}")
        LOGGER.warning(message)
        notes.append(message)
    return CheckReport.combine("operator_laws", params, tracker.reports(params), notes=notes)
