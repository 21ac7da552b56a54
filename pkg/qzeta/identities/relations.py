"""Verifiers of the named relations between modified values.

Every series comparison runs under the modified model, except the graded
companions which use the non modified one; delta terms are always evaluated
on the exact series.
"""
from qzeta import LOGGER
from qzeta.algebra.powerseries import QSeries
from qzeta.algebra.products import q_quasi_shuffle, q_shuffle, quasi_shuffle, shuffle
from qzeta.algebra.words import LinComb, X, format_word, s_inverse, s_map
from qzeta.commons.exception import QZetaError, ErrorCodes
from qzeta.commons.guard import precondition_guard
from qzeta.evaluator.config import Model
from qzeta.evaluator.numeric import zeta_numeric
from qzeta.evaluator.series import eval_lincomb, zbar_series
from qzeta.identities import derivations
from qzeta.identities.checks import (ROUNDING, CheckReport, lincomb_check, numeric_check, series_check,
                                     series_witness)
from qzeta.identities.euler import (ClosedForm, classical_euler, delta_two, mod_q_shuffle, neg_neg, neg_pos,
                                    z_euler)


EULER_CASES = ("pos_pos", "neg_neg", "neg_pos", "quasi")
DERIVATIONS = ("single", "telescoped", "recursion", "general", "kappa", "from_products")
# older name of the from-products derivation, still accepted
DERIVATION_ALIASES = {"section55": "from_products"}

_PRINTED = {"pos_pos": z_euler, "neg_neg": neg_neg, "neg_pos": neg_pos}
_SIGNS = {"pos_pos": (1, 1), "neg_neg": (-1, -1), "neg_pos": (-1, 1)}


def _modified(cfg):
    return cfg.replace(model=Model.MODIFIED, q0=None)


def _nonmodified(cfg):
    return cfg.replace(model=Model.NONMODIFIED, q0=None)


def _printed_comparison(name, lhs, closed_form, cfg):
    """ soft comparison: a note, and a warning when the printed side disagrees """
    if not isinstance(closed_form, ClosedForm):
        closed_form = ClosedForm(closed_form)
    witness = series_witness(lhs, closed_form.evaluate(cfg))
    if witness is None:
        return f"printed {name} agrees up to q^{cfg.order}"
    message = (f"erratum candidate {name}: printed side differs at q^{witness['degree']},"
               f" {witness['rhs']} instead of {witness['lhs']}")
    LOGGER.warning(message)
    return message


def verify_euler(a, b, case, cfg):
    """
    Products of two single values

    * quasi: z(a) z(b) against the mod-q-shuffle combination, any a, b, both
      as words and as series
    * pos_pos, neg_neg, neg_pos (1 < a <= b): z(±a) z(±b) against the
      q-shuffle of the two letters; the printed decomposition is compared on
      top and a disagreement only leaves an erratum candidate note

    Parameters
    ----------
    a, b : int
    case : str
     one of pos_pos, neg_neg, neg_pos, quasi
    cfg : EvalConfig

    Returns
    -------
    CheckReport
    """
    if case not in EULER_CASES:
        raise QZetaError(ErrorCodes.ERR_INVALID_ARGUMENT, f"unknown case {case!r}, expected one of {EULER_CASES}")
    series_cfg = _modified(cfg)
    params = {"a": a, "b": b, "case": case, "order": cfg.order}
    if case == "quasi":
        words = lincomb_check("words", params, q_quasi_shuffle((a,), (b,)), mod_q_shuffle(a, b))
        lhs = zbar_series((a,), series_cfg) * zbar_series((b,), series_cfg)
        series = series_check("series", params, lhs, eval_lincomb(mod_q_shuffle(a, b), series_cfg))
        return CheckReport.combine("euler", params, [words, series])
    precondition_guard(1 < a <= b, f"the {case} decomposition needs 1 < a <= b, got a={a}, b={b}")
    sa, sb = _SIGNS[case]
    u, v = (sa * a,), (sb * b,)
    lhs = zbar_series(u, series_cfg) * zbar_series(v, series_cfg)
    oracle = series_check("q_shuffle", params, lhs, eval_lincomb(q_shuffle(u, v), series_cfg))
    note = _printed_comparison(f"{case}({a},{b})", lhs, _PRINTED[case](a, b), series_cfg)
    return CheckReport.combine("euler", params, [oracle], notes=[note])


def _derivation_sides(args, which):
    """ (lhs, rhs) closed forms of one derivation identity """
    if which == "single":
        (a,) = args
        return ClosedForm(LinComb.zero(), LinComb.single((a,))), derivations.delta_single(a)
    if which == "general":
        return ClosedForm(LinComb.zero(), LinComb.single(args)), derivations.delta_general(args)
    if which == "telescoped":
        (a,) = args
        return ClosedForm(LinComb([((a, 0), 1), ((a,), 1)])), derivations.telescoped(a)
    if which == "recursion":
        (a,) = args
        return ClosedForm(LinComb([((a + 1, 0), 1), ((a + 1,), 1)])), derivations.step_recursion(a)
    if which == "kappa":
        lhs, rhs = derivations.kappa_relation(args)
        return ClosedForm(lhs), rhs
    (b,) = args
    return ClosedForm(LinComb.zero(), LinComb.single((b,))), derivations.delta_of_products(b)


def verify_derivation(args, cfg, which):
    """
    One of the delta identities

    Parameters
    ----------
    args : tuple
     (a,) for single, telescoped and recursion; the word for general; the
     coefficients kappa_1..kappa_n for kappa; (b,) with b > 2 for from_products
    cfg : EvalConfig
    which : str
     one of single, telescoped, recursion, general, kappa, from_products;
     section55 is read as from_products

    Returns
    -------
    CheckReport

    Raises
    ------
    QZetaError
     ERR_PRECONDITION naming the violated condition
    """
    which = DERIVATION_ALIASES.get(which, which)
    if which not in DERIVATIONS:
        raise QZetaError(ErrorCodes.ERR_INVALID_ARGUMENT,
                         f"unknown derivation {which!r}, expected one of {DERIVATIONS + tuple(DERIVATION_ALIASES)}")
    args = tuple(args)
    if which in ("single", "telescoped", "recursion", "from_products"):
        precondition_guard(len(args) == 1, f"{which} takes a single integer, got {args}")
    series_cfg = _modified(cfg)
    lhs, rhs = _derivation_sides(args, which)
    params = {"which": which, "args": [str(a) for a in args], "order": cfg.order}
    return series_check("derivation", params, lhs.evaluate(series_cfg), rhs.evaluate(series_cfg),
                        notes=[f"{lhs} = {rhs}"])


def _classical_value(x_lincomb):
    """ sum of zeta values of convergent x-words, with the summed tails """
    value, tail = 0.0, 0.0
    for w, c in x_lincomb.items():
        result = zeta_numeric(s_inverse(w))
        value += float(c) * result.value
        tail += abs(float(c)) * result.tail
    return value, tail


def verify_regularization(v, cfg):
    """
    q-analogues of Hoffman's regularization relation for a convergent v

    * modified: eval(py ⧢ v - z_1 ⧢- v) = 0
    * non modified: the same combination under the graded products, h := 1 - q
    * classical: x1 ⧢ s(v) - s(y1 * v), whose divergent words cancel, sums to 0

    Returns
    -------
    CheckReport
    """
    v = tuple(v)
    precondition_guard(len(v) > 0 and v[0] >= 2 and all(n >= 1 for n in v[1:]),
                       f"the regularization relation needs a convergent word, got {v}")
    params = {"v": format_word(v), "order": cfg.order}
    relation = q_shuffle((1,), v) - q_quasi_shuffle((1,), v)
    modified = series_check("modified", params, eval_lincomb(relation, _modified(cfg)), QSeries.zero(cfg.order),
                            notes=[f"{relation} = 0"])
    graded = q_shuffle((1,), v, graded=True) - q_quasi_shuffle((1,), v, graded=True)
    nonmodified = series_check("nonmodified", params, eval_lincomb(graded, _nonmodified(cfg)),
                               QSeries.zero(cfg.order))
    classical = shuffle((1,), s_map(v)) - quasi_shuffle((1,), v).map_words(
        lambda w: LinComb.single(s_map(w), kind=X))
    divergent = [w for w in classical.words() if w and w[0] == 1]
    if divergent:
        raise QZetaError(ErrorCodes.ER_DEFAULT, f"divergent word {format_word(divergent[0], X)} left in {classical}")
    value, tail = _classical_value(classical)
    companion = numeric_check("classical", params, value, 0.0, tail + ROUNDING, notes=[f"{classical} = 0"])
    return CheckReport.combine("regularization", params, [modified, nonmodified, companion])


def verify_classical_euler(a, b):
    """
    Euler's decomposition of zeta(a) zeta(b), 2 <= a <= b, as words (through
    the shuffle of s(y_a) and s(y_b)) and numerically
    """
    precondition_guard(2 <= a <= b, f"the classical decomposition needs 2 <= a <= b, got a={a}, b={b}")
    params = {"a": a, "b": b}
    expected = classical_euler(a, b)
    shuffled = shuffle(s_map((a,)), s_map((b,))).map_words(lambda w: LinComb.single(s_inverse(w)))
    words = lincomb_check("words", params, shuffled.with_kind(expected.kind), expected)
    left, right = zeta_numeric((a,)), zeta_numeric((b,))
    value, tail = _classical_value(expected.map_words(lambda w: LinComb.single(s_map(w), kind=X)))
    allowance = left.tail * abs(right.value) + right.tail * abs(left.value) + left.tail * right.tail + tail + ROUNDING
    numeric = numeric_check("numeric", params, left.value * right.value, value, allowance)
    return CheckReport.combine("classical_euler", params, [words, numeric])


def verify_named(cfg):
    """
    The relations quoted by name

    * z(3) - z(2) = z(2,1)
    * z(2) = z(1,0) + z(1) and z(1)^2 = 2 z(1,1) - z(1,0)
    * delta z(2) = 4 z(3,1) - 2 z(2,1) - z(2) + 3 z(3) - z(4)
    * the relation left when delta z(2) is eliminated between the last one and
      the single derivation formula:
      4 z(3,1) - 2 z(2,1) - 2 z(3,0) + z(2,0) = z(4) - z(3)
    """
    series_cfg = _modified(cfg)
    params = {"order": cfg.order}
    zero = QSeries.zero(cfg.order)

    def vanishes(name, terms):
        return series_check(name, params, eval_lincomb(LinComb(terms), series_cfg), zero)

    z1 = zbar_series((1,), series_cfg)
    parts = [
        vanishes("q_euler", [((3,), 1), ((2,), -1), ((2, 1), -1)]),
        vanishes("z2_split", [((2,), 1), ((1, 0), -1), ((1,), -1)]),
        series_check("z1_square", params, z1 * z1, eval_lincomb(LinComb([((1, 1), 2), ((1, 0), -1)]), series_cfg)),
        series_check("delta_z2", params, zbar_series((2,), series_cfg).delta(),
                     eval_lincomb(delta_two(), series_cfg)),
        vanishes("delta_elimination", [((3, 1), 4), ((2, 1), -2), ((3, 0), -2), ((2, 0), 1), ((4,), -1), ((3,), 1)]),
    ]
    return CheckReport.combine("named", params, parts)
