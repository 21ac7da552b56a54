"""Numeric verifiers: the Schlesinger diagram, Abel limits and the convergence bound."""
import math
from fractions import Fraction

from qzeta import LOGGER
from qzeta.algebra.products import apply_T, quasi_shuffle
from qzeta.algebra.words import LinComb, format_word, weight
from qzeta.commons.exception import QZetaError, ErrorCodes
from qzeta.commons.guard import convergent_word_guard, outside_unit_disc_guard
from qzeta.evaluator.config import Model
from qzeta.evaluator.numeric import convergence_bound, nonmodified_bound, numeric_eval, numeric_lincomb
from qzeta.evaluator.series import qinverse_series
from qzeta.identities.checks import ROUNDING, CheckReport, numeric_check

QINVERSE_ORDER = 40
QINVERSE_TOLERANCE = 2.0 ** -20
# outer terms are kept until q^m drops below 2^-50, with a margin
LIMIT_BITS = 50
LIMIT_MARGIN = 1.5


def _numeric_cfg(cfg, model, q0, term_cap=None):
    return cfg.replace(model=model, q0=q0, term_cap=term_cap or cfg.term_cap)


def q_number(m, q0):
    """ [m]_q0 = 1 + q0 + ... + q0^(m-1) """
    return sum((q0 ** i for i in range(m)), Fraction(0) if isinstance(q0, Fraction) else 0.0)


def _per_term(q0, term_cap, params):
    for m in range(1, term_cap + 1):
        lhs = 1 - (1 - q0) * q_number(m, q0)
        if lhs != q0 ** m:
            return CheckReport("per_term", params, False,
                               witness={"degree": m, "lhs": str(lhs), "rhs": str(q0 ** m)})
    return CheckReport("per_term", params, True, notes=[f"1 - (1 - q0)[m] = q0^m for m <= {term_cap}"])


def _diagram(w, q0, cfg, params):
    """ z^S(T_q w) at h = 1 - q0 against the non modified value """
    schlesinger = _numeric_cfg(cfg, Model.SCHLESINGER, q0)
    h0 = 1 - q0
    lhs, tail = Fraction(0) if cfg.exact else 0.0, 0.0
    for word, c in apply_T(LinComb.single(w), h_graded=True).items():
        coeff = c.value_at(h0)
        result = numeric_eval(word, schlesinger)
        lhs += coeff * result.value
        tail += abs(float(coeff)) * result.tail
    rhs = numeric_eval(w, _numeric_cfg(cfg, Model.NONMODIFIED, q0))
    return numeric_check("diagram", params, lhs, rhs.value, tail + rhs.tail)


def schlesinger_product(u, v, q0, cfg):
    """
    z^S(u) z^S(v) = z^S(u * v) for n_j >= 1, exact at a common outer cap
    """
    params = {"u": format_word(u), "v": format_word(v), "q0": str(q0), "term_cap": cfg.term_cap}
    schlesinger = _numeric_cfg(cfg, Model.SCHLESINGER, q0)
    lhs = numeric_eval(u, schlesinger).value * numeric_eval(v, schlesinger).value
    rhs = Fraction(0) if schlesinger.exact else 0.0
    for w, c in quasi_shuffle(u, v).items():
        rhs += (c if schlesinger.exact else float(c)) * numeric_eval(w, schlesinger).value
    return numeric_check("multiplicativity", params, lhs, rhs, 0.0 if schlesinger.exact else ROUNDING)


def _qinverse(w, q0, cfg, params):
    """ the series in x = 1/q, summed at 1/q0, against the truncated sums """
    order = max(cfg.order, QINVERSE_ORDER)
    x0 = 1 / q0
    parts = []
    for model, schlesinger in ((Model.NONMODIFIED, False), (Model.SCHLESINGER, True)):
        series = qinverse_series(w, order, schlesinger=schlesinger)
        value = series.eval_at(x0)
        if not schlesinger:
            value = value / x0
        direct = numeric_eval(w, _numeric_cfg(cfg, model, q0))
        parts.append(numeric_check(f"qinverse_{model.value}", params, float(value), float(direct.value),
                                   QINVERSE_TOLERANCE + direct.tail, notes=[f"x-order {order}"]))
    return parts


def verify_schlesinger(w, q0, cfg):
    """
    Commuting diagram between the Schlesinger and the non modified values

    * 1 - (1 - q0)[m]_q0 = q0^m for every m <= term_cap
    * z^S(T_q w) with h = 1 - q0 equals z_q0(w), the legs computed by truncated
      sums with the same outer cap
    * z^S(w)^2 = z^S(w * w)
    * the series in 1/q of z_q(w) and of z^S(w), summed at 1/q0, agree with the
      truncated sums within 2^-20

    Parameters
    ----------
    w : tuple of int
     n_1 >= 2 and n_j >= 1
    q0 : Fraction or float
     |q0| > 1; a float is converted to the Fraction of its binary value
    cfg : EvalConfig
     term_cap and order are used

    Returns
    -------
    CheckReport
    """
    w = tuple(w)
    convergent_word_guard(w, ErrorCodes.ERR_DOMAIN)
    outside_unit_disc_guard(q0, Model.SCHLESINGER.value)
    q0 = q0 if isinstance(q0, Fraction) else Fraction(q0)
    exact_cfg = cfg.replace(model=Model.SCHLESINGER, q0=q0)
    params = {"w": format_word(w), "q0": str(q0), "term_cap": cfg.term_cap}
    parts = [_per_term(q0, cfg.term_cap, params), _diagram(w, q0, exact_cfg, params),
             schlesinger_product(w, w, q0, exact_cfg)]
    parts += _qinverse(w, q0, exact_cfg, params)
    return CheckReport.combine("schlesinger", params, parts)


def limit_term_cap(q, floor=1):
    """ outer cap after which q^m is below 2^-50, with a margin """
    return max(floor, math.ceil(LIMIT_MARGIN * LIMIT_BITS * math.log(2) / -math.log(q)))


def verify_limit(target_of, q_grid, target, tol, cfg, prefactor_power=None):
    """
    (1 - q)^p times a modified value tends to target as q -> 1 along q_grid

    Parameters
    ----------
    target_of : tuple of int or LinComb
     a convergent word, whose prefactor power is its weight, or a combination
     given with prefactor_power
    q_grid : list of float
     increasing points of (0, 1)
    target : float
    tol : float
     bound on the distance at the last point
    cfg : EvalConfig
     term_cap is a floor for the per point cap
    prefactor_power : int, optional

    Returns
    -------
    CheckReport
     passes when the distances strictly decrease and the last one is within tol
    """
    if isinstance(target_of, LinComb):
        if prefactor_power is None:
            raise QZetaError(ErrorCodes.ERR_INVALID_ARGUMENT, "a combination needs an explicit prefactor power")
        combination, label = target_of, str(target_of)
    else:
        w = tuple(target_of)
        convergent_word_guard(w, ErrorCodes.ERR_PRECONDITION)
        combination, label = LinComb.single(w), format_word(w)
        prefactor_power = weight(w) if prefactor_power is None else prefactor_power
    if any(not 0 < q < 1 for q in q_grid):
        raise QZetaError(ErrorCodes.ERR_DOMAIN, f"the grid must lie in (0, 1), got {q_grid}")
    params = {"value": label, "prefactor": prefactor_power, "grid": [float(q) for q in q_grid],
              "target": float(target), "tol": float(tol)}
    distances, values = [], []
    for q in q_grid:
        point_cfg = _numeric_cfg(cfg, Model.MODIFIED, float(q), limit_term_cap(q, cfg.term_cap))
        result = numeric_lincomb(combination, point_cfg, prefactor_power=prefactor_power)
        values.append(float(result.value))
        distances.append(abs(float(result.value) - float(target)))
        LOGGER.debug(f"limit of {label} at q = {q}: {float(result.value):.9f}, tail {result.tail:.2e}")
    notes = [f"q = {q}: {v:.9f} (distance {d:.3e})" for q, v, d in zip(q_grid, values, distances)]
    for i in range(1, len(distances)):
        if not distances[i] < distances[i - 1]:
            witness = {"degree": None, "lhs": f"{distances[i]:.3e}", "rhs": f"< {distances[i - 1]:.3e}",
                       "q": float(q_grid[i])}
            return CheckReport("limit", params, False, residual=distances[i], witness=witness, notes=notes)
    passed = distances[-1] <= tol
    witness = None if passed else {"degree": None, "lhs": f"{values[-1]:.9f}", "rhs": f"{float(target):.9f}"}
    return CheckReport("limit", params, passed, residual=values[-1] - float(target), witness=witness, notes=notes)


def verify_limit_agreement(u, v, q, tol, cfg):
    """ the scaled values of two words at a point near 1 agree within 2 tol """
    params = {"u": format_word(u), "v": format_word(v), "q": float(q), "tol": float(tol)}
    values = []
    for w in (u, v):
        point_cfg = _numeric_cfg(cfg, Model.MODIFIED, float(q), limit_term_cap(q, cfg.term_cap))
        values.append(numeric_lincomb(LinComb.single(w), point_cfg, prefactor_power=weight(w)))
    return numeric_check("limit_agreement", params, float(values[0].value), float(values[1].value),
                         2 * tol + values[0].tail + values[1].tail)


def verify_convergence_bound(words, q0s, cfg):
    """
    |z̄_q0(w)| <= |q0|^k (1 - |q0|)^(-w~ - k), and the companion bound for z_q0(w)

    The values are computed in floats at each q0, the truncation tail counts
    on the side of the value.
    """
    params = {"words": len(words), "q0": [str(q0) for q0 in q0s], "term_cap": cfg.term_cap}
    checked = 0
    for q0 in q0s:
        for model, bound in ((Model.MODIFIED, convergence_bound), (Model.NONMODIFIED, nonmodified_bound)):
            point_cfg = _numeric_cfg(cfg, model, float(q0))
            for w in words:
                result = numeric_eval(w, point_cfg)
                limit = bound(w, q0)
                checked += 1
                if abs(float(result.value)) - result.tail > limit * (1.0 + ROUNDING):
                    witness = {"degree": None, "word": format_word(w), "lhs": f"{abs(float(result.value)):.6e}",
                               "rhs": f"{limit:.6e}", "q0": str(q0), "model": model.value}
                    return CheckReport("convergence_bound", params, False, witness=witness)
    return CheckReport("convergence_bound", params, True, notes=[f"{checked} values within their bound"])
