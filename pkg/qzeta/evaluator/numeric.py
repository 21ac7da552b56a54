"""Numeric evaluation at a point q0.

A Fraction q0 keeps every partial sum exact; a float q0 switches to numpy
arrays. Each result carries a rigorous bound on the neglected tail.
"""
import math
from fractions import Fraction

import mpmath
import numpy as np

from qzeta.algebra.words import weight
from qzeta.commons.exception import QZetaError, ErrorCodes
from qzeta.commons.guard import (convergent_word_guard, inside_unit_disc_guard, outside_unit_disc_guard,
                                 schlesinger_word_guard)
from qzeta.evaluator.config import Model
from qzeta.evaluator.series import nested_sum

ZETA_TERM_CAP = 10 ** 6


class NumericResult(object):
    """
    Truncated sum and the bound on what the truncation leaves out.

    Attributes
    ----------
    value : Fraction or float
    tail : float
        bound on |full value - value|, inf when no bound is available
    exact : bool
    term_cap : int
    """

    __slots__ = ("value", "tail", "exact", "term_cap")

    def __init__(self, value, tail, exact, term_cap):
        self.value = value
        self.tail = tail
        self.exact = exact
        self.term_cap = term_cap

    def __float__(self):
        return float(self.value)

    def to_dict(self):
        return {"value": str(self.value) if self.exact else float(self.value), "tail": float(self.tail),
                "exact": self.exact, "term_cap": self.term_cap}

    def __repr__(self):
        return f"NumericResult(value={float(self.value)!r}, tail={self.tail!r}, exact={self.exact})"


def _rows(w, q0, model, cap):
    """ per-index factor rows, the numerator folded into the first row """
    exact = isinstance(q0, Fraction)
    if exact:
        m_range = range(1, cap + 1)
        powers = [q0 ** m for m in m_range]
        if model is Model.MODIFIED:
            rows = [[(1 - p) ** -n for p in powers] for n in w]
        else:
            rows = [[((1 - q0) / (1 - p)) ** n for p in powers] for n in w]
        if model is not Model.SCHLESINGER:
            rows[0] = [p * f for p, f in zip(powers, rows[0])]
        return rows, Fraction(0)
    m = np.arange(1, cap + 1)
    if abs(q0) < 1:
        powers = q0 ** m
        if model is Model.MODIFIED:
            rows = [(1.0 - powers) ** -n for n in w]
        else:
            rows = [((1.0 - q0) / (1.0 - powers)) ** n for n in w]
        rows[0] = powers * rows[0]
        return rows, 0.0
    # |q0| > 1: [m]_q^-1 = x^(m-1) (1 - x) / (1 - x^m) with x = 1/q0
    x = 1.0 / q0
    inverse_qnumber = x ** (m - 1) * (1.0 - x) / (1.0 - x ** m)
    rows = [inverse_qnumber ** n for n in w]
    if model is Model.NONMODIFIED:
        rows[0] = (x ** ((m - 1) * w[0] - m)) * ((1.0 - x) / (1.0 - x ** m)) ** w[0]
    return rows, 0.0


def _check_domain(w, q0, model):
    if model is Model.MODIFIED:
        inside_unit_disc_guard(q0, model.value)
    elif model is Model.SCHLESINGER:
        outside_unit_disc_guard(q0, model.value)
        schlesinger_word_guard(w)
    elif not abs(q0) < 1:
        convergent_word_guard(w, ErrorCodes.ERR_DOMAIN)
    if q0 == 0 or abs(q0) == 1:
        raise QZetaError(ErrorCodes.ERR_DOMAIN, f"q0 = {q0} is outside every convergence domain")


def numeric_eval(w, cfg):
    """
    Truncated nested sum of a word at cfg.q0

    Parameters
    ----------
    w : tuple of int
    cfg : EvalConfig
     q0, model and term_cap are used; the nonmodified model is accepted for
     |q0| > 1 when n_1 >= 2 and n_j >= 1

    Returns
    -------
    NumericResult

    Raises
    ------
    QZetaError
     ERR_DOMAIN naming the violated condition
    """
    w = tuple(w)
    q0, model, cap = cfg.q0, cfg.model, cfg.term_cap
    if q0 is None:
        raise QZetaError(ErrorCodes.ERR_INVALID_ARGUMENT, "numeric evaluation needs q0")
    _check_domain(w, q0, model)
    exact = isinstance(q0, Fraction)
    if not w:
        return NumericResult(Fraction(1) if exact else 1.0, 0.0, exact, cap)
    rows, zero = _rows(w, q0, model, cap)
    value = nested_sum(rows, zero) if exact else _float_nested_sum(rows)
    return NumericResult(value, tail_bound(w, q0, model, cap), exact, cap)


def _float_nested_sum(rows):
    g = rows[-1]
    for row in reversed(rows[:-1]):
        below = np.concatenate(([0.0], np.cumsum(g)[:-1]))
        g = row * below
    return float(np.sum(g))


def convergence_bound(w, q0):
    """ |q0|^k (1 - |q0|)^(-w~ - k), w~ the sum of the positive parts """
    r = abs(float(q0))
    k = len(w)
    positive = sum(max(0, n) for n in w)
    return r ** k * (1.0 - r) ** (-positive - k)


def nonmodified_bound(w, q0):
    return convergence_bound(w, q0) * abs(1.0 - float(q0)) ** weight(w)


def tail_bound(w, q0, model, cap):
    """
    Bound on the sum over outer indices m_1 > cap

    The terms are dominated by a sequence whose ratio is at most rho from
    m_1 = cap + 1 on, so the tail is at most first / (1 - rho).
    """
    k, r, n = len(w), abs(float(q0)), cap
    if r < 1:
        positive = sum(max(0, e) for e in w)
        negative = sum(-e for e in w if e < 0)
        constant = (1.0 - r) ** -positive * (1.0 + r) ** negative
        first = constant * math.comb(n, k - 1) * r ** (n + 1)
        rho = r * (n + 1) / (n + 2 - k) if n + 2 - k > 0 else math.inf
        tail = first / (1.0 - rho) if rho < 1 else math.inf
        return tail * abs(1.0 - float(q0)) ** weight(w) if model is Model.NONMODIFIED else tail
    # log space, r^(cap + 1) overflows floats for large caps
    log_r = math.log(r)
    log_first = (-sum(w[1:]) * math.log((r - 1.0) / (r + 1.0)) + (k - 1) * math.log(n + 1)
                 + w[0] * (math.log(r + 1.0) - (n + 1) * log_r - math.log1p(-math.exp(-(n + 1) * log_r))))
    rho = ((n + 2) / (n + 1)) ** (k - 1) * r ** -w[0]
    if model is Model.NONMODIFIED:
        log_first += (n + 1) * log_r
        rho *= r
    return math.exp(log_first) / (1.0 - rho) if rho < 1 else math.inf


def zeta_numeric(u, term_cap=ZETA_TERM_CAP):
    """
    Classical multiple zeta value of a convergent y-word

    Parameters
    ----------
    u : tuple of int
     n_1 >= 2, n_j >= 1
    term_cap : int

    Returns
    -------
    NumericResult
     value is the truncated sum plus the midpoint of the tail enclosure, tail
     is the half width of that enclosure

    Raises
    ------
    QZetaError
     ERR_DIVERGENT_WORD when n_1 = 1
    """
    u = tuple(u)
    convergent_word_guard(u)
    m = np.arange(1, term_cap + 1, dtype=float)
    rows = [m ** -float(n) for n in u]
    n1 = u[0]
    if len(u) == 1:
        partial = float(np.sum(rows[0]))
        return NumericResult(partial + float(mpmath.zeta(n1, term_cap + 1)), 0.0, False, term_cap)
    # inner nested sum up to term_cap, the value it takes at m_1 = term_cap + 1
    g = rows[-1]
    for row in reversed(rows[1:-1]):
        g = row * np.concatenate(([0.0], np.cumsum(g)[:-1]))
    inner_at_cap = float(np.sum(g))
    partial = _float_nested_sum(rows)
    lower = inner_at_cap * float(mpmath.zeta(n1, term_cap + 1))
    ones = sum(1 for n in u[1:] if n == 1)
    constant = math.prod(float(mpmath.zeta(n)) for n in u[1:] if n >= 2)
    upper = constant * float(mpmath.quad(lambda t: (1 + mpmath.log(t)) ** ones * t ** -n1, [term_cap, mpmath.inf]))
    return NumericResult(partial + (lower + upper) / 2.0, (upper - lower) / 2.0, False, term_cap)


def numeric_lincomb(l, cfg, prefactor_power=0):
    """
    (1 - q0)^prefactor_power sum coeff(w) numeric_eval(w), rational coefficients only

    Returns
    -------
    NumericResult
     the tails add up with the absolute values of the coefficients
    """
    scale = (1 - cfg.q0) ** prefactor_power
    value = Fraction(0) if cfg.exact else 0.0
    tail = 0.0
    for w, c in l.items():
        result = numeric_eval(w, cfg)
        value += (c if cfg.exact else float(c)) * result.value
        tail += abs(float(c)) * result.tail
    return NumericResult(scale * value, abs(float(scale)) * tail, cfg.exact, cfg.term_cap)
