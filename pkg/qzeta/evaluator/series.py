"""Series evaluation of words and linear combinations.

Two independent pathways produce the modified value z̄_q(w) as a series in q:

* ``sum``: the nested sum over order >= m1 > ... > mk > 0 of
  q^m1 prod (1 - q^mi)^-ni, truncated exactly since q^m1 vanishes past the order
* ``jackson``: the (t, q) operator pipeline followed by t := q

The nested sum runs as a dynamic programme over exclusive cumulative sums,
g_k = f_k, g_i(m) = f_i(m) sum_{m' < m} g_(i+1)(m').
"""
from functools import lru_cache
from itertools import accumulate

from qzeta import LOGGER
from qzeta.algebra.coeffs import LaurentPoly
from qzeta.algebra.jackson import calZ, subst_diag
from qzeta.algebra.powerseries import QSeries, XSeries, ps_expand_factor, ps_pow_one_minus_q
from qzeta.algebra.words import weight
from qzeta.commons.exception import QZetaError, ErrorCodes
from qzeta.commons.guard import convergent_word_guard, schlesinger_word_guard
from qzeta.evaluator.config import Pathway, Model


def nested_sum(rows, zero):
    """
    sum over m_1 > m_2 > ... > m_k of prod rows[i][m_i - 1]

    Parameters
    ----------
    rows : list of sequences
     rows[i][m - 1] is the factor of the i-th index at m, all rows share their length
    zero : object
     the additive unit of the entries

    Returns
    -------
    object
     the first row weighted by the nested tail below it, summed
    """
    g = list(rows[-1])
    for row in reversed(rows[:-1]):
        below = [zero] + list(accumulate(g))[:-1]
        g = [f * s for f, s in zip(row, below)]
    return sum(g, zero)


@lru_cache(maxsize=8192)
def _direct_sum(w, order):
    if not w:
        return QSeries.one(order)
    if order == 0:
        return QSeries.zero(0)
    m_range = range(1, order + 1)
    rows = [[ps_expand_factor(m, n, order) for m in m_range] for n in w]
    rows[0] = [f.shift(m) for m, f in zip(m_range, rows[0])]
    return nested_sum(rows, QSeries.zero(order))


def _jackson(w, order):
    return subst_diag(calZ(tuple(w), order))


def zbar_series(w, cfg):
    """
    Modified value z̄_q(w) as a series in q

    Parameters
    ----------
    w : tuple of int
    cfg : EvalConfig
     order and pathway are used

    Returns
    -------
    QSeries

    Raises
    ------
    QZetaError
     ERR_PATHWAY_MISMATCH when the pathway is both and the two series differ
    """
    w = tuple(w)
    if cfg.pathway is Pathway.DIRECT_SUM:
        return _direct_sum(w, cfg.order)
    if cfg.pathway is Pathway.JACKSON:
        return _jackson(w, cfg.order)
    direct, jackson = _direct_sum(w, cfg.order), _jackson(w, cfg.order)
    if direct != jackson:
        degree = next(n for n, (a, b) in enumerate(zip(direct.coeffs, jackson.coeffs)) if a != b)
        raise QZetaError(ErrorCodes.ERR_PATHWAY_MISMATCH,
                         f"pathways disagree on {w} at q^{degree}: sum {direct[degree]}, jackson {jackson[degree]}")
    LOGGER.debug(f"pathways agree on {w} up to q^{cfg.order}")
    return direct


def z_series(w, cfg):
    """ non modified value (1 - q)^weight z̄_q(w) """
    return ps_pow_one_minus_q(weight(w), cfg.order) * zbar_series(w, cfg)


def word_series(w, cfg):
    """ the series of a word under the model of cfg """
    if cfg.model is Model.MODIFIED:
        return zbar_series(w, cfg)
    if cfg.model is Model.NONMODIFIED:
        return z_series(w, cfg)
    raise QZetaError(ErrorCodes.ERR_DOMAIN,
                     "schlesinger values are series in 1/q, use qinverse_series or a numeric q0 with |q0| > 1")


def _at_one_minus_q(c, order):
    """ a Laurent coefficient with h := 1 - q, each power in closed form """
    return sum((ps_pow_one_minus_q(e, order) * x for e, x in c.terms.items()), QSeries.zero(order))


def eval_lincomb(l, cfg):
    """
    sum coeff(w) series(w), Laurent coefficients taken at h = 1 - q

    Parameters
    ----------
    l : LinComb
    cfg : EvalConfig

    Returns
    -------
    QSeries
    """
    result = QSeries.zero(cfg.order)
    for w, c in l.items():
        if isinstance(c, LaurentPoly):
            c = _at_one_minus_q(c, cfg.order)
        result = result + word_series(w, cfg) * c
    return result


def qinverse_series(w, order, schlesinger=False):
    """
    Expansion in x = 1/q of a word with n_1 >= 2, n_j >= 1

    Parameters
    ----------
    w : tuple of int
    order : int
     truncation degree in x
    schlesinger : bool
     the numerator-free values (n_1 >= 1, n_j >= 0 suffice), otherwise the
     non modified values, for which x z_q(w) is returned since z_q(w) itself
     starts at x^-1

    Returns
    -------
    XSeries
    """
    w = tuple(w)
    if schlesinger:
        if not w:
            raise QZetaError(ErrorCodes.ERR_DOMAIN, "the empty word has no schlesinger series in x")
        schlesinger_word_guard(w)
        first_slope = w[0]
    else:
        convergent_word_guard(w, ErrorCodes.ERR_DOMAIN)
        first_slope = w[0] - 1
    m_max = order // first_slope + 1
    m_range = range(1, m_max + 1)

    def factor(m, n, shift):
        s = ps_pow_one_minus_q(n, order) * ps_expand_factor(m, n, order)
        return s.shift(shift) if shift <= order else QSeries.zero(order)

    rows = [[factor(m, n, (m - 1) * n) for m in m_range] for n in w]
    if not schlesinger:
        rows[0] = [factor(m, w[0], (m - 1) * first_slope) for m in m_range]
    total = nested_sum(rows, QSeries.zero(order))
    return XSeries(total.coeffs, order)
