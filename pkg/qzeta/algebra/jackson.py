"""The (t, q) operator calculus.

Elements of t.Q[[t, q]] are stored as :class:`TQSeries`, truncated on total
degree: a monomial t^i q^j is kept iff i + j <= order. Every operator below
(E_q, P_q, D_q, J, multiplication by ybar) weakly raises i + j, so the
truncation is closed under them and setting t = q is exact up to the order.
"""
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as RationalNumber
from types import MappingProxyType

from qzeta import LOGGER
from qzeta.algebra.coeffs import to_rational, format_rational
from qzeta.algebra.powerseries import QSeries
from qzeta.commons.exception import QZetaError, ErrorCodes
from qzeta.commons.guard import non_negative_guard

GENERATORS = ("y", "ybar")


class TQSeries(object):
    """
    Sparse bivariate series sum c_(i,j) t^i q^j with i + j <= order.
    """

    __slots__ = ("_terms", "_order")

    def __init__(self, terms, order):
        non_negative_guard(order, "order")
        collected = {}
        for (i, j), c in (terms.items() if hasattr(terms, "items") else terms):
            if i < 0 or j < 0:
                raise QZetaError(ErrorCodes.ERR_INVALID_ARGUMENT, f"negative exponent in t^{i} q^{j}")
            if i + j <= order:
                collected[(i, j)] = collected.get((i, j), 0) + to_rational(c)
        self._terms = {k: v for k, v in collected.items() if v != 0}
        self._order = order

    @classmethod
    def zero(cls, order):
        return cls({}, order)

    @classmethod
    def one(cls, order):
        return cls({(0, 0): 1}, order)

    @classmethod
    def monomial(cls, coeff, i, j, order):
        return cls({(i, j): coeff}, order)

    @property
    def order(self):
        return self._order

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def t_valuation(self):
        return min((i for i, _ in self._terms), default=None)

    def in_algebra(self):
        """ True when no term has t-exponent 0 """
        return all(i >= 1 for i, _ in self._terms)

    def is_zero(self):
        return not self._terms

    def truncate(self, order):
        return TQSeries(self._terms, min(order, self._order))

    def __add__(self, other):
        if not isinstance(other, TQSeries):
            return NotImplemented
        order = min(self._order, other._order)
        terms = {k: v for k, v in self._terms.items() if sum(k) <= order}
        for k, v in other._terms.items():
            if sum(k) <= order:
                terms[k] = terms.get(k, 0) + v
        return TQSeries(terms, order)

    def __neg__(self):
        return TQSeries({k: -v for k, v in self._terms.items()}, self._order)

    def __sub__(self, other):
        if not isinstance(other, TQSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, RationalNumber):
            return TQSeries({k: v * other for k, v in self._terms.items()}, self._order)
        if not isinstance(other, TQSeries):
            return NotImplemented
        order = min(self._order, other._order)
        terms = {}
        for (i1, j1), c1 in self._terms.items():
            room = order - i1 - j1
            if room < 0:
                continue
            for (i2, j2), c2 in other._terms.items():
                if i2 + j2 <= room:
                    key = (i1 + i2, j1 + j2)
                    terms[key] = terms.get(key, 0) + c1 * c2
        return TQSeries(terms, order)

    __rmul__ = __mul__

    def shift_t(self, k=1):
        """ multiply by t^k """
        return TQSeries({(i + k, j): c for (i, j), c in self._terms.items()}, self._order)

    def __eq__(self, other):
        if not isinstance(other, TQSeries):
            return NotImplemented
        order = min(self._order, other._order)
        mine = {k: v for k, v in self._terms.items() if sum(k) <= order}
        theirs = {k: v for k, v in other._terms.items() if sum(k) <= order}
        return mine == theirs

    __hash__ = None

    def debug_str(self):
        return "\n".join(f"({i},{j}): {format_rational(c)}" for (i, j), c in sorted(self._terms.items()))

    def __repr__(self):
        return f"TQSeries(order={self._order}, terms={len(self._terms)})"


def _require_in_algebra(f, operator):
    if not f.in_algebra():
        raise QZetaError(ErrorCodes.ERR_NOT_IN_ALGEBRA,
                         f"{operator} needs a series without t^0 term (t-valuation {f.t_valuation()})")


def apply_Eq(f):
    """ q-dilation f(t) -> f(qt): t^i q^j -> t^i q^(i+j) """
    _require_in_algebra(f, "E_q")
    return TQSeries({(i, j + i): c for (i, j), c in f.terms.items()}, f.order)


def apply_Pq(f):
    """ q-summation sum_n E_q^n[f]: t^i q^j -> t^i q^j / (1 - q^i) """
    _require_in_algebra(f, "P_q")
    terms = {}
    for (i, j), c in f.terms.items():
        for jj in range(j, f.order - i + 1, i):
            terms[(i, jj)] = terms.get((i, jj), 0) + c
    return TQSeries(terms, f.order)


def apply_Dq(f):
    """ q-difference I - E_q """
    return f - apply_Eq(f)


def apply_Pq_pow(f, n):
    """
    P_q^n for n > 0, D_q^|n| for n < 0, identity for n = 0

    Parameters
    ----------
    f : TQSeries
     with positive t-valuation
    n : int

    Returns
    -------
    TQSeries
    """
    _require_in_algebra(f, "P_q^n")
    step = apply_Pq if n > 0 else apply_Dq
    for _ in range(abs(n)):
        f = step(f)
    return f


def apply_J(f):
    """ Jackson integral (1 - q) P_q[t f] """
    _require_in_algebra(f, "J")
    g = apply_Pq(f.shift_t(1))
    one_minus_q = TQSeries({(0, 0): 1, (0, 1): -1}, f.order)
    return g * one_minus_q


def gen_function(name, order):
    """
    Generator functions in t

    Parameters
    ----------
    name : str
     ybar for t/(1-t), y for 1/(1-t); x = 1/t has no power series and is refused
    order : int

    Returns
    -------
    TQSeries
    """
    if name == "ybar":
        return TQSeries({(i, 0): 1 for i in range(1, order + 1)}, order)
    if name == "y":
        LOGGER.debug("y = 1/(1-t) has a constant term and lies outside t.Q[[t,q]]")
        return TQSeries({(i, 0): 1 for i in range(0, order + 1)}, order)
    raise QZetaError(ErrorCodes.ERR_UNSUPPORTED_GENERATOR,
                     f"generator {name!r} is not a power series in t, available: {GENERATORS}")


@lru_cache(maxsize=4096)
def calZ(w, order):
    """
    Image of the word p^n1 y ... p^nk y: P^n1[ybar P^n2[ybar ... P^nk[ybar]]]

    Parameters
    ----------
    w : tuple of int
    order : int

    Returns
    -------
    TQSeries
     the unit for the empty word
    """
    w = tuple(w)
    if not w:
        return TQSeries.one(order)
    inner = calZ(w[1:], order)
    return apply_Pq_pow(gen_function("ybar", order) * inner, w[0])


def subst_diag(f):
    """ set t = q: t^i q^j -> q^(i+j) """
    coeffs = [Fraction(0)] * (f.order + 1)
    for (i, j), c in f.terms.items():
        coeffs[i + j] += c
    return QSeries(coeffs, f.order)
