"""Truncated formal power series in q over the rationals.

A :class:`QSeries` carries its truncation order: it holds the coefficients of
q^0 .. q^order and nothing is known beyond. Binary operations truncate to the
smaller order, so no operation ever invents precision.
"""
from fractions import Fraction
from math import comb
from numbers import Rational as RationalNumber

from qzeta.algebra.coeffs import to_rational, format_rational, parse_rational
from qzeta.commons.exception import QZetaError, ErrorCodes
from qzeta.commons.guard import non_negative_guard, positive_guard

PS_OPS = ("add", "sub", "mul")


class QSeries(object):
    """
    Dense truncated power series c_0 + c_1 q + ... + c_N q^N.

    Equality compares coefficients up to the smaller of the two orders.
    """

    __slots__ = ("_coeffs",)
    var = "q"

    def __init__(self, coeffs, order=None):
        """

        Parameters
        ----------
        coeffs : iterable of rationals
         c_0, c_1, ... ; missing entries are zero, entries beyond order are dropped
        order : int, optional
         truncation degree, by default len(coeffs) - 1
        """
        values = [to_rational(c) for c in coeffs]
        if order is None:
            order = len(values) - 1
        non_negative_guard(order, "order")
        values = values[:order + 1]
        values.extend([Fraction(0)] * (order + 1 - len(values)))
        self._coeffs = tuple(values)

    @classmethod
    def zero(cls, order):
        return cls([], order)

    @classmethod
    def one(cls, order):
        return cls([1], order)

    @classmethod
    def monomial(cls, coeff, exponent, order):
        if exponent > order:
            return cls.zero(order)
        return cls([0] * exponent + [coeff], order)

    @classmethod
    def from_dict(cls, terms, order):
        coeffs = [0] * (order + 1)
        for e, c in terms.items():
            if e <= order:
                coeffs[e] += to_rational(c)
        return cls(coeffs, order)

    @property
    def order(self):
        return len(self._coeffs) - 1

    @property
    def coeffs(self):
        return self._coeffs

    def __getitem__(self, n):
        if n > self.order:
            raise QZetaError(ErrorCodes.ERR_INVALID_ARGUMENT,
                             f"coefficient of q^{n} is beyond the truncation order {self.order}")
        return self._coeffs[n]

    def __len__(self):
        return len(self._coeffs)

    def truncate(self, order):
        return QSeries(self._coeffs, min(order, self.order))

    def is_zero(self):
        return not any(self._coeffs)

    def first_nonzero(self):
        """ smallest degree with a nonzero coefficient, None for the zero series """
        for n, c in enumerate(self._coeffs):
            if c:
                return n
        return None

    def __add__(self, other):
        if isinstance(other, RationalNumber):
            other = QSeries.monomial(other, 0, self.order)
        if not isinstance(other, QSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return QSeries([a + b for a, b in zip(self._coeffs[:order + 1], other._coeffs[:order + 1])], order)

    __radd__ = __add__

    def __neg__(self):
        return QSeries([-c for c in self._coeffs], self.order)

    def __sub__(self, other):
        if isinstance(other, RationalNumber):
            other = QSeries.monomial(other, 0, self.order)
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RationalNumber):
            return QSeries([c * other for c in self._coeffs], self.order)
        if not isinstance(other, QSeries):
            return NotImplemented
        order = min(self.order, other.order)
        a, b = self._coeffs, other._coeffs
        out = [Fraction(0)] * (order + 1)
        for i in range(order + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(order + 1 - i):
                if b[j]:
                    out[i + j] += ai * b[j]
        return QSeries(out, order)

    __rmul__ = __mul__

    def shift(self, k):
        """ multiply by q^k, k >= 0, dropping what falls beyond the order """
        non_negative_guard(k, "shift")
        return QSeries([0] * k + list(self._coeffs[:max(0, self.order + 1 - k)]), self.order)

    def delta(self):
        """ the derivation q d/dq """
        return QSeries([n * c for n, c in enumerate(self._coeffs)], self.order)

    def inverse(self):
        """ multiplicative inverse, defined when the constant term is nonzero """
        c0 = self._coeffs[0]
        if c0 == 0:
            raise QZetaError(ErrorCodes.ERR_NOT_INVERTIBLE, "a series without constant term has no inverse")
        inv = [Fraction(1) / c0]
        for n in range(1, self.order + 1):
            acc = sum((self._coeffs[k] * inv[n - k] for k in range(1, n + 1)), Fraction(0))
            inv.append(-acc / c0)
        return QSeries(inv, self.order)

    def pow(self, n):
        """ integer power; negative powers go through inverse() """
        base = self if n >= 0 else self.inverse()
        result = QSeries.one(self.order)
        for _ in range(abs(n)):
            result = result * base
        return result

    def eval_at(self, q0):
        return ps_eval_at(self, q0)

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return self._coeffs[:order + 1] == other._coeffs[:order + 1]

    __hash__ = None

    def __str__(self):
        parts = []
        for n, c in enumerate(self._coeffs):
            if not c:
                continue
            monomial = "1" if n == 0 else (self.var if n == 1 else f"{self.var}^{n}")
            parts.append(format_rational(c) if n == 0 else f"{format_rational(c)}*{monomial}")
        return (" + ".join(parts) or "0") + f" + O({self.var}^{self.order + 1})"

    def __repr__(self):
        return f"{type(self).__name__}({self})"

    def to_json(self):
        return {"var": self.var, "order": self.order, "coeffs": [format_rational(c) for c in self._coeffs]}

    @classmethod
    def from_json(cls, doc):
        if doc.get("var", "q") != cls.var:
            raise QZetaError(ErrorCodes.ERR_PARSE, f"expected a series in {cls.var}, got {doc.get('var')}")
        return cls([parse_rational(c) for c in doc["coeffs"]], doc["order"])


def ps_arith(a, b, op):
    """

    Parameters
    ----------
    a, b : QSeries
    op : str
     add, sub or mul

    Returns
    -------
    QSeries
     truncated at min(a.order, b.order)
    """
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise QZetaError(ErrorCodes.ERR_INVALID_ARGUMENT, f"unknown operation {op}, expected one of {PS_OPS}")


def ps_delta(a):
    return a.delta()


def ps_expand_factor(m, n, order):
    """
    Expansion of (1 - q^m)^(-n)

    Parameters
    ----------
    m : int
     positive
    n : int
     any sign, n < 0 gives the polynomial (1 - q^m)^|n|
    order : int

    Returns
    -------
    QSeries
    """
    positive_guard(m, "m")
    non_negative_guard(order, "order")
    coeffs = [0] * (order + 1)
    if n >= 0:
        # sum_j C(n-1+j, j) q^(mj)
        for j in range(order // m + 1):
            coeffs[m * j] = comb(n - 1 + j, j) if n > 0 else (1 if j == 0 else 0)
    else:
        for j in range(min(-n, order // m) + 1):
            coeffs[m * j] = (-1) ** j * comb(-n, j)
    return QSeries(coeffs, order)


def ps_pow_one_minus_q(w, order):
    """ (1 - q)^w for any integer w """
    return ps_expand_factor(1, -w, order)


def ps_eval_at(a, q0):
    """ Horner evaluation of the truncated polynomial at q0 (exact for rational q0) """
    if isinstance(q0, float):
        value = 0.0
    else:
        q0 = to_rational(q0)
        value = Fraction(0)
    for c in reversed(a.coeffs):
        value = value * q0 + c
    return value


class XSeries(QSeries):
    """ a truncated series in x = 1/q; arithmetic falls back to QSeries """

    __slots__ = ()
    var = "x"
