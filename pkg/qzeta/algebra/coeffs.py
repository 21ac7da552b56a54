"""Exact coefficient rings.

Rationals are :class:`fractions.Fraction`, always reduced with a positive
denominator. :class:`LaurentPoly` holds finite Laurent polynomials in the
grading indeterminate ``h`` (h stands for 1 - q) with rational coefficients.
"""
import re
from fractions import Fraction
from numbers import Rational as RationalNumber
from types import MappingProxyType

from qzeta.commons.exception import QZetaError, ErrorCodes

Rational = Fraction

RAT_OPS = ("add", "sub", "mul", "div")
LAURENT_OPS = ("add", "mul")


def to_rational(value):
    """

    Parameters
    ----------
    value : int, Fraction or str
     strings use the "p/q" form, the denominator may be omitted

    Returns
    -------
    Fraction
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, RationalNumber):
        return Fraction(value)
    raise QZetaError(ErrorCodes.ERR_INVALID_ARGUMENT, f"{value!r} is not an exact rational")


def parse_rational(text):
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as error:
        raise QZetaError(ErrorCodes.ERR_PARSE, f"cannot read a rational from {text!r}", stack_trace=error)


def format_rational(r):
    """ "p/q", or "p" when the denominator is 1 """
    r = Fraction(r)
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def rat_arith(a, b, op):
    """
    Exact rational arithmetic

    Parameters
    ----------
    a, b : Fraction
    op : str
     one of add, sub, mul, div

    Returns
    -------
    Fraction

    Raises
    ------
    QZetaError
     ERR_DIVISION_BY_ZERO when dividing by zero
    """
    a, b = to_rational(a), to_rational(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise QZetaError(ErrorCodes.ERR_DIVISION_BY_ZERO, f"division of {format_rational(a)} by zero")
        return a / b
    raise QZetaError(ErrorCodes.ERR_INVALID_ARGUMENT, f"unknown operation {op}, expected one of {RAT_OPS}")


_LAURENT_TERM = re.compile(r"^(?P<sign>-?)(?:(?P<coeff>\d+(?:/\d+)?)(?:\*(?P<power>h(?:\^(?P<exp>-?\d+))?))?"
                           r"|(?P<bare>h(?:\^(?P<bare_exp>-?\d+))?))$")


class LaurentPoly(object):
    """
    Sparse Laurent polynomial in h with rational coefficients.

    Immutable and hashable; zero coefficients are never stored, so the zero
    polynomial has no terms. Scalars (int, Fraction) mix freely in + - *.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        collected = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for exponent, coeff in items:
                total = collected.get(int(exponent), 0) + to_rational(coeff)
                collected[int(exponent)] = total
        self._terms = {e: c for e, c in sorted(collected.items()) if c != 0}
        self._hash = None

    @classmethod
    def constant(cls, c):
        return cls({0: c})

    @classmethod
    def monomial(cls, coeff, exponent):
        return cls({exponent: coeff})

    @classmethod
    def h_power(cls, exponent):
        return cls({exponent: 1})

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def exponents(self):
        return tuple(self._terms)

    def min_exponent(self):
        return min(self._terms) if self._terms else None

    def max_exponent(self):
        return max(self._terms) if self._terms else None

    def is_homogeneous(self):
        return len(self._terms) <= 1

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, RationalNumber):
            return LaurentPoly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, RationalNumber):
            return LaurentPoly({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                terms[e1 + e2] = terms.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(terms)

    __rmul__ = __mul__

    def shift(self, k):
        """ multiply by h^k """
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def at_one(self):
        """ value at h = 1 """
        return sum(self._terms.values(), Fraction(0))

    def value_at(self, h0):
        """ numeric value at h = h0, exact for a rational h0 """
        start = Fraction(0) if isinstance(h0, RationalNumber) else 0.0
        return sum((c * h0 ** e for e, c in self._terms.items()), start)

    def truncate(self, max_exponent):
        return LaurentPoly({e: c for e, c in self._terms.items() if e <= max_exponent})

    def substitute(self, s, order):
        return laurent_substitute(self, s, order)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self):
        if not self._terms:
            return "0"
        text = ""
        for e, c in self._terms.items():
            magnitude = format_rational(abs(c))
            power = "h" if e == 1 else f"h^{e}"
            if e == 0:
                term = magnitude
            else:
                term = power if abs(c) == 1 else f"{magnitude}*{power}"
            text += (" - " if c < 0 else " + ") + term
        return text[3:] if text.startswith(" + ") else "-" + text[3:]

    def __repr__(self):
        return f"LaurentPoly({self})"

    @classmethod
    def from_text(cls, text):
        """
        inverse of str(): terms "c", "h^e" or "c*h^e" joined by " + " or " - ";
        a signed coefficient after " + " ("1 + -1*h") is read too
        """
        text = text.strip()
        if text == "0":
            return cls()
        terms = {}
        for part in text.replace(" - ", " + -").split(" + "):
            match = _LAURENT_TERM.match(part.strip())
            if match is None:
                raise QZetaError(ErrorCodes.ERR_PARSE, f"cannot read a Laurent term from {part!r}")
            coeff = Fraction(match.group("coeff")) if match.group("coeff") is not None else Fraction(1)
            if match.group("sign"):
                coeff = -coeff
            if match.group("bare") is not None:
                exponent = int(match.group("bare_exp")) if match.group("bare_exp") is not None else 1
            elif match.group("power") is not None:
                exponent = int(match.group("exp")) if match.group("exp") is not None else 1
            else:
                exponent = 0
            terms[exponent] = terms.get(exponent, 0) + coeff
        return cls(terms)


H = LaurentPoly.h_power(1)


def laurent_arith(p, q, op):
    if op == "add":
        return LaurentPoly._coerce(p) + q
    if op == "mul":
        return LaurentPoly._coerce(p) * q
    raise QZetaError(ErrorCodes.ERR_INVALID_ARGUMENT, f"unknown operation {op}, expected one of {LAURENT_OPS}")


def laurent_substitute(p, s, order):
    """
    Substitute a power series for h

    Parameters
    ----------
    p : LaurentPoly or rational
    s : QSeries
     the substituted series, usually 1 - q
    order : int
     truncation degree of the result

    Returns
    -------
    QSeries
     sum of coeff * s^e truncated at order

    Raises
    ------
    QZetaError
     ERR_NOT_INVERTIBLE when p has negative exponents and s(0) == 0
    """
    from qzeta.algebra.powerseries import QSeries

    p = LaurentPoly._coerce(p)
    s = s.truncate(min(order, s.order))
    result = QSeries.zero(s.order)
    if p.is_zero():
        return result
    s_inverse = s.inverse() if p.min_exponent() < 0 else None
    for e, c in p.terms.items():
        base = s if e >= 0 else s_inverse
        result = result + base.pow(abs(e)) * c
    return result
