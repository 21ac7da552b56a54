"""delta = q d/dq of modified values as combinations of modified values.

Each builder returns a :class:`~qzeta.identities.euler.ClosedForm`, the plain
part plus the delta of a second combination, so both sides of an identity
evaluate the same way.
"""
from fractions import Fraction

from qzeta.algebra.words import LinComb
from qzeta.commons.guard import precondition_guard
from qzeta.identities.euler import ClosedForm, delta_from_products


def _pair(a):
    """ z(a,0) + z(a) """
    return [((a, 0), 1), ((a,), 1)]


def _scaled(terms, c):
    return [(w, c * x) for w, x in terms]


def delta_single(a):
    """ delta z(a) = (1-a)(z(a,0) + z(a)) + a(z(a+1,0) + z(a+1)), any integer a """
    return ClosedForm(LinComb(_scaled(_pair(a), 1 - a) + _scaled(_pair(a + 1), a)))


def delta_general(args):
    """
    delta of a value of any depth

    Parameters
    ----------
    args : tuple of int
     (a_1, ..., a_k), any integers

    Returns
    -------
    ClosedForm
    """
    args = tuple(args)
    k = len(args)
    terms = [(args, k - sum(a * (k - r) for r, a in enumerate(args)))]
    for r, a in enumerate(args):
        raised = args[:r] + (a + 1,) + args[r + 1:]
        terms.append((raised, a * (k - r)))
    for s in range(1, k + 1):
        terms.append((args[:s] + (0,) + args[s:], 1 - sum(args[:s])))
    for r in range(k):
        raised = args[:r] + (args[r] + 1,) + args[r + 1:]
        for s in range(r + 1, k + 1):
            terms.append((raised[:s] + (0,) + raised[s:], args[r]))
    return ClosedForm(LinComb(terms))


def telescoped(a):
    """
    z(a,0) + z(a) through the delta of single values

    a >= 2: (sum_{j=2}^{a-1} delta z(j) + z(2,0) + z(2)) / (a-1)
    a <= 0: (sum_{j=1}^{|a|} delta z(-j) + z(0,0) + z(0)) / (|a|+1)
    """
    precondition_guard(a != 1, "the telescoped sums need a >= 2 or a <= 0, z(1,0) + z(1) does not enter them")
    if a >= 2:
        scale = Fraction(1, a - 1)
        return ClosedForm(LinComb(_scaled(_pair(2), scale)), LinComb([((j,), scale) for j in range(2, a)]))
    scale = Fraction(1, 1 - a)
    return ClosedForm(LinComb(_scaled(_pair(0), scale)), LinComb([((-j,), scale) for j in range(1, -a + 1)]))


def step_recursion(a):
    """ z(a+1,0) + z(a+1) = delta z(a) / a + (a-1)/a (z(a,0) + z(a)), a != 0 """
    precondition_guard(a != 0, "the step recursion divides by a, got a=0")
    return ClosedForm(LinComb(_scaled(_pair(a), Fraction(a - 1, a))), LinComb([((a,), Fraction(1, a))]))


def kappa_relation(kappa):
    """
    sum_i kappa_i z(-i,0) through delta z(-i), z(-i) and z(0,0) + z(0)

    Parameters
    ----------
    kappa : sequence of rationals
     kappa_1, ..., kappa_n

    Returns
    -------
    (LinComb, ClosedForm)
     the left combination and the right side
    """
    kappa = [Fraction(c) for c in kappa]
    n = len(kappa)
    precondition_guard(n >= 1, "the relation needs at least one coefficient")
    lhs = LinComb([((-i, 0), kappa[i - 1]) for i in range(1, n + 1)])
    derived = []
    for i in range(1, n + 1):
        derived.append(((-i,), sum((kappa[n - j] / (n + 2 - j) for j in range(1, n - i + 2)), Fraction(0))))
    plain = [((-i,), -kappa[i - 1]) for i in range(1, n + 1)]
    plain += _scaled(_pair(0), sum((kappa[i - 1] / (i + 1) for i in range(1, n + 1)), Fraction(0)))
    return lhs, ClosedForm(LinComb(plain), LinComb(derived))


def delta_of_products(b):
    """ delta z(b) for b > 2, obtained from the two decompositions of z(2) z(b) """
    return ClosedForm(delta_from_products(b))
