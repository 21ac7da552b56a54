"""Printed decompositions of products of single values.

Every function returns the right-hand side as a word combination, ready to be
evaluated and compared with the product of the two series. Binomials and
multinomials with a negative slot count as zero.
"""
from fractions import Fraction
from math import comb, factorial

from qzeta.algebra.words import LinComb, Y
from qzeta.commons.guard import precondition_guard
from qzeta.evaluator.series import eval_lincomb


def binomial(n, k):
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def multinomial(n, parts):
    """ n! / prod(parts!), zero unless every part is >= 0 and they sum to n """
    if any(p < 0 for p in parts) or sum(parts) != n:
        return 0
    result = factorial(n)
    for p in parts:
        result //= factorial(p)
    return result


class EulerCoefficients(object):
    """
    The beta_j and alpha_k weights of the positive decomposition, for 1 < a <= b.

    beta_j = (-1)^(a-j) M(j+b-1; j, j+b-a, a-j-1)
    alpha_k = sum_{j=b}^{k} (-1)^(a+b-j) / (1-j) M(j-1; j-b, j-a, a+b-j-1)
    """

    def __init__(self, a, b):
        precondition_guard(1 < a <= b, f"the decomposition needs 1 < a <= b, got a={a}, b={b}")
        self.a = a
        self.b = b
        self.beta = {j: self._beta(j) for j in range(a)}
        self.alpha = {k: self._alpha(k) for k in range(b, a + b - 1)}

    def _beta(self, j):
        a, b = self.a, self.b
        return Fraction((-1) ** (a - j) * multinomial(j + b - 1, (j, j + b - a, a - j - 1)))

    def _alpha(self, k):
        a, b = self.a, self.b
        # j >= b >= 2 keeps 1 - j away from zero
        return sum((Fraction((-1) ** (a + b - j) * multinomial(j - 1, (j - b, j - a, a + b - j - 1)), 1 - j)
                    for j in range(b, k + 1)), Fraction(0))

    def __repr__(self):
        return f"EulerCoefficients(a={self.a}, b={self.b})"


class ClosedForm(object):
    """
    plain + delta(derived): a word combination plus the q d/dq derivative of
    another one
    """

    def __init__(self, plain, derived=None):
        self.plain = plain
        self.derived = derived if derived is not None else LinComb.zero()

    def evaluate(self, cfg):
        return eval_lincomb(self.plain, cfg) + eval_lincomb(self.derived, cfg).delta()

    def __str__(self):
        if self.derived.is_zero():
            return str(self.plain)
        if self.plain.is_zero():
            return f"delta[{self.derived}]"
        return f"{self.plain} + delta[{self.derived}]"


def z_euler(a, b):
    """
    z(a) z(b) for 1 < a <= b, with the beta terms of weight a + b - k and the
    alpha weighted delta terms
    """
    coefficients = EulerCoefficients(a, b)
    terms = []
    for l in range(a):
        for k in range(a - l):
            terms.append(((b + l, a - l - k), (-1) ** k * binomial(l + b - 1, b - 1) * binomial(b, k)))
    for l in range(b):
        for k in range(min(a, b - 1 - l) + 1):
            terms.append(((a + l, b - l - k), (-1) ** k * binomial(l + a - 1, a - 1) * binomial(a, k)))
    for k in range(1, a + 1):
        terms.append(((a + b - k,), -coefficients.beta[a - k]))
    derived = [((a + b - 1 - j,), coefficients.alpha[a + b - 1 - j]) for j in range(1, a)]
    return ClosedForm(LinComb(terms), LinComb(derived))


def mod_q_shuffle(a, b):
    """ z(a,b) + z(b,a) + z(a+b) - z(a,b-1) - z(b,a-1) - z(a+b-1), any a, b """
    return LinComb([((a, b), 1), ((b, a), 1), ((a + b,), 1),
                    ((a, b - 1), -1), ((b, a - 1), -1), ((a + b - 1,), -1)])


def neg_neg(a, b):
    """ z(-a) z(-b) for 1 < a <= b as printed """
    terms = []
    for j in range(a + 1):
        for i in range(1, b - j + 1):
            terms.append(((-j, -i), (-1) ** j * binomial(a + b - 1 - i - j, a - 1) * binomial(a, j)))
    for j in range(b + 1):
        for i in range(1, max(1, a - j) + 1):
            terms.append(((-j, -i), (-1) ** j * binomial(a + b - 1 - i - j, b - 1) * binomial(b, j)))
    for j in range(1, a + 1):
        terms.append(((-j, 0), (-1) ** j * multinomial(a + b - 1 - j, (j - 1, a - j, b - j))))
    return LinComb(terms)


def neg_pos(a, b):
    """ z(-a) z(b) for 1 < a <= b as printed """
    terms = []
    for j in range(a + 1):
        for i in range(1, b - a + j + 1):
            terms.append(((-j, i), (-1) ** (a - j) * binomial(b - 1 - i + j, a - 1) * binomial(a, j)))
    for k in range(1, a + 1):
        for i in range(1, k + 1):
            terms.append(((-k + 1, -i), (-1) ** (a - k) * binomial(b - 1 - i + k, b - 1) * binomial(b, a - k)))
    for j in range(min(a - 1, b - a + 1) + 1):
        terms.append(((-j, 0), (-1) ** (a - j) * multinomial(b - 1 + j, (j, a - 1 - j, b - a - j))))
    return LinComb(terms)


def classical_euler(a, b):
    """ zeta(a) zeta(b) as a combination of depth two y-words, 2 <= a <= b """
    terms = [((b + i, a - i), binomial(i + b - 1, b - 1)) for i in range(a)]
    terms += [((a + j, b - j), binomial(j + a - 1, a - 1)) for j in range(b)]
    return LinComb(terms, kind=Y)


def delta_two():
    """ delta z(2) = 4 z(3,1) - 2 z(2,1) - z(2) + 3 z(3) - z(4) """
    return LinComb([((3, 1), 4), ((2, 1), -2), ((2,), -1), ((3,), 3), ((4,), -1)])


def delta_from_products(b):
    """
    delta z(b) for b > 2, from the two decompositions of z(2) z(b)
    """
    precondition_guard(b > 2, f"the expression needs b > 2, got b={b}")
    terms = [((b + 1,), b + 1), ((b,), -(b - 1)), ((b + 2,), -1),
             ((b + 1, 1), 2 * b), ((b, 1), 1 - b), ((2, b - 1), -1), ((2, b - 2), 1)]
    for l in range(1, b - 1):
        for k in range(min(2, b - 1 - l) + 1):
            terms.append(((2 + l, b - l - k), (-1) ** k * (l + 1) * binomial(2, k)))
    return LinComb(terms)
