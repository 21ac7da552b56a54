"""Elimination of inner operators in products of q-differences and q-sums.

G(a, b, c) stands for O^c[L^a f . R^b g] with the outer operator O and the
branch operators L, R fixed by the kind:

* DD: O = D, L = D, R = D, moves from D[f]D[g] = D[f]g + fD[g] - D[fg]
* DP: O = D, L = D, R = P, moves from D[f]P[g] = D[fP[g]] + D[f]g - fg
* PP: O = P, L = P, R = P, moves from the weight -1 Rota-Baxter identity

Moves are applied until one branch is bare, leaving the shapes
left_zero(i, j) = G(0, i, j), right_zero(i, j) = G(i, 0, j) and
both_zero(j) = G(0, 0, j).
"""
from enum import Enum, unique
from fractions import Fraction
from functools import lru_cache

from qzeta.algebra.jackson import TQSeries, apply_Pq_pow
from qzeta.algebra.words import LinComb
from qzeta.commons.exception import QZetaError, ErrorCodes
from qzeta.commons.guard import non_negative_guard
from qzeta.identities.euler import binomial, multinomial

LEFT_ZERO = "left_zero"
RIGHT_ZERO = "right_zero"
BOTH_ZERO = "both_zero"
SHAPES = (LEFT_ZERO, RIGHT_ZERO, BOTH_ZERO)


@unique
class EliminationKind(Enum):
    DD = "DD"
    DP = "DP"
    PP = "PP"

    @classmethod
    def from_name(cls, name):
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).upper())
        except ValueError as error:
            raise QZetaError(ErrorCodes.ERR_INVALID_ARGUMENT,
                             f"unknown elimination kind {name!r}, expected one of {[k.value for k in cls]}",
                             stack_trace=error)


def _shape(kind, i, j):
    return kind, i, j


def left_zero(i, j):
    return _shape(LEFT_ZERO, i, j)


def right_zero(i, j):
    return _shape(RIGHT_ZERO, i, j)


def both_zero(j):
    return _shape(BOTH_ZERO, 0, j)


def gamma_triple(shape):
    """ (a, b, c) of G(a, b, c) for a shape """
    kind, i, j = shape
    if kind == LEFT_ZERO:
        return 0, i, j
    if kind == RIGHT_ZERO:
        return i, 0, j
    return 0, 0, j


class GammaExpansion(object):
    """
    Collected combination of shapes with rational coefficients.
    """

    __slots__ = ("_kind", "_terms")

    def __init__(self, kind, terms=None):
        self._kind = EliminationKind.from_name(kind)
        collected = {}
        for shape, c in (terms.items() if hasattr(terms, "items") else (terms or [])):
            collected[shape] = collected.get(shape, 0) + Fraction(c)
        self._terms = {s: c for s, c in collected.items() if c}

    @property
    def kind(self):
        return self._kind

    def terms(self):
        """ (coefficient, shape) pairs in a deterministic order """
        return [(self._terms[s], s) for s in sorted(self._terms, key=lambda s: (s[2], SHAPES.index(s[0]), s[1]))]

    def coeff(self, shape):
        return self._terms.get(shape, Fraction(0))

    def is_zero(self):
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __sub__(self, other):
        terms = dict(self._terms)
        for s, c in other._terms.items():
            terms[s] = terms.get(s, 0) - c
        return GammaExpansion(self._kind, terms)

    def __eq__(self, other):
        if not isinstance(other, GammaExpansion):
            return NotImplemented
        return self._kind is other._kind and (self - other).is_zero()

    __hash__ = None

    def first_difference(self, other):
        """ first shape, in term order, where the two expansions differ, or None """
        difference = self - other
        if difference.is_zero():
            return None
        _, shape = difference.terms()[0]
        return shape, self.coeff(shape), other.coeff(shape)

    def to_words(self):
        """
        The word combination obtained with f = g = ybar, each shape read as
        the word of its nested operators
        """
        terms = []
        for c, (kind, i, j) in self.terms():
            if kind == BOTH_ZERO:
                w = (j if self._kind is EliminationKind.PP else -j, 0)
            elif self._kind is EliminationKind.PP:
                w = (j, i)
            elif self._kind is EliminationKind.DP and kind == LEFT_ZERO:
                w = (-j, i)
            else:
                w = (-j, -i)
            terms.append((w, c))
        return LinComb(terms)

    def evaluate(self, f, g, evaluator=None):
        """
        Parameters
        ----------
        f, g : TQSeries
         elements of t.Q[[t, q]]
        evaluator : ShapeEvaluator, optional
         shares already evaluated shapes between expansions of the same f, g

        Returns
        -------
        TQSeries
        """
        evaluator = evaluator if evaluator is not None else ShapeEvaluator(self._kind, f, g)
        result = TQSeries.zero(min(f.order, g.order))
        for c, shape in self.terms():
            result = result + evaluator(shape) * c
        return result

    def __str__(self):
        if not self._terms:
            return "0"
        text = ""
        for c, shape in self.terms():
            sign = " - " if c < 0 else " + "
            magnitude = abs(c)
            gamma = "G({},{},{})".format(*gamma_triple(shape))
            text += sign + (gamma if magnitude == 1 else f"{magnitude} {gamma}")
        return text[3:] if text.startswith(" + ") else "-" + text[3:]

    def __repr__(self):
        return f"GammaExpansion({self._kind.value}: {self})"


class ShapeEvaluator(object):
    """
    Memoised value of each shape on fixed f, g.
    """

    def __init__(self, kind, f, g):
        self.kind = EliminationKind.from_name(kind)
        self.f = f
        self.g = g
        self._cache = {}
        self._branches = {}

    def _outer(self, x, j):
        return apply_Pq_pow(x, j if self.kind is EliminationKind.PP else -j)

    def _branch(self, side, i):
        key = (side, i)
        if key not in self._branches:
            if side == "left":
                sign = 1 if self.kind is EliminationKind.PP else -1
                self._branches[key] = apply_Pq_pow(self.f, sign * i)
            else:
                sign = -1 if self.kind is EliminationKind.DD else 1
                self._branches[key] = apply_Pq_pow(self.g, sign * i)
        return self._branches[key]

    def __call__(self, shape):
        if shape not in self._cache:
            kind, i, j = shape
            if kind == LEFT_ZERO:
                inner = self.f * self._branch("right", i)
            elif kind == RIGHT_ZERO:
                inner = self._branch("left", i) * self.g
            else:
                inner = self.f * self.g
            self._cache[shape] = self._outer(inner, j)
        return self._cache[shape]

    def direct(self, a, b):
        """ L^a f . R^b g """
        return self._branch("left", a) * self._branch("right", b)


def _shifted(terms, sign=1, lift=0):
    return [((kind, i, j + lift), sign * c) for (kind, i, j), c in terms]


@lru_cache(maxsize=None)
def _eliminate(a, b, kind):
    if a == 0 and b == 0:
        return ((both_zero(0), 1),)
    if a == 0:
        return ((left_zero(b, 0), 1),)
    if b == 0:
        return ((right_zero(a, 0), 1),)
    if kind is EliminationKind.DD:
        terms = _shifted(_eliminate(a - 1, b, kind)) + _shifted(_eliminate(a, b - 1, kind))
        terms += _shifted(_eliminate(a - 1, b - 1, kind), sign=-1, lift=1)
    elif kind is EliminationKind.DP:
        terms = _shifted(_eliminate(a - 1, b, kind), lift=1) + _shifted(_eliminate(a, b - 1, kind))
        terms += _shifted(_eliminate(a - 1, b - 1, kind), sign=-1)
    else:
        terms = _shifted(_eliminate(a - 1, b, kind), lift=1) + _shifted(_eliminate(a, b - 1, kind), lift=1)
        terms += _shifted(_eliminate(a - 1, b - 1, kind), sign=-1, lift=1)
    collected = {}
    for shape, c in terms:
        collected[shape] = collected.get(shape, 0) + c
    return tuple((s, c) for s, c in collected.items() if c)


def build_elimination_expansion(a, b, kind):
    """
    Normal form of L^a f . R^b g

    Parameters
    ----------
    a, b : int
     non negative; a bare branch is returned untouched
    kind : EliminationKind or str
     DD, DP or PP

    Returns
    -------
    GammaExpansion
    """
    non_negative_guard(a, "a")
    non_negative_guard(b, "b")
    kind = EliminationKind.from_name(kind)
    return GammaExpansion(kind, dict(_eliminate(a, b, kind)))


# printed closed forms


def dd_closed_form(a, b):
    """ five sum closed form of D^a f . D^b g """
    terms = []
    for j in range(a):
        for i in range(1, b - j + 1):
            terms.append((left_zero(i, j), (-1) ** j * multinomial(a + b - 1 - i - j, (j, a - 1 - j, b - i - j))))
    for j in range(1, a + 1):
        for i in range(1, b - j + 1):
            terms.append((left_zero(i, j), (-1) ** j * multinomial(a + b - 1 - i - j, (j - 1, a - j, b - i - j))))
    for j in range(b):
        for i in range(1, a - j + 1):
            terms.append((right_zero(i, j), (-1) ** j * multinomial(a + b - 1 - i - j, (j, b - 1 - j, a - i - j))))
    for j in range(1, b + 1):
        for i in range(1, a - j + 1):
            terms.append((right_zero(i, j), (-1) ** j * multinomial(a + b - 1 - i - j, (j - 1, b - j, a - i - j))))
    for j in range(1, a + 1):
        terms.append((both_zero(j), (-1) ** j * multinomial(a + b - 1 - j, (j - 1, a - j, b - j))))
    return GammaExpansion(EliminationKind.DD, _collect(terms))


def dd_slim_closed_form(a, b):
    """ three sum closed form of D^a f . D^b g """
    terms = []
    for j in range(a + 1):
        for i in range(1, b - j + 1):
            terms.append((left_zero(i, j), (-1) ** j * binomial(a + b - 1 - i - j, a - 1) * binomial(a, j)))
    for j in range(b + 1):
        for i in range(1, max(1, a - j) + 1):
            terms.append((right_zero(i, j), (-1) ** j * binomial(a + b - 1 - i - j, b - 1) * binomial(b, j)))
    for j in range(1, a + 1):
        terms.append((both_zero(j), (-1) ** j * multinomial(a + b - 1 - j, (j - 1, a - j, b - j))))
    return GammaExpansion(EliminationKind.DD, _collect(terms))


def dp_slim_closed_form(a, b):
    """ three sum closed form of D^a f . P^b g """
    terms = []
    for j in range(a + 1):
        for i in range(1, b - a + j + 1):
            terms.append((left_zero(i, j), (-1) ** (a - j) * binomial(b - 1 - i + j, a - 1) * binomial(a, j)))
    for k in range(1, a + 1):
        for i in range(1, k + 1):
            terms.append((right_zero(i, k - i),
                          (-1) ** (a - k) * binomial(b - 1 - i + k, b - 1) * binomial(b, a - k)))
    for j in range(a):
        terms.append((both_zero(j), (-1) ** (a - j) * multinomial(b - 1 + j, (j, a - 1 - j, b - a + j))))
    return GammaExpansion(EliminationKind.DP, _collect(terms))


CLOSED_FORMS = {"dd_theorem": dd_closed_form, "dd_slim": dd_slim_closed_form, "dp_slim": dp_slim_closed_form}


def _collect(terms):
    collected = {}
    for shape, c in terms:
        collected[shape] = collected.get(shape, 0) + c
    return collected
