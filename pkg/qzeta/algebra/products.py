"""Word products.

Only the h-graded q-shuffle and q-quasi-shuffle are implemented as
recursions; the ungraded products are their images under h := 1. The
classical shuffle (x-words) and the ordinary quasi-shuffle (integer letters,
bracket = sum) complete the set.
"""
from enum import Enum, unique
from functools import lru_cache
from math import comb

from qzeta import LOGGER
from qzeta.algebra.coeffs import LaurentPoly, H
from qzeta.algebra.words import LinComb, W, X, Y, YTILDE, weight
from qzeta.commons.exception import QZetaError, ErrorCodes

ONE = LaurentPoly.constant(1)
H_INVERSE = LaurentPoly.h_power(-1)


@unique
class ProductKind(Enum):
    SHUFFLE_X = "shuffle_X"
    QUASI_SHUFFLE = "quasi_shuffle"
    Q_SHUFFLE = "q_shuffle"
    Q_QUASI_SHUFFLE = "q_quasi_shuffle"
    Q_SHUFFLE_GRADED = "q_shuffle_graded"
    Q_QUASI_SHUFFLE_GRADED = "q_quasi_shuffle_graded"

    @property
    def graded(self):
        return self in (ProductKind.Q_SHUFFLE_GRADED, ProductKind.Q_QUASI_SHUFFLE_GRADED)

    @property
    def alphabet(self):
        return {ProductKind.SHUFFLE_X: X,
                ProductKind.QUASI_SHUFFLE: Y,
                ProductKind.Q_SHUFFLE: W,
                ProductKind.Q_SHUFFLE_GRADED: W}.get(self, YTILDE)

    @classmethod
    def from_name(cls, name):
        """ accepts the tag or its command line alias """
        aliases = {"shuffle": cls.SHUFFLE_X, "quasi": cls.QUASI_SHUFFLE, "stuffle": cls.QUASI_SHUFFLE,
                   "qshuffle": cls.Q_SHUFFLE, "qquasi": cls.Q_QUASI_SHUFFLE,
                   "qshuffle-graded": cls.Q_SHUFFLE_GRADED, "qquasi-graded": cls.Q_QUASI_SHUFFLE_GRADED}
        if name in aliases:
            return aliases[name]
        try:
            return cls(name)
        except ValueError as error:
            raise QZetaError(ErrorCodes.ERR_INVALID_ARGUMENT,
                             f"unknown product {name!r}, expected one of {sorted(aliases)}", stack_trace=error)


PRODUCT_NAMES = ("shuffle", "quasi", "qshuffle", "qquasi", "qshuffle-graded", "qquasi-graded")


def _collect(pairs):
    acc = {}
    for w, c in pairs:
        acc[w] = acc[w] + c if w in acc else c
    return tuple((w, c) for w, c in acc.items() if c)


# classical products


@lru_cache(maxsize=None)
def _shuffle(u, v):
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    terms = [((u[0],) + w, c) for w, c in _shuffle(u[1:], v)]
    terms += [((v[0],) + w, c) for w, c in _shuffle(u, v[1:])]
    return _collect(terms)


def shuffle(u, v):
    """
    Shuffle of x-words (tuples over {0, 1}, or any letters)

    Returns
    -------
    LinComb
     with non negative integer coefficients of total mass C(|u|+|v|, |u|)
    """
    return LinComb(_shuffle(tuple(u), tuple(v)), kind=X)


@lru_cache(maxsize=None)
def _quasi_shuffle(u, v):
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    terms = [((u[0],) + w, c) for w, c in _quasi_shuffle(u[1:], v)]
    terms += [((v[0],) + w, c) for w, c in _quasi_shuffle(u, v[1:])]
    terms += [((u[0] + v[0],) + w, c) for w, c in _quasi_shuffle(u[1:], v[1:])]
    return _collect(terms)


def quasi_shuffle(u, v, kind=Y):
    """ ordinary quasi-shuffle, the bracket of two integer letters is their sum """
    return LinComb(_quasi_shuffle(tuple(u), tuple(v)), kind=kind)


# the q-shuffle on p^n1 y ... p^nk y


def _lead(w):
    if w[0] > 0:
        return "p"
    if w[0] < 0:
        return "d"
    return "y"


def _strip(w):
    """ remove the leading letter """
    head = w[0]
    if head > 0:
        return (head - 1,) + w[1:]
    if head < 0:
        return (head + 1,) + w[1:]
    return w[1:]


def _prefix(letter, w):
    if letter == "y":
        return (0,) + w
    if not w:
        raise QZetaError(ErrorCodes.ERR_NOT_A_W_WORD, f"{letter} cannot close a word")
    return (w[0] + (1 if letter == "p" else -1),) + w[1:]


def _scaled(terms, scale, letter=None):
    if letter is None:
        return [(w, c * scale) for w, c in terms]
    return [(_prefix(letter, w), c * scale) for w, c in terms]


@lru_cache(maxsize=None)
def _q_shuffle(u, v):
    if not u:
        return ((v, ONE),)
    if not v:
        return ((u, ONE),)
    lu, lv = _lead(u), _lead(v)
    if lu == "y":
        return _collect(_scaled(_q_shuffle_sorted(u[1:], v), ONE, "y"))
    if lv == "y":
        return _collect(_scaled(_q_shuffle_sorted(u, v[1:]), ONE, "y"))
    su, sv = _strip(u), _strip(v)
    if lu == lv == "p":
        terms = _scaled(_q_shuffle_sorted(su, v), ONE, "p")
        terms += _scaled(_q_shuffle_sorted(u, sv), ONE, "p")
        terms += _scaled(_q_shuffle_sorted(su, sv), -H, "p")
        return _collect(terms)
    if lu == lv == "d":
        terms = _scaled(_q_shuffle_sorted(su, v), H_INVERSE)
        terms += _scaled(_q_shuffle_sorted(u, sv), H_INVERSE)
        terms += _scaled(_q_shuffle_sorted(su, sv), -H_INVERSE, "d")
        return _collect(terms)
    # one d-word, one p-word
    (dw, sd), (pw, sp) = ((u, su), (v, sv)) if lu == "d" else ((v, sv), (u, su))
    terms = _scaled(_q_shuffle_sorted(sd, pw), ONE, "d")
    terms += _scaled(_q_shuffle_sorted(sd, sp), -ONE)
    terms += _scaled(_q_shuffle_sorted(dw, sp), H)
    return _collect(terms)


def _q_shuffle_sorted(u, v):
    return _q_shuffle(u, v) if u <= v else _q_shuffle(v, u)


def q_shuffle(u, v, graded=False):
    """
    q-shuffle of two words p^n1 y ... p^nk y, given as compositions

    Parameters
    ----------
    u, v : tuple of int
    graded : bool
     Laurent coefficients in h when True, otherwise h := 1

    Returns
    -------
    LinComb
    """
    result = LinComb(_q_shuffle_sorted(tuple(u), tuple(v)), graded=True, kind=W)
    return result if graded else result.at_one()


# the q-quasi-shuffle on z_n1 ... z_nk


def _t_image(w, scale):
    """ T_q on a single non empty word: z_n v - h z_(n-1) v """
    return [(w, ONE), ((w[0] - 1,) + w[1:], -scale)]


def _star(left, right):
    """ ordinary quasi-shuffle extended bilinearly to term lists """
    terms = []
    for w1, c1 in left:
        for w2, c2 in right:
            terms.extend((w, c1 * c2 * c) for w, c in _quasi_shuffle(w1, w2))
    return terms


@lru_cache(maxsize=None)
def _q_quasi_shuffle(u, v):
    if not u:
        return ((v, ONE),)
    if not v:
        return ((u, ONE),)
    m, n = u[0], v[0]
    terms = [((m,) + w, c) for w, c in _star([(u[1:], ONE)], _t_image(v, H))]
    terms += [((n,) + w, c) for w, c in _star(_t_image(u, H), [(v[1:], ONE)])]
    for w, c in _quasi_shuffle(u[1:], v[1:]):
        terms.append(((m + n,) + w, c * ONE))
        terms.append(((m + n - 1,) + w, -H * c))
    return _collect(terms)


def q_quasi_shuffle(u, v, graded=False):
    """
    q-quasi-shuffle, characterised by T(u ⧢- v) = T(u) * T(v)

    Parameters
    ----------
    u, v : tuple of int
    graded : bool
     uses T_q with -h in place of T with -1

    Returns
    -------
    LinComb
    """
    u, v = tuple(u), tuple(v)
    result = LinComb(_q_quasi_shuffle(u, v) if u <= v else _q_quasi_shuffle(v, u), graded=True, kind=YTILDE)
    return result if graded else result.at_one()


# operators


def apply_T(l, h_graded=False):
    """
    T(z_n v) = z_n v - z_(n-1) v, or T_q with -h; the empty word is fixed
    """
    scale = H if h_graded else 1

    def image(w):
        if not w:
            return LinComb.single(w, graded=h_graded)
        return LinComb(_t_image(w, scale) if h_graded else [(w, 1), ((w[0] - 1,) + w[1:], -1)], graded=h_graded)

    return l.map_words(image).with_kind(l.kind)


def apply_T_inverse(l, h_graded=False, depth_cap=8):
    """
    Truncated inverse sum_{k <= depth_cap} h^k z_(n-k) v of T_q (h = 1 for T)

    T_q composed with the result differs from the identity by terms carrying
    h^(depth_cap + 1).
    """
    def image(w):
        if not w:
            return LinComb.single(w, graded=h_graded)
        terms = [((w[0] - k,) + w[1:], LaurentPoly.h_power(k) if h_graded else 1) for k in range(depth_cap + 1)]
        return LinComb(terms, graded=h_graded)

    return l.map_words(image).with_kind(l.kind)


def apply_H(l, direction="forward"):
    """ scales each word by h^weight (forward) or h^-weight (inverse) """
    if direction not in ("forward", "inverse"):
        raise QZetaError(ErrorCodes.ERR_INVALID_ARGUMENT, f"unknown direction {direction}, expected forward or inverse")
    sign = 1 if direction == "forward" else -1
    return l.map_words(lambda w: LinComb.single(w, LaurentPoly.h_power(sign * weight(w)), graded=True))


def product(u, v, kind):
    """ product of two words for a ProductKind """
    kind = kind if isinstance(kind, ProductKind) else ProductKind.from_name(kind)
    if kind is ProductKind.SHUFFLE_X:
        return shuffle(u, v)
    if kind is ProductKind.QUASI_SHUFFLE:
        return quasi_shuffle(u, v)
    if kind in (ProductKind.Q_SHUFFLE, ProductKind.Q_SHUFFLE_GRADED):
        return q_shuffle(u, v, graded=kind.graded)
    return q_quasi_shuffle(u, v, graded=kind.graded).with_kind(YTILDE)


def lincomb_product(a, b, kind):
    """
    Bilinear extension of product; coefficients multiply in Q or Q[h, h^-1]
    """
    kind = kind if isinstance(kind, ProductKind) else ProductKind.from_name(kind)
    graded = kind.graded or a.graded or b.graded
    result = LinComb.zero(graded=graded, kind=kind.alphabet)
    for u, cu in a.items():
        for v, cv in b.items():
            result = result + product(u, v, kind) * (cu * cv)
    return result.with_kind(kind.alphabet)


def cache_info():
    """ memo statistics of the recursive products, for debug logs """
    info = {"shuffle": _shuffle.cache_info(), "quasi_shuffle": _quasi_shuffle.cache_info(),
            "q_shuffle": _q_shuffle.cache_info(), "q_quasi_shuffle": _q_quasi_shuffle.cache_info()}
    LOGGER.debug(f"product memo tables: {info}")
    return info


def shuffle_mass(u, v):
    """ C(|u|+|v|, |u|), the number of shuffles """
    return comb(len(u) + len(v), len(u))
