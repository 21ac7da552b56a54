"""Words and their linear combinations.

A single integer tuple, the composition (n1, ..., nk), stands for the word
z_n1 ... z_nk of the z-alphabet as well as for p^n1 y ... p^nk y of the
{p, d, y} alphabet (with dp = pd = 1). Classical x-words are tuples over
{0, 1} (0 for x0, 1 for x1) and classical y-words are tuples of positive
integers, so every alphabet shares the same :class:`LinComb` container.
"""
import re
from fractions import Fraction
from itertools import product
from types import MappingProxyType

from qzeta.algebra.coeffs import LaurentPoly, to_rational, format_rational, parse_rational
from qzeta.commons.exception import QZetaError, ErrorCodes

W, YTILDE, X, Y = "W", "Ytilde", "X", "Y"
WORD_KINDS = (W, YTILDE, X, Y)

RING_Q = "Q"
RING_LAURENT = "Q[h,h^-1]"

LETTERS = ("p", "d", "y")


def normalize_letters(letters):
    """
    Normal form p^n1 y ... p^nk y of a sequence over {p, d, y}

    Parameters
    ----------
    letters : iterable of str
     each one of p, d, y

    Returns
    -------
    tuple of int

    Raises
    ------
    QZetaError
     ERR_NOT_A_W_WORD when a non empty sequence does not end with y
    """
    letters = list(letters)
    composition = []
    pending = 0
    for position, letter in enumerate(letters):
        if letter == "p":
            pending += 1
        elif letter == "d":
            pending -= 1
        elif letter == "y":
            composition.append(pending)
            pending = 0
        else:
            raise QZetaError(ErrorCodes.ERR_NOT_A_W_WORD,
                             f"unknown letter {letter!r} at position {position}, expected one of {LETTERS}")
    if letters and letters[-1] != "y":
        raise QZetaError(ErrorCodes.ERR_NOT_A_W_WORD, f"{' '.join(letters)} does not end with y")
    return tuple(composition)


def expand_letters(w):
    """ letter sequence of a composition, d^|n| for negative n """
    letters = []
    for n in w:
        letters.extend(["p"] * n if n >= 0 else ["d"] * (-n))
        letters.append("y")
    return tuple(letters)


def word_stats(w):
    """
    Parameters
    ----------
    w : tuple of int

    Returns
    -------
    depth, length, weight : int, int, int
     k, k + sum |n_i|, sum n_i
    """
    return len(w), len(w) + sum(abs(n) for n in w), sum(w)


def weight(w):
    return sum(w)


def s_map(u):
    """ y_n -> x0^(n-1) x1, with x-words as tuples over {0, 1} """
    x_word = []
    for n in u:
        if n < 1:
            raise QZetaError(ErrorCodes.ERR_INVALID_ARGUMENT, f"y-letters are positive, got y{n}")
        x_word.extend([0] * (n - 1))
        x_word.append(1)
    return tuple(x_word)


def s_inverse(x_word):
    """ left inverse of s_map, defined on x-words that are empty or end with x1 """
    if x_word and x_word[-1] != 1:
        raise QZetaError(ErrorCodes.ERR_INVALID_ARGUMENT,
                         f"{format_word(x_word, X)} does not end with x1 and has no preimage under s")
    u = []
    zeros = 0
    for letter in x_word:
        if letter == 0:
            zeros += 1
        else:
            u.append(zeros + 1)
            zeros = 0
    return tuple(u)


def r_map(u):
    """ z_n -> p^n y; a cast, both sides share the composition tuple """
    return tuple(u)


def enumerate_words(max_depth, low, high, min_depth=1):
    """
    All compositions with min_depth <= depth <= max_depth and entries in [low, high]

    Returns
    -------
    list of tuple
     in canonical order
    """
    words = []
    for depth in range(min_depth, max_depth + 1):
        words.extend(product(range(low, high + 1), repeat=depth))
    return sorted(words, key=canonical_key)


def enumerate_x_words(max_length):
    words = []
    for length in range(max_length + 1):
        words.extend(product((0, 1), repeat=length))
    return words


def canonical_key(w):
    """ by depth, then reverse lexicographic on exponents """
    return len(w), tuple(-n for n in w)


# parsing and formatting

_INT = r"[+-]?\d+"
_Z_WORD = re.compile(r"^\s*z\s*\((?P<body>[^)]*)\)\s*$")
_Y_WORD = re.compile(r"^\s*y\s*\((?P<body>[^)]*)\)\s*$")
_W_TOKEN = re.compile(rf"p\^(?P<exp>{_INT})|p|d|y")
_X_TOKEN = re.compile(r"x(?P<index>[01])")
_EMPTY = ("", "1")


def _parse_int_list(text, body_start, body):
    if not body.strip():
        return ()
    values = []
    offset = 0
    for part in body.split(","):
        if not re.fullmatch(rf"\s*{_INT}\s*", part):
            raise QZetaError(ErrorCodes.ERR_PARSE,
                             f"expected a signed integer at position {body_start + offset} in {text!r}")
        values.append(int(part))
        offset += len(part) + 1
    return tuple(values)


def parse_word(text, kind=YTILDE):
    """
    Read a word in one of the four grammars

    Parameters
    ----------
    text : str
     Ytilde ``z(2,-1)``; W ``p^-2 y p y`` (``1`` or empty for the empty word);
     X ``x0x1x1``; Y ``y(2,1)``
    kind : str
     one of W, Ytilde, X, Y

    Returns
    -------
    tuple of int

    Raises
    ------
    QZetaError
     ERR_PARSE with the position of the first unreadable character
    """
    if kind in (YTILDE, Y):
        pattern = _Z_WORD if kind == YTILDE else _Y_WORD
        match = pattern.match(text)
        if match is None:
            raise QZetaError(ErrorCodes.ERR_PARSE,
                             f"{text!r} does not match {'z' if kind == YTILDE else 'y'}(n1,n2,...) at position 0")
        word = _parse_int_list(text, match.start("body"), match.group("body"))
        if kind == Y and any(n < 1 for n in word):
            raise QZetaError(ErrorCodes.ERR_PARSE, f"y-word entries must be positive in {text!r}")
        return word
    if kind == W:
        if text.strip() in _EMPTY:
            return ()
        letters = []
        for position, token in _scan(text, _W_TOKEN, separated=True):
            exponent = token.group("exp")
            if exponent is not None:
                n = int(exponent)
                letters.extend(["p"] * n if n >= 0 else ["d"] * (-n))
            else:
                letters.append(token.group(0))
        try:
            return normalize_letters(letters)
        except QZetaError as error:
            raise QZetaError(ErrorCodes.ERR_PARSE, f"{text!r} is not a W-word: {error.message}", stack_trace=error)
    if kind == X:
        if text.strip() in _EMPTY:
            return ()
        return tuple(int(token.group("index")) for _, token in _scan(text, _X_TOKEN, separated=False))
    raise QZetaError(ErrorCodes.ERR_INVALID_ARGUMENT, f"unknown word kind {kind}, expected one of {WORD_KINDS}")


def _scan(text, token_pattern, separated):
    """ yields (position, match) for each token, whitespace allowed between tokens """
    position = 0
    previous_end = None
    while position < len(text):
        if text[position].isspace():
            position += 1
            continue
        match = token_pattern.match(text, position)
        if match is None or (separated and previous_end == position):
            raise QZetaError(ErrorCodes.ERR_PARSE, f"unexpected character {text[position]!r} at position {position}"
                                                   f" in {text!r}")
        yield position, match
        previous_end = position = match.end()


def format_word(w, kind=YTILDE):
    """ inverse of parse_word """
    if kind == YTILDE:
        return f"z({','.join(str(n) for n in w)})"
    if kind == Y:
        return f"y({','.join(str(n) for n in w)})"
    if not w:
        return "1"
    if kind == X:
        return "".join(f"x{letter}" for letter in w)
    if kind == W:
        blocks = []
        for n in w:
            if n == 0:
                blocks.append("y")
            elif n == 1:
                blocks.append("p y")
            elif n == -1:
                blocks.append("d y")
            else:
                blocks.append(f"p^{n} y")
        return " ".join(blocks)
    raise QZetaError(ErrorCodes.ERR_INVALID_ARGUMENT, f"unknown word kind {kind}, expected one of {WORD_KINDS}")


class LinComb(object):
    """
    Finite linear combination of words.

    Coefficients are Fractions (ring Q) or LaurentPoly (ring Q[h,h^-1]);
    zero coefficients are never stored. ``kind`` only drives formatting.
    """

    __slots__ = ("_terms", "_graded", "_kind")

    def __init__(self, terms=None, graded=False, kind=YTILDE):
        self._graded = graded
        self._kind = kind
        collected = {}
        if terms:
            for w, c in (terms.items() if hasattr(terms, "items") else terms):
                w = tuple(w)
                c = self._coerce(c)
                collected[w] = collected[w] + c if w in collected else c
        self._terms = {w: c for w, c in collected.items() if c}

    def _coerce(self, c):
        if self._graded:
            if isinstance(c, LaurentPoly):
                return c
            return LaurentPoly.constant(c)
        if isinstance(c, LaurentPoly):
            raise QZetaError(ErrorCodes.ERR_INVALID_ARGUMENT, "a Laurent coefficient in a combination over Q")
        return to_rational(c)

    @classmethod
    def single(cls, w, coeff=1, graded=False, kind=YTILDE):
        return cls({tuple(w): coeff}, graded=graded, kind=kind)

    @classmethod
    def zero(cls, graded=False, kind=YTILDE):
        return cls({}, graded=graded, kind=kind)

    @property
    def graded(self):
        return self._graded

    @property
    def ring(self):
        return RING_LAURENT if self._graded else RING_Q

    @property
    def kind(self):
        return self._kind

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def coeff(self, w):
        w = tuple(w)
        if w in self._terms:
            return self._terms[w]
        return LaurentPoly() if self._graded else Fraction(0)

    def words(self):
        return sorted(self._terms, key=canonical_key)

    def items(self):
        """ terms in canonical order """
        return [(w, self._terms[w]) for w in self.words()]

    def __iter__(self):
        return iter(self.words())

    def __len__(self):
        return len(self._terms)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def with_kind(self, kind):
        return LinComb(self._terms, graded=self._graded, kind=kind)

    def graded_copy(self):
        """ the same combination with Laurent coefficients """
        return LinComb(self._terms, graded=True, kind=self._kind)

    def at_one(self):
        """ h := 1, back to rational coefficients """
        if not self._graded:
            return self
        return LinComb({w: c.at_one() for w, c in self._terms.items()}, graded=False, kind=self._kind)

    def map_words(self, func):
        """ linear extension of a word map, func(w) -> LinComb """
        graded = self._graded
        result = {}
        for w, c in self._terms.items():
            image = func(w)
            graded = graded or image.graded
            for w2, c2 in image.terms.items():
                result[w2] = result.get(w2, 0) + c * c2
        return LinComb(result, graded=graded, kind=self._kind)

    def _combine(self, other, sign):
        if not isinstance(other, LinComb):
            return NotImplemented
        graded = self._graded or other._graded
        terms = dict(self._terms)
        for w, c in other._terms.items():
            terms[w] = terms[w] + sign * c if w in terms else sign * c
        return LinComb(terms, graded=graded, kind=self._kind)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return LinComb({w: -c for w, c in self._terms.items()}, graded=self._graded, kind=self._kind)

    def __mul__(self, scalar):
        """ scalar multiplication by a rational or a LaurentPoly """
        if isinstance(scalar, LinComb):
            return NotImplemented
        graded = self._graded or isinstance(scalar, LaurentPoly)
        return LinComb({w: c * scalar for w, c in self._terms.items()}, graded=graded, kind=self._kind)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __str__(self):
        if not self._terms:
            return "0"
        text = ""
        for w, c in self.items():
            word = format_word(w, self._kind)
            if self._graded:
                text += f" + ({c}) {word}"
                continue
            sign = " - " if c < 0 else " + "
            magnitude = abs(c)
            text += sign + (word if magnitude == 1 else f"{format_rational(magnitude)} {word}")
        return text[3:] if text.startswith(" + ") else "-" + text[3:]

    def __repr__(self):
        return f"LinComb({self})"

    def to_json(self):
        return {
            "ring": self.ring,
            "alphabet": self._kind,
            "terms": [{"word": list(w), "coeff": str(c) if self._graded else format_rational(c)}
                      for w, c in self.items()],
        }

    @classmethod
    def from_json(cls, doc):
        ring = doc.get("ring", RING_Q)
        if ring not in (RING_Q, RING_LAURENT):
            raise QZetaError(ErrorCodes.ERR_PARSE, f"unknown coefficient ring {ring!r}")
        graded = ring == RING_LAURENT
        read = LaurentPoly.from_text if graded else parse_rational
        terms = [(tuple(term["word"]), read(term["coeff"])) for term in doc["terms"]]
        return cls(terms, graded=graded, kind=doc.get("alphabet", YTILDE))
