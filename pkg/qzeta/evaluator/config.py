"""Evaluation settings shared by the series and numeric evaluators."""
from enum import Enum, unique
from fractions import Fraction

from qzeta.commons.exception import QZetaError, ErrorCodes
from qzeta.commons.guard import non_negative_guard, positive_guard, inside_unit_disc_guard, outside_unit_disc_guard

ORDER = 20
TERM_CAP = 200
TOLERANCE = 0.05


@unique
class Pathway(Enum):
    DIRECT_SUM = "sum"
    JACKSON = "jackson"
    BOTH = "both"

    @classmethod
    def from_name(cls, name):
        if isinstance(name, cls):
            return name
        if name == "direct_sum":
            return cls.DIRECT_SUM
        try:
            return cls(name)
        except ValueError as error:
            raise QZetaError(ErrorCodes.ERR_INVALID_ARGUMENT,
                             f"unknown pathway {name!r}, expected one of {[p.value for p in cls]}", stack_trace=error)


@unique
class Model(Enum):
    MODIFIED = "modified"
    NONMODIFIED = "nonmodified"
    SCHLESINGER = "schlesinger"

    @classmethod
    def from_name(cls, name):
        if isinstance(name, cls):
            return name
        try:
            return cls(name)
        except ValueError as error:
            raise QZetaError(ErrorCodes.ERR_INVALID_ARGUMENT,
                             f"unknown model {name!r}, expected one of {[m.value for m in cls]}", stack_trace=error)


def parse_q0(value):
    """
    A rational text "p/q" (or an integer) gives an exact Fraction, a decimal
    text or a float gives a float.
    """
    if value is None or isinstance(value, (Fraction, float)):
        return value
    if isinstance(value, int):
        return Fraction(value)
    text = str(value).strip()
    try:
        if any(c in text for c in ".eE") or text.lower() in ("inf", "nan"):
            return float(text)
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as error:
        raise QZetaError(ErrorCodes.ERR_PARSE, f"cannot read q0 from {value!r}", stack_trace=error)


class EvalConfig(object):
    """
    Immutable evaluation settings.

    Attributes
    ----------
    order : int
        truncation degree of series
    pathway : Pathway
    model : Model
    q0 : Fraction, float or None
        point of numeric evaluation, Fraction selects exact arithmetic
    term_cap : int
        largest outer summation index in numeric mode
    tolerance : float
    """

    __slots__ = ("_order", "_pathway", "_model", "_q0", "_term_cap", "_tolerance")

    def __init__(self, order=ORDER, pathway=Pathway.DIRECT_SUM, model=Model.MODIFIED, q0=None,
                 term_cap=TERM_CAP, tolerance=TOLERANCE):
        non_negative_guard(order, "order")
        positive_guard(term_cap, "term_cap")
        if not tolerance > 0:
            raise QZetaError(ErrorCodes.ERR_INVALID_ARGUMENT, f"tolerance must be positive, got {tolerance}")
        self._order = int(order)
        self._pathway = Pathway.from_name(pathway)
        self._model = Model.from_name(model)
        self._q0 = parse_q0(q0)
        self._term_cap = int(term_cap)
        self._tolerance = float(tolerance)
        if self._q0 is not None:
            if self._model is Model.MODIFIED:
                inside_unit_disc_guard(self._q0, self._model.value)
            elif self._model is Model.SCHLESINGER:
                outside_unit_disc_guard(self._q0, self._model.value)

    @classmethod
    def from_dict(cls, conf):
        """ from a validated tool configuration, unknown keys are ignored """
        return cls(order=conf.get("order", ORDER),
                   pathway=conf.get("pathway", Pathway.DIRECT_SUM),
                   model=conf.get("model", Model.MODIFIED),
                   q0=conf.get("q0"),
                   term_cap=conf.get("term_cap", TERM_CAP),
                   tolerance=conf.get("tol", TOLERANCE))

    def replace(self, **changes):
        values = {"order": self._order, "pathway": self._pathway, "model": self._model, "q0": self._q0,
                  "term_cap": self._term_cap, "tolerance": self._tolerance}
        values.update(changes)
        return EvalConfig(**values)

    @property
    def order(self):
        return self._order

    @property
    def pathway(self):
        return self._pathway

    @property
    def model(self):
        return self._model

    @property
    def q0(self):
        return self._q0

    @property
    def term_cap(self):
        return self._term_cap

    @property
    def tolerance(self):
        return self._tolerance

    @property
    def exact(self):
        return isinstance(self._q0, Fraction)

    def to_dict(self):
        return {"order": self._order, "pathway": self._pathway.value, "model": self._model.value,
                "q0": None if self._q0 is None else str(self._q0), "term_cap": self._term_cap,
                "tol": self._tolerance}

    def __eq__(self, other):
        if not isinstance(other, EvalConfig):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __hash__(self):
        return hash(tuple(sorted(self.to_dict().items())))

    def __repr__(self):
        return f"EvalConfig({self.to_dict()})"
