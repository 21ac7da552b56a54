"""Check reports shared by every verifier.

A :class:`CheckReport` holds the residual of an identity, which should be zero,
and the first place where the two sides part. A verifier built from several
sub-checks folds them with :meth:`CheckReport.combine`.
"""
from qzeta import LOGGER
from qzeta.algebra.coeffs import format_rational
from qzeta.algebra.powerseries import QSeries
from qzeta.algebra.words import LinComb, format_word

# float slack on top of the summation tails of classical values
ROUNDING = 1e-9


class CheckReport(object):
    """
    Outcome of one identity check.

    Attributes
    ----------
    name : str
        identity label
    params : dict
        echo of the inputs, JSON friendly
    passed : bool
    residual : QSeries, LinComb, float or None
        lhs - rhs
    witness : dict or None
        first discrepant coefficient, {"degree", "lhs", "rhs"} and for word
        residuals the discrepant "word"
    notes : list of str
    """

    __slots__ = ("name", "params", "passed", "residual", "witness", "notes")

    def __init__(self, name, params, passed, residual=None, witness=None, notes=None):
        self.name = name
        self.params = params
        self.passed = bool(passed)
        self.residual = residual
        self.witness = witness
        self.notes = list(notes or [])

    @classmethod
    def combine(cls, name, params, parts, notes=None):
        """
        One report for a list of sub-checks: passes when all of them do, the
        witness and the residual come from the first failing one
        """
        failing = [part for part in parts if not part.passed]
        summary = [f"{part.name}: {'pass' if part.passed else 'FAIL'}" for part in parts]
        for part in parts:
            summary.extend(f"{part.name}: {note}" for note in part.notes)
        first = failing[0] if failing else None
        witness = dict(first.witness, check=first.name) if first is not None and first.witness else None
        return cls(name, params, not failing, residual=first.residual if first is not None else None,
                   witness=witness, notes=summary + list(notes or []))

    def to_dict(self):
        return {"name": self.name, "params": self.params, "pass": self.passed, "witness": self.witness,
                "notes": self.notes}

    def __repr__(self):
        return f"CheckReport({self.name}, pass={self.passed})"


def series_witness(lhs, rhs):
    """
    First degree where two series differ, None when they agree up to the
    smaller order
    """
    for n in range(min(lhs.order, rhs.order) + 1):
        if lhs[n] != rhs[n]:
            return {"degree": n, "lhs": format_rational(lhs[n]), "rhs": format_rational(rhs[n])}
    return None


def lincomb_witness(lhs, rhs):
    """ first word, in canonical order, whose coefficients differ """
    difference = lhs - rhs
    if difference.is_zero():
        return None
    w = difference.words()[0]
    return {"degree": len(w), "word": format_word(w, lhs.kind), "lhs": str(lhs.coeff(w)), "rhs": str(rhs.coeff(w))}


def series_check(name, params, lhs, rhs, notes=None):
    """ exact comparison of two series """
    witness = series_witness(lhs, rhs)
    if witness is not None:
        LOGGER.debug(f"{name} {params}: sides differ at q^{witness['degree']}")
    return CheckReport(name, params, witness is None, residual=lhs - rhs, witness=witness, notes=notes)


def lincomb_check(name, params, lhs, rhs, notes=None):
    """ exact comparison of two word combinations """
    witness = lincomb_witness(lhs, rhs)
    return CheckReport(name, params, witness is None, residual=lhs - rhs, witness=witness, notes=notes)


def numeric_check(name, params, lhs, rhs, allowance, notes=None):
    """
    |lhs - rhs| <= allowance, the allowance gathering tails and tolerance
    """
    residual = lhs - rhs
    passed = abs(float(residual)) <= allowance
    witness = None if passed else {"degree": None, "lhs": str(lhs), "rhs": str(rhs)}
    notes = list(notes or []) + [f"|lhs - rhs| = {abs(float(residual)):.3e}, allowance {allowance:.3e}"]
    return CheckReport(name, params, passed, residual=residual, witness=witness, notes=notes)


def residual_text(residual):
    """ short text rendering of a residual for the terminal report """
    if residual is None:
        return ""
    if isinstance(residual, QSeries):
        first = residual.first_nonzero()
        return "0" if first is None else f"{format_rational(residual[first])}*q^{first} + ..."
    if isinstance(residual, LinComb):
        return str(residual)
    return f"{float(residual):.3e}"
