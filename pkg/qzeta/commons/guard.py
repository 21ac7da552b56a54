"""The Guardian Angel Of QZeta
Module to place every control checking function raising a QZetaError

"""
from qzeta.commons.exception import ErrorCodes, QZetaError
from qzeta import LOGGER


def non_negative_guard(value, name):
    """

    Parameters
    ----------
    value : int
    name : str
     name of the checked argument, used in the message

    Raises
    ------
    QZetaError
     ERR_INVALID_ARGUMENT when value < 0
    """
    if value < 0:
        raise QZetaError(ErrorCodes.ERR_INVALID_ARGUMENT, f"{name} must be non negative, got {value}")


def positive_guard(value, name):
    if value < 1:
        raise QZetaError(ErrorCodes.ERR_INVALID_ARGUMENT, f"{name} must be a positive integer, got {value}")


def precondition_guard(condition, message):
    """
    Raise ERR_PRECONDITION with message when condition does not hold
    """
    if not condition:
        LOGGER.debug(f"precondition violated: {message}")
        raise QZetaError(ErrorCodes.ERR_PRECONDITION, message)


def convergent_word_guard(w, error_code=ErrorCodes.ERR_DIVERGENT_WORD):
    """
    Check n_1 >= 2 and n_j >= 1, the classical convergence condition

    Parameters
    ----------
    w : tuple of int
    error_code : ErrorCodes
     code raised on violation

    Raises
    ------
    QZetaError
    """
    if len(w) == 0:
        raise QZetaError(error_code, "the empty word has no convergent iterated sum")
    if w[0] < 2:
        raise QZetaError(error_code, f"word {w} is divergent: the first index must be >= 2")
    if any(n < 1 for n in w[1:]):
        raise QZetaError(error_code, f"word {w} has an index < 1")


def inside_unit_disc_guard(q0, model):
    if not abs(q0) < 1:
        raise QZetaError(ErrorCodes.ERR_DOMAIN, f"the {model} model requires |q0| < 1, got q0 = {q0}")


def outside_unit_disc_guard(q0, model):
    if not abs(q0) > 1:
        raise QZetaError(ErrorCodes.ERR_DOMAIN, f"the {model} model requires |q0| > 1, got q0 = {q0}")


def schlesinger_word_guard(w):
    """
    n_1 >= 1 and n_j >= 0, where the numerator-free sums converge for |q0| > 1;
    wider than the classical n_1 >= 2, n_j >= 1 so that T_q images qualify

    Raises
    ------
    QZetaError
     ERR_DOMAIN naming the first violated index
    """
    domain = "the schlesinger domain is n_1 >= 1, n_j >= 0 (widened from n_1 >= 2, n_j >= 1)"
    if w and w[0] < 1:
        raise QZetaError(ErrorCodes.ERR_DOMAIN, f"word {w} violates n_1 >= 1 with n_1 = {w[0]}: {domain}")
    for j, n in enumerate(w[1:], start=2):
        if n < 0:
            raise QZetaError(ErrorCodes.ERR_DOMAIN, f"word {w} violates n_{j} >= 0 with n_{j} = {n}: {domain}")
