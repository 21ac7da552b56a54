"""
Module to define custom exception
"""
from enum import Enum, unique, auto
import traceback


class QZetaError(Exception):
    """
    Custom Exception for the qzeta project
    """

    def __init__(self, error_code, message='', stack_trace=None):
        """

        Parameters
        ----------
        error_code : ErrorCodes
         code of the error
        message : str
        stack_trace : object
         trace of python Exception possibly with this error
        """

        # Raise a separate exception in case the error code passed isn't specified in the ErrorCodes enum
        if not isinstance(error_code, ErrorCodes):

            msg = f'Error code passed in the error_code param must be of type {ErrorCodes.__name__}'
            raise QZetaError(ErrorCodes.ERR_INCORRECT_ERRCODE, msg)

        self.error_code = error_code
        self.message = str(message)

        # only meaningful when raised from an except block
        self.traceback = traceback.format_exc()

        self.stack_trace = stack_trace if stack_trace is not None else ""

        msg = f"{self.message} \n error code : {str(self.error_code)}"
        if self.stack_trace:
            msg += f" \n stack trace: {str(self.stack_trace)}"

        super().__init__(msg)


@unique
class ErrorCodes(Enum):
    """Error codes for all module exceptions

    """

    ER_DEFAULT = auto()

    """  error code passed is not specified in enum ErrorCodes """
    ERR_INCORRECT_ERRCODE = auto()

    """ happens on an exact division by zero """
    ERR_DIVISION_BY_ZERO = auto()

    """ happens when a series must be inverted but has no constant term """
    ERR_NOT_INVERTIBLE = auto()

    """ happens when an operator of the (t, q) calculus receives a series with a t^0 term """
    ERR_NOT_IN_ALGEBRA = auto()

    """ happens when a generator function cannot be represented as a power series """
    ERR_UNSUPPORTED_GENERATOR = auto()

    """ happens when a letter sequence does not reduce to a word ending with y """
    ERR_NOT_A_W_WORD = auto()

    """ happens when a word, a rational or a range cannot be parsed """
    ERR_PARSE = auto()

    """ happens when an argument is outside its admissible values """
    ERR_INVALID_ARGUMENT = auto()

    """ happens when a numeric evaluation is requested outside its convergence domain """
    ERR_DOMAIN = auto()

    """ happens when a classical zeta value is requested for a divergent word """
    ERR_DIVERGENT_WORD = auto()

    """ happens when the precondition of a verifier is not met """
    ERR_PRECONDITION = auto()

    """ happens when the two series evaluation pathways disagree """
    ERR_PATHWAY_MISMATCH = auto()

    """ happens when the opening of a file raises an IO error """
    ERR_IO = auto()

    """ happens when a json schema validation raises an error"""
    ERR_JSON_SCHEMA_ERROR = auto()

    """ happens when something goes wrong in main configuration """
    ERR_MAIN_CONF_ERROR = auto()

    @property
    def is_usage_error(self):
        """True for errors caused by the user input rather than by a failed computation."""
        return self not in (ErrorCodes.ERR_PATHWAY_MISMATCH, ErrorCodes.ER_DEFAULT)

    def __str__(self):
        """

        Returns
        -------
        str, str
         name of enum member, value of enum member
        """
        return f"name of error: {self.name}, code value of error: {self.value}"
