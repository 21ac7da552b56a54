"""
Verify tool: runs one verification suite, or all of them, and reports every check.
"""
import re

from qzeta import LOGGER
from qzeta.commons.core import BaseTool
from qzeta.commons.exception import QZetaError, ErrorCodes
from qzeta.commons.reports.report_factory import Report_Factory
from qzeta.evaluator.config import EvalConfig
from qzeta.identities.suites import OPERATOR_SAMPLES, SuiteContext, SuiteRun, run_suite

_RANGE = re.compile(r"^\s*(?P<low>[+-]?\d+)\s*\.\.\s*(?P<high>[+-]?\d+)\s*$")


def parse_range(text):
    """
    "lo..hi" as a pair of integers

    Raises
    ------
    QZetaError
     ERR_PARSE when the text does not match, ERR_INVALID_ARGUMENT when lo > hi
    """
    match = _RANGE.match(text)
    if match is None:
        raise QZetaError(ErrorCodes.ERR_PARSE, f"cannot read a range lo..hi from {text!r}")
    low, high = int(match.group("low")), int(match.group("high"))
    if low > high:
        raise QZetaError(ErrorCodes.ERR_INVALID_ARGUMENT, f"empty range {text!r}")
    return low, high


class Verify(BaseTool):
    """Run a verification suite.
    """

    def __init__(self, suite="all", max_depth=2, range="-2..2", seed=0, samples=OPERATOR_SAMPLES, format="text",
                 **eval_conf):
        """Init function of Verify class.

        Parameters
        ----------
        suite : str
            suite name or all, by default all.
        max_depth : int
            largest depth of the desk word set, by default 2.
        range : str
            exponent range lo..hi of the desk word set, by default -2..2.
        seed : int
            seed of every random draw, by default 0.
        samples : int
            random operator pairs per (a, b), by default 20.
        format : str
            text or json, by default text.
        eval_conf : dict
            order, pathway, model, q0, term_cap and tol, see EvalConfig.
        """
        low, high = parse_range(range)
        self.suite = suite
        self.context = SuiteContext(EvalConfig.from_dict(eval_conf), max_depth, low, high, seed, samples)
        self.params = {"order": self.context.cfg.order, "max_depth": max_depth, "range": f"{low}..{high}",
                       "seed": seed, "samples": samples}
        self.output_type = format

    def __call__(self):
        run = SuiteRun(self.suite, self.params, run_suite(self.suite, self.context))
        if not run.passed:
            LOGGER.error(f"suite {self.suite} failed")
        return Report_Factory(run, self.output_type).create_report(), self.exit_status(run.passed)
