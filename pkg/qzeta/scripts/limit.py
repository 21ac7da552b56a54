"""
Limit tool: (1 - q)^weight z̄_q(w) along a grid of q tending to 1, against zeta(w).
"""
from qzeta.algebra.words import format_word, weight
from qzeta.commons.core import BaseTool
from qzeta.commons.reports.report_factory import Report_Factory
from qzeta.evaluator.config import EvalConfig
from qzeta.evaluator.numeric import zeta_numeric
from qzeta.identities.numeric_checks import verify_limit
from qzeta.identities.suites import SuiteRun
from qzeta.scripts.series import read_composition

GRID = (0.9, 0.99, 0.999)


class Limit(BaseTool):
    """Abel limit of one convergent word.
    """

    def __init__(self, word="z(2)", grid=GRID, target=None, tol=0.05, term_cap=200, format="text"):
        """Init function of Limit class.

        Parameters
        ----------
        word : str
            convergent word, n_1 >= 2 and n_j >= 1.
        grid : list of float
            increasing points of (0, 1).
        target : float, optional
            the limit; zeta(w) when not given.
        tol : float
            bound on the distance at the last point, by default 0.05.
        term_cap : int
            floor of the outer cap at each point, by default 200.
        format : str
            text or json, by default text.
        """
        self.word = read_composition(word)
        self.grid = tuple(grid)
        self.cfg = EvalConfig(term_cap=term_cap, tolerance=tol)
        self.target = target
        self.output_type = format

    def __call__(self):
        target = self.target if self.target is not None else zeta_numeric(self.word).value
        report = verify_limit(self.word, self.grid, target, self.cfg.tolerance, self.cfg)
        params = {"word": format_word(self.word), "weight": weight(self.word), "grid": list(self.grid)}
        run = SuiteRun("limit", params, [report])
        return Report_Factory(run, self.output_type).create_report(), self.exit_status(run.passed)
