"""
Series tool: the value of one word, as a truncated series or at a point q0.

* no q0: the series in q of the modified or the non modified value, or the
  series in 1/q of the Schlesinger value
* q0: the truncated nested sum at q0 with its tail bound
"""
from qzeta.algebra.words import W, YTILDE, parse_word
from qzeta.commons.core import BaseTool
from qzeta.commons.reports.report_factory import Report_Factory
from qzeta.evaluator.config import EvalConfig, Model
from qzeta.evaluator.numeric import numeric_eval
from qzeta.evaluator.series import qinverse_series, word_series


def read_composition(text):
    """ z(n1,...) or a p/d/y word """
    return parse_word(text, YTILDE if text.strip().startswith("z") else W)


class Series(BaseTool):
    """Evaluate one word under an EvalConfig.
    """

    def __init__(self, word, format="text", **eval_conf):
        """Init function of Series class.

        Parameters
        ----------
        word : str
        format : str
            text or json, by default text.
        eval_conf : dict
            order, pathway, model, q0 and term_cap, see EvalConfig.
        """
        self.word = read_composition(word)
        self.cfg = EvalConfig.from_dict(eval_conf)
        self.output_type = format

    def evaluate(self):
        if self.cfg.q0 is not None:
            return numeric_eval(self.word, self.cfg)
        if self.cfg.model is Model.SCHLESINGER:
            return qinverse_series(self.word, self.cfg.order, schlesinger=True)
        return word_series(self.word, self.cfg)

    def __call__(self):
        return Report_Factory(self.evaluate(), self.output_type).create_report(), self.exit_status(True)
