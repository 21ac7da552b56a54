import pandas as pd

from qzeta.algebra.words import format_word
from qzeta.commons.reports.report import Report


class Report_Expand(Report):
    """Class to make report with the word combination of a product.
    """

    def __init__(self, input_object, output_type="text"):
        """Init function of the Report_Expand object.

        Parameters
        ----------
        input_object : LinComb
            Expanded product, coefficients in Q or Q[h, h^-1].
        output_type : str
        """
        super().__init__(input_object, output_type)

    def create_data(self):
        lincomb = self.input_object
        rows = [(format_word(w, lincomb.kind), str(c)) for w, c in lincomb.items()]
        return pd.DataFrame(rows, columns=["word", "coefficient"], index=range(1, len(rows) + 1))

    def to_json(self):
        return self.dumps(self.input_object.to_json())

    def to_terminal(self):
        lincomb = self.input_object
        header = f"# {len(lincomb)} words over {lincomb.ring}\n\n{lincomb}"
        return header + "\n\n" + self.df_to_md(self.create_data())
