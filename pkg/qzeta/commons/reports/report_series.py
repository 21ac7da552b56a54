import pandas as pd

from qzeta.algebra.coeffs import format_rational
from qzeta.commons.reports.report import Report


class Report_Series(Report):
    """Class to make report with the coefficients of a truncated series.
    """

    def __init__(self, input_object, output_type="text"):
        """Init function of the Report_Series object.

        Parameters
        ----------
        input_object : QSeries or XSeries
        output_type : str
        """
        super().__init__(input_object, output_type)

    def create_data(self):
        series = self.input_object
        coeffs = [format_rational(c) for c in series.coeffs]
        return pd.DataFrame({"degree": range(len(coeffs)), "coefficient": coeffs}).set_index("degree")

    def to_json(self):
        return self.dumps(self.input_object.to_json())

    def to_terminal(self):
        return f"# series in {self.input_object.var}\n\n{self.input_object}\n\n" + self.df_to_md(self.create_data())
