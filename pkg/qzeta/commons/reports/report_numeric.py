import pandas as pd

from qzeta.commons.reports.report import Report


class Report_Numeric(Report):
    """Class to make report with a truncated sum at a point q0.
    """

    def create_data(self):
        doc = self.input_object.to_dict()
        return pd.DataFrame([[str(v) for v in doc.values()]], columns=list(doc), index=["value"])

    def to_json(self):
        return self.dumps(self.input_object.to_dict())
