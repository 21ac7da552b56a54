import pandas as pd

from qzeta.commons.reports.report import Report


def _params_text(params):
    return ", ".join(f"{k}={v}" for k, v in params.items())


def _witness_text(witness):
    if not witness:
        return ""
    return ", ".join(f"{k}={v}" for k, v in witness.items())


class Report_Check(Report):
    """Class to make report with the check reports of a suite run.
    """

    def __init__(self, input_object, output_type="text"):
        """Init function of the Report_Check object.

        Parameters
        ----------
        input_object : SuiteRun
            Suite name, its parameters and the list of CheckReport.
        output_type : str
        """
        super().__init__(input_object, output_type)

    def create_data(self):
        rows = [(r.name, _params_text(r.params), "pass" if r.passed else "FAIL", _witness_text(r.witness))
                for r in self.input_object.reports]
        return pd.DataFrame(rows, columns=["name", "params", "result", "witness"],
                            index=range(1, len(rows) + 1))

    def notes_data(self):
        """ one row per note, failing checks first """
        reports = sorted(enumerate(self.input_object.reports, start=1), key=lambda pair: pair[1].passed)
        rows = [(i, note) for i, report in reports for note in report.notes]
        return pd.DataFrame(rows, columns=["check", "note"], index=range(1, len(rows) + 1))

    def to_json(self):
        return self.dumps(self.input_object.to_dict())

    def to_terminal(self):
        run = self.input_object
        failed = sum(1 for r in run.reports if not r.passed)
        md_text = f"# qzeta - {run.name}" + \
            "\n\n" + \
            f"* {len(run.reports)} checks, {len(run.reports) - failed} passed, {failed} failed" + \
            f"\n* parameters: {_params_text(run.params)}" + \
            "\n\n" + \
            "## Checks" + \
            "\n\n" + \
            self.df_to_md(self.create_data())
        notes = self.notes_data()
        if not notes.empty:
            md_text += "\n\n## Notes\n\n" + self.df_to_md(notes)
        return md_text
