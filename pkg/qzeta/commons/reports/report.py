"""Module allowing the construction of reports for the expand, series, verify and limit tools.
A report is rendered either as a single json document or as markdown tables for the
terminal. The rendered text is returned, the tool prints it once on the standard output.
"""
import json

import numpy as np
import pandas as pd

PADDING = 1
OUTPUT_TYPES = ("text", "json")


class Report(object):

    def __init__(self, input_object, output_type="text"):
        """Init function for the report class

        Parameters
        ----------
        input_object : LinComb/QSeries/NumericResult/SuiteRun
            Object on which the report will be made.
        output_type : str
            text or json, by default text.
        """
        self.input_object = input_object
        self.output_type = output_type if output_type in OUTPUT_TYPES else "text"
        self.padding = PADDING

    def create_data(self):
        """Build the dataframe of the terminal table."""
        return pd.DataFrame()

    def create_report(self):
        """Render the report in the requested output type.

        Returns
        -------
        str
        """
        if self.output_type == "json":
            return self.to_json()
        return self.to_terminal()

    @staticmethod
    def dumps(doc):
        """ one json document, exact values already turned into strings """
        return json.dumps(doc, indent=2, default=str)

    @staticmethod
    def cell(value):
        if isinstance(value, float) and np.isnan(value):
            return "NaN"
        return str(value)

    def df_to_md(self, df):
        """Render a dataframe as a markdown table, index first, cells centred.

        Parameters
        ----------
        df : pd.DataFrame
            DataFrame with the values to export.

        Returns
        -------
        str
            the table, or ``(empty)`` for an empty frame
        """
        if df.empty:
            return "(empty)"
        columns = [[self.cell(col)] + [self.cell(value) for value in df[col]] for col in df.columns]
        columns.insert(0, [""] + [self.cell(index) for index in df.index])
        widths = [max(len(text) for text in column) + 2 * self.padding for column in columns]

        def row(i):
            return "|" + "|".join(f"{column[i]:^{width}}" for column, width in zip(columns, widths)) + "|"

        separator = "|" + "|".join("-" * width for width in widths) + "|"
        return "\n".join([row(0), separator] + [row(i) for i in range(1, len(df.index) + 1)])

    def to_json(self):
        """Create a report in the json format."""
        raise NotImplementedError

    def to_terminal(self):
        """Create a report with markdown tables."""
        return self.df_to_md(self.create_data())
