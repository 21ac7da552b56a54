from qzeta.commons.reports.report_check import Report_Check
from qzeta.commons.reports.report_expand import Report_Expand
from qzeta.commons.reports.report_numeric import Report_Numeric
from qzeta.commons.reports.report_series import Report_Series


def Report_Factory(input_object, output_type="text"):
    """Function assigning which class should be used.

    Parameters
    ----------
    input_object : LinComb/QSeries/XSeries/NumericResult/SuiteRun
        Input object to use to create a report.
    output_type : str
        text or json.

    Returns
    -------
    Report
        An object making the report.
    """
    reports = {"LinComb": Report_Expand,
               "QSeries": Report_Series,
               "XSeries": Report_Series,
               "NumericResult": Report_Numeric,
               "SuiteRun": Report_Check}
    return reports[input_object.__class__.__name__](input_object, output_type)
