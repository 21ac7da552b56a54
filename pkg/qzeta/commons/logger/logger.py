""" QZeta logger helpers

One logger per name: asking twice for the same name is an error, so the
package logger is created once in ``qzeta/__init__.py``. Handlers write to
stderr, leaving stdout to the reports.
"""
import logging
import sys

RESET = "\x1b[0m"
LEVEL_COLORS = {
    logging.DEBUG: "\x1b[35;1m",
    logging.INFO: "\x1b[38;21m",
    logging.WARNING: "\x1b[33;21m",
    logging.ERROR: "\x1b[31;21m",
    logging.CRITICAL: "\x1b[31;1m",
}
LINE_FORMAT = "%(asctime)s %(name)s [%(levelname)s | %(module)s:%(lineno)s] > %(message)s"
DATE_FORMAT = "%H:%M:%S"


class ColoredFormatter(logging.Formatter):
    """
    Formatter coloring each record by level; colors are left out when the
    stream is not a terminal so redirected logs stay plain text
    """

    def __init__(self, colored=True):
        super().__init__(LINE_FORMAT, DATE_FORMAT)
        self._formatters = {
            level: logging.Formatter(color + LINE_FORMAT + RESET if colored else LINE_FORMAT, DATE_FORMAT)
            for level, color in LEVEL_COLORS.items()
        }

    def format(self, record):
        formatter = self._formatters.get(record.levelno)
        return formatter.format(record) if formatter is not None else super().format(record)


def get_new_logger(name):
    """

    :param name: str name of your new logger
    :return: logging.Logger your new logger
    """
    if name in logging.root.manager.loggerDict:
        raise Exception("{} exists already".format(name))

    log = logging.getLogger(name)
    log.setLevel(logging.DEBUG)
    log.propagate = False
    return log


def get_stream_handler(level=logging.DEBUG, stream=None):
    """

    Parameters
    ----------
    level : int
        logging level of the handler
    stream : file-like, optional
        defaults to the current ``sys.stderr``

    Returns
    -------
    StreamHandler with the colored formatter
    """
    stream = stream if stream is not None else sys.stderr
    handler = logging.StreamHandler(stream)
    handler.setLevel(level)
    handler.setFormatter(ColoredFormatter(colored=hasattr(stream, "isatty") and stream.isatty()))
    return handler
