import time

from qzeta import LOGGER


def format_duration(seconds):
    """hh:mm:ss.mmm rendering of a duration in seconds"""
    millis = int(round(seconds * 1000))
    minutes, millis = divmod(millis, 60_000)
    hours, minutes = divmod(minutes, 60)
    return f"{hours:02d}h:{minutes:02d}m:{millis / 1000:06.3f}s"


class Timer:
    """
    Context manager logging the wall time of a code block at debug level.

    Example
    -------

    with Timer("Verify"):
        run_suite("all", context)
    """

    def __init__(self, name=None):
        self.name = name
        self.start = None
        self.duration = None

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        self.duration = time.perf_counter() - self.start
        label = f" '{self.name}'" if self.name else ""
        LOGGER.debug(f"Code block{label} took: {format_duration(self.duration)}")
