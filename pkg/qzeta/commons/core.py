"""
 abstract module to implement generic classes as base for implemented classes
"""


class BaseTool(object):
    """
    Base class for the qzeta tools, callable.

    A tool is built from a validated configuration dict and, once called,
    returns the rendered report together with the exit status.
    """

    def __call__(self):
        raise NotImplementedError

    @staticmethod
    def exit_status(passed):
        """0 when every check passed, 1 otherwise."""
        return 0 if passed else 1
