"""
Boundary sampling related exceptions.
"""

from src.utils.exceptions import NuGapException


class BadGridRange(NuGapException):
    """
    Raised for empty or inverted ranges, or too few points.
    """

    pass


class AllPointsFailed(NuGapException):
    """
    Raised when no sample on a contour could be evaluated.
    """

    pass


class ExcessiveFailures(NuGapException):
    """
    Raised when more samples failed than the configured fraction allows.

    :attr dict failures: Reason -> count.
    """

    def __init__(self, message, failures=None):
        NuGapException.__init__(self, message)
        self.failures = dict(failures or {})
