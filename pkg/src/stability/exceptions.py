"""
Closed-loop stability related exceptions.
"""

from src.utils.exceptions import NuGapException


class NominalLoopUnstable(NuGapException):
    """
    Raised when a robustness probe is asked about a loop that isn't stable
    to begin with.

    :attr LoopReport report: The failed nominal check.
    """

    def __init__(self, message, report=None):
        NuGapException.__init__(self, message)
        self.report = report


class RobustnessViolation(NuGapException):
    """
    Raised when a probe finds a destabilized neighbour at zero distance
    from a stabilized plant.

    :attr list results: The probe results gathered so far.
    """

    def __init__(self, message, results=None):
        NuGapException.__init__(self, message)
        self.results = list(results or [])
