"""
Chordal distance and nu-metric related exceptions.
"""

from src.utils.exceptions import NuGapException


class PointEvaluationFailed(NuGapException):
    """
    Raised by pointwise evaluations when a factor can't be evaluated.

    :attr EvalStatus status: Why.
    """

    def __init__(self, message, status):
        NuGapException.__init__(self, message)
        self.status = status


class NotCoprimeAtPoint(PointEvaluationFailed):
    """
    Raised when both factors of a plant vanish at the same point, leaving
    the chordal density undefined there.
    """

    pass
